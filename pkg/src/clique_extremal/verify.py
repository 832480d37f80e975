"""Exhaustive verification of the clique bounds over all labeled graphs.

A labeled graph on ``n`` vertices is an integer edge mask over the
``C(n, 2)`` vertex pairs in graph6 order (see
:func:`clique_extremal.graph.edge_slot`).  Masks are scanned in numpy
chunks.  Per chunk, every clique size is counted by testing each vertex
subset's edge mask against every graph at once.

For each report the harness finds the class maximum of one statistic
within one group of graphs (usually the graphs with ``m`` edges).  Ties go
to the graph whose graph6 string sorts first.  Class filters that numpy can
evaluate (degeneracy, maximum degree, clique-freeness) are applied per
chunk.  Minor-closed classes are tested one graph at a time in decreasing
order of the statistic, and each group stops at its first member, which is
the group maximum.
"""

from __future__ import annotations

import json
import os
import re
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Callable, Iterator

import numpy as np

from . import bounds
from .classes import DEFAULT_BUDGET, K5, K33, MinorSearchBudget, has_minor, is_planar
from .cliques import clique_census, count_cliques
from .graph import decode_graph6, edge_slots, encode_graph6, from_edge_mask

CHUNK_BITS = 20
MINOR_CLASS_MAX_N = 7
VECTOR_CLASS_MAX_N = 8
THREADS_ENV = "CLIQUE_EXTREMAL_THREADS"


class HarnessLimitError(ValueError):
    """Requested scan is larger than the harness supports."""


def default_threads() -> int:
    raw = os.environ.get(THREADS_ENV, "")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


@dataclass
class VerificationReport:
    check: str
    n: int
    m: int | None
    statistic: str
    observed_max: int | None
    formula_value: Fraction
    tight_claimed: bool
    witness: str | None
    graphs_scanned: int
    params: dict = field(default_factory=dict)

    @property
    def match(self) -> bool:
        if self.observed_max is None:
            return not self.tight_claimed
        if self.observed_max > self.formula_value:
            return False
        if self.tight_claimed:
            return self.observed_max == bounds.floor_value(self.formula_value)
        return True

    def to_dict(self) -> dict:
        return {
            "check": self.check,
            "n": self.n,
            "m": self.m,
            "params": self.params,
            "statistic": self.statistic,
            "observed_max": None if self.observed_max is None else str(self.observed_max),
            "formula_value": bounds.format_rational(self.formula_value),
            "tight_claimed": self.tight_claimed,
            "witness": self.witness,
            "graphs_scanned": self.graphs_scanned,
            "match": self.match,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


# -- graph classes -----------------------------------------------------------


@dataclass(frozen=True)
class GraphClass:
    """``planar``, ``k5_free``, ``k33_free``, ``degenerate`` (needs ``param`` = d)
    or ``max_degree`` (needs ``param`` = maximum degree)."""

    kind: str
    param: int | None = None

    KINDS = ("planar", "k5_free", "k33_free", "degenerate", "max_degree")

    def __post_init__(self) -> None:
        if self.kind not in self.KINDS:
            raise ValueError(f"unknown graph class {self.kind!r}")
        needs = self.kind in ("degenerate", "max_degree")
        if needs and (self.param is None or self.param < 1):
            raise ValueError(f"class {self.kind} needs a positive parameter")
        if not needs and self.param is not None:
            raise ValueError(f"class {self.kind} takes no parameter")

    @property
    def label(self) -> str:
        return self.kind if self.param is None else f"{self.kind}({self.param})"

    @classmethod
    def parse(cls, text: str, param: int | None = None) -> "GraphClass":
        """Accepts ``planar``, ``k5free``, ``d_degenerate(2)``, ``max-degree:3`` and similar.

        ``param`` fills in the parameter when ``text`` does not carry one.
        """
        t = text.strip().lower().replace("-", "_")
        found = re.fullmatch(r"([a-z0-9_]+?)(?:[(:=](\d+)\)?)?", t)
        if not found:
            raise ValueError(f"cannot parse graph class {text!r}")
        name, inline = found.group(1), found.group(2)
        aliases = {
            "planar": "planar",
            "k5free": "k5_free",
            "k5_free": "k5_free",
            "k33free": "k33_free",
            "k33_free": "k33_free",
            "degenerate": "degenerate",
            "d_degenerate": "degenerate",
            "max_degree": "max_degree",
            "maxdegree": "max_degree",
            "degree": "max_degree",
        }
        if name not in aliases:
            raise ValueError(f"unknown graph class {text!r}")
        return cls(aliases[name], param if inline is None else int(inline))


# -- vectorised scanning -----------------------------------------------------


class _Kernel:
    """Per-``n`` tables shared by every chunk."""

    def __init__(self, n: int) -> None:
        self.n = n
        self.slots = len(edge_slots(n))
        index = {pair: s for s, pair in enumerate(edge_slots(n))}
        self.subset_masks: list[tuple[int, int]] = []
        for subset in range(1, 1 << n):
            members = [v for v in range(n) if subset >> v & 1]
            if len(members) < 2:
                continue
            req = 0
            for a in range(len(members)):
                for b in range(a + 1, len(members)):
                    req |= 1 << index[(members[a], members[b])]
            self.subset_masks.append((len(members), req))
        self.incident = [
            sum(1 << index[(min(u, v), max(u, v))] for u in range(n) if u != v) for v in range(n)
        ]

    def chunk(self, lo: int, hi: int) -> "_Chunk":
        return _Chunk(self, np.arange(lo, hi, dtype=np.int64))


class _Chunk:
    def __init__(self, kernel: _Kernel, masks: np.ndarray) -> None:
        self.kernel = kernel
        self.masks = masks
        n = kernel.n
        size = len(masks)
        self.m = np.bitwise_count(masks).astype(np.int64)
        census = np.zeros((n + 1, size), dtype=np.int64)
        census[0] = 1
        if n:
            census[1] = n
        for k, req in kernel.subset_masks:
            census[k] += (masks & req) == req
        self.census = census
        self.total = census.sum(axis=0)
        key = np.zeros(size, dtype=np.int64)
        for s in range(kernel.slots):
            key |= ((masks >> s) & 1) << (kernel.slots - 1 - s)
        self.key = key

    def degrees(self) -> np.ndarray:
        return np.stack([np.bitwise_count(self.masks & inc) for inc in self.kernel.incident])

    def degenerate(self, d: int) -> np.ndarray:
        edges = self.masks.copy()
        for _ in range(self.kernel.n):
            changed = False
            for inc in self.kernel.incident:
                hit = edges & inc
                low = (np.bitwise_count(hit) <= d) & (hit != 0)
                if low.any():
                    edges[low] &= ~inc
                    changed = True
            if not changed:
                break
        return edges == 0


Stat = Callable[[_Chunk], np.ndarray]
Best = dict[int, tuple[int, int, int]]


@dataclass
class _Query:
    stat: Stat
    group: Stat


def _merge(best: Best, group: int, value: int, key: int, mask: int) -> None:
    cur = best.get(group)
    if cur is None or value > cur[0] or (value == cur[0] and key < cur[1]):
        best[group] = (value, key, mask)


def _chunk_best(
    chunk: _Chunk,
    query: _Query,
    member_vec: np.ndarray | None,
    member_fn: Callable[[int], bool] | None,
    best: Best,
) -> None:
    vals = query.stat(chunk)
    grp = query.group(chunk)
    keys = chunk.key
    masks = chunk.masks
    if member_vec is not None:
        vals, grp, keys, masks = vals[member_vec], grp[member_vec], keys[member_vec], masks[member_vec]
    if len(vals) == 0:
        return
    order = np.lexsort((keys, -vals, grp))
    grp_sorted = grp[order]
    starts = np.flatnonzero(np.r_[True, grp_sorted[1:] != grp_sorted[:-1]])
    ends = np.r_[starts[1:], len(order)]
    for start, end in zip(starts, ends):
        for idx in order[start:end]:
            if member_fn is None or member_fn(int(masks[idx])):
                _merge(best, int(grp[idx]), int(vals[idx]), int(keys[idx]), int(masks[idx]))
                break


def _scan(
    n: int,
    queries: list[_Query],
    member_vec: Callable[[_Chunk], np.ndarray] | None = None,
    member_fn: Callable[[int], bool] | None = None,
    threads: int | None = None,
) -> tuple[list[Best], int]:
    kernel = _Kernel(n)
    total = 1 << kernel.slots
    step = 1 << CHUNK_BITS
    ranges = [(lo, min(lo + step, total)) for lo in range(0, total, step)]
    threads = threads or default_threads()
    results: list[Best] = [{} for _ in queries]

    def prepare(bounds_: tuple[int, int]) -> tuple[_Chunk, np.ndarray | None]:
        chunk = kernel.chunk(*bounds_)
        return chunk, (member_vec(chunk) if member_vec else None)

    # worker threads build chunk tables; the reduction runs here, in chunk order
    with ThreadPoolExecutor(max_workers=threads) as pool:
        for w in range(0, len(ranges), threads):
            for chunk, vec in pool.map(prepare, ranges[w : w + threads]):
                for query, best in zip(queries, results):
                    _chunk_best(chunk, query, vec, member_fn, best)
    return results, total


def _by_m(chunk: _Chunk) -> np.ndarray:
    return chunk.m


def _single(chunk: _Chunk) -> np.ndarray:
    return np.zeros(len(chunk.masks), dtype=np.int64)


def _total(chunk: _Chunk) -> np.ndarray:
    return chunk.total


def _size(k: int) -> Stat:
    def stat(chunk: _Chunk) -> np.ndarray:
        if k > chunk.kernel.n:
            return np.zeros(len(chunk.masks), dtype=np.int64)
        return chunk.census[k]

    return stat


def _witness(n: int, entry: tuple[int, int, int] | None) -> tuple[int | None, str | None]:
    if entry is None:
        return None, None
    return entry[0], encode_graph6(from_edge_mask(n, entry[2])).decode()


def _cached(pred: Callable[[int], bool]) -> Callable[[int], bool]:
    cache: dict[int, bool] = {}

    def member(mask: int) -> bool:
        if mask not in cache:
            cache[mask] = pred(mask)
        return cache[mask]

    return member


def _limit(n: int, cap: int, what: str) -> None:
    if n < 0:
        raise HarnessLimitError("vertex count must be non-negative")
    if n > cap:
        raise HarnessLimitError(f"{what} scans are limited to n <= {cap}, got n={n}")


# -- public checks -----------------------------------------------------------


def verify_nm_tightness(n: int, threads: int | None = None) -> list[VerificationReport]:
    """Maximum clique count of every ``(n, m)`` class against the closed form, all ``m``."""
    _limit(n, MINOR_CLASS_MAX_N, "unfiltered")
    (best,), scanned = _scan(n, [_Query(_total, _by_m)], threads=threads)
    reports = []
    for m in range(comb(n, 2) + 1):
        observed, witness = _witness(n, best.get(m))
        reports.append(
            VerificationReport("nm", n, m, "total", observed, Fraction(bounds.max_cliques_nm(n, m)), True, witness, scanned)
        )
    return reports


def _minor_member(n: int, kind: str, budget: MinorSearchBudget) -> Callable[[int], bool]:
    if kind == "planar":
        return _cached(lambda mask: is_planar(from_edge_mask(n, mask), budget))
    pattern = K5 if kind == "k5_free" else K33
    return _cached(lambda mask: not has_minor(from_edge_mask(n, mask), pattern, budget))


def verify_class_bound(
    n: int,
    graph_class: GraphClass | str,
    threads: int | None = None,
    budget: MinorSearchBudget = DEFAULT_BUDGET,
) -> list[VerificationReport]:
    """Class maximum per edge count, plus one report over all edge counts (``m=None``)."""
    if isinstance(graph_class, str):
        graph_class = GraphClass.parse(graph_class)
    kind, p = graph_class.kind, graph_class.param
    label = graph_class.label
    params = {} if p is None else {"d" if kind == "degenerate" else "max_degree": p}
    member_vec = member_fn = None
    if kind in ("planar", "k5_free", "k33_free"):
        _limit(n, MINOR_CLASS_MAX_N, f"{kind}")
        if n < 3:
            raise HarnessLimitError(f"{kind} bounds are stated for n >= 3, got n={n}")
        member_fn = _minor_member(n, kind, budget)
    elif kind == "degenerate":
        _limit(n, VECTOR_CLASS_MAX_N, "degeneracy")
        if n < p:
            raise HarnessLimitError(f"degenerate bounds need n >= d, got n={n}, d={p}")
        member_vec = lambda chunk: chunk.degenerate(p)  # noqa: E731
    else:
        _limit(n, VECTOR_CLASS_MAX_N, "degree")
        member_vec = lambda chunk: (chunk.degrees() <= p).all(axis=0)  # noqa: E731

    (per_m,), scanned = _scan(n, [_Query(_total, _by_m)], member_vec, member_fn, threads)
    overall = None
    for entry in per_m.values():
        if overall is None or (entry[0], -entry[1]) > (overall[0], -overall[1]):
            overall = entry

    rows: list[tuple[int | None, Fraction, bool]] = []
    if kind == "planar":
        rows += [(m, bounds.planar_bound(n, m), m % 3 == 0) for m in range(3, 3 * n - 6 + 1)]
        rows.append((None, Fraction(bounds.k5_minor_free_bound(n)), True))
    elif kind == "k5_free":
        cap = Fraction(bounds.k5_minor_free_bound(n))
        rows += [(m, cap, False) for m in range(comb(n, 2) + 1)]
        rows.append((None, cap, True))
    elif kind == "k33_free":
        cap = bounds.k33_minor_free_bound(n)
        rows += [(m, cap, False) for m in range(comb(n, 2) + 1)]
        rows.append((None, cap, n >= 5 and n % 3 == 2))
    elif kind == "degenerate":
        want = 0 if p % 2 else p // 2
        top = bounds.degenerate_max_edges(n, p)
        rows += [(m, bounds.degenerate_edge_bound(n, m, p), m % p == want) for m in range(comb(p, 2), top + 1)]
        rows.append((None, Fraction(bounds.degenerate_bound(n, p)), True))
    else:
        block = comb(p + 1, 2)
        rows += [(m, bounds.degree_bound(n, m, p), m % block == 0) for m in range(min(p * n // 2, comb(n, 2)) + 1)]
        rows.append((None, bounds.degree_vertex_bound(n, p), False))

    reports = []
    for m, formula, tight in rows:
        observed, witness = _witness(n, overall if m is None else per_m.get(m))
        reports.append(VerificationReport(label, n, m, "total", observed, formula, tight, witness, scanned, dict(params)))
    return reports


def verify_planar_census(
    n: int, threads: int | None = None, budget: MinorSearchBudget = DEFAULT_BUDGET
) -> list[VerificationReport]:
    """Largest triangle and 4-clique counts over planar graphs on ``n`` vertices."""
    _limit(n, MINOR_CLASS_MAX_N, "planar")
    c3_cap, c4_cap = bounds.planar_clique_size_bounds(n)
    queries = [_Query(_size(3), _single), _Query(_size(4), _single)]
    results, scanned = _scan(n, queries, member_fn=_minor_member(n, "planar", budget), threads=threads)
    reports = []
    for stat, cap, best in (("c3", c3_cap, results[0]), ("c4", c4_cap, results[1])):
        observed, witness = _witness(n, best.get(0))
        reports.append(VerificationReport("planar_census", n, None, stat, observed, Fraction(cap), True, witness, scanned))
    return reports


def verify_zykov(n: int, k: int, threads: int | None = None) -> list[VerificationReport]:
    """Largest ``c_l`` (each ``l <= k``) and total over graphs with no ``(k+1)``-clique."""
    _limit(n, MINOR_CLASS_MAX_N, "clique-free")
    if k < 1:
        raise HarnessLimitError(f"need k >= 1, got k={k}")
    tight = n % k == 0
    queries = [_Query(_size(ell), _single) for ell in range(k + 1)] + [_Query(_total, _single)]

    def free(chunk: _Chunk) -> np.ndarray:
        if k + 1 > n:
            return np.ones(len(chunk.masks), dtype=bool)
        return chunk.census[k + 1] == 0

    results, scanned = _scan(n, queries, member_vec=free, threads=threads)
    params = {"k": k}
    reports = []
    for ell in range(k + 1):
        observed, witness = _witness(n, results[ell].get(0))
        reports.append(
            VerificationReport("zykov", n, None, f"c{ell}", observed, bounds.zykov_bound(n, k, ell), tight, witness, scanned, dict(params))
        )
    observed, witness = _witness(n, results[-1].get(0))
    reports.append(
        VerificationReport("zykov", n, None, "total", observed, bounds.zykov_total_bound(n, k), tight, witness, scanned, dict(params))
    )
    return reports


def recount_witness(report: VerificationReport) -> int:
    """Recount the witness with the recursive engine, independently of the scan kernel."""
    if report.witness is None:
        raise ValueError("report carries no witness")
    g = decode_graph6(report.witness)
    if report.statistic == "total":
        return count_cliques(g)
    return clique_census(g)[int(report.statistic[1:])]


def iter_jsonl(reports: list[VerificationReport]) -> Iterator[str]:
    for r in reports:
        yield r.to_json()
