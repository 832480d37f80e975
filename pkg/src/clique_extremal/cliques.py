"""Exact clique counting.

Every clique of ``G`` either avoids a vertex ``v`` or is ``{v}`` plus a
clique of the neighbourhood of ``v``.  Both pieces are induced subgraphs of
``G``, so the recursion runs on vertex bitsets of the original graph and
never relabels.  Counts are Python integers and never overflow.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .graph import Graph, bits, popcount

ORACLE_MAX_VERTICES = 25


class OracleBudgetError(ValueError):
    """The subset-enumeration oracle was asked to handle too many vertices."""


@dataclass(frozen=True)
class CliqueCensus:
    """Per-size clique counts ``counts[k] = c_k(G)`` for ``k = 0..n``."""

    n: int
    m: int
    counts: tuple[int, ...]

    @property
    def total(self) -> int:
        return sum(self.counts)

    def __getitem__(self, k: int) -> int:
        return self.counts[k] if 0 <= k < len(self.counts) else 0

    @property
    def clique_number(self) -> int:
        return max(k for k, c in enumerate(self.counts) if c)

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "m": self.m,
            "counts": [str(c) for c in self.counts],
            "total": str(self.total),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


def _branch_vertex(adj: tuple[int, ...], within: int) -> tuple[int, int]:
    """Minimum-degree vertex of the induced subgraph on ``within`` (lowest index on ties)."""
    best_v, best_d = -1, -1
    for v in bits(within):
        d = popcount(adj[v] & within)
        if best_d < 0 or d < best_d:
            best_v, best_d = v, d
    return best_v, best_d


def _has_edge_within(adj: tuple[int, ...], within: int) -> bool:
    return any(adj[v] & within for v in bits(within))


def count_cliques(g: Graph) -> int:
    """Total number of cliques of ``g``, the empty clique included."""
    adj = g.adj
    memo: dict[int, int] = {}

    def count(within: int) -> int:
        if within in memo:
            return memo[within]
        if not _has_edge_within(adj, within):
            result = popcount(within) + 1
        else:
            v, _ = _branch_vertex(adj, within)
            result = count(within ^ (1 << v)) + count(adj[v] & within)
        memo[within] = result
        return result

    return count(g.vertex_mask)


def clique_census(g: Graph) -> CliqueCensus:
    """Number of cliques of every size, by the same vertex-deletion recursion."""
    adj = g.adj
    memo: dict[int, list[int]] = {}

    def census(within: int) -> list[int]:
        if within in memo:
            return memo[within]
        if not _has_edge_within(adj, within):
            k = popcount(within)
            result = [1, k] if k else [1]
        else:
            v, _ = _branch_vertex(adj, within)
            without = census(within ^ (1 << v))
            shifted = census(adj[v] & within)
            size = max(len(without), len(shifted) + 1)
            result = [0] * size
            for k, c in enumerate(without):
                result[k] += c
            for k, c in enumerate(shifted):
                result[k + 1] += c
        memo[within] = result
        return result

    counts = census(g.vertex_mask)
    counts = counts + [0] * (g.n + 1 - len(counts))
    return CliqueCensus(g.n, g.m, tuple(counts))


def count_cliques_oracle(g: Graph, max_vertices: int = ORACLE_MAX_VERTICES) -> CliqueCensus:
    """Census by testing every one of the ``2**n`` vertex subsets.

    A nonempty subset is a clique exactly when removing its lowest vertex
    leaves a clique that lies inside that vertex's neighbourhood.
    """
    n = g.n
    if n > max_vertices:
        raise OracleBudgetError(f"oracle limited to {max_vertices} vertices, got {n}")
    is_clique = bytearray(1 << n)
    is_clique[0] = 1
    counts = [0] * (n + 1)
    counts[0] = 1
    adj = g.adj
    for s in range(1, 1 << n):
        low = s & -s
        rest = s ^ low
        if is_clique[rest] and adj[low.bit_length() - 1] & rest == rest:
            is_clique[s] = 1
            counts[popcount(s)] += 1
    return CliqueCensus(n, g.m, tuple(counts))
