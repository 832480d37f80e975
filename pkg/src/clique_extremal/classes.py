"""Graph-class recognition: degeneracy, maximum degree, minors, planarity,
Hadwiger numbers and matchings in complete multipartite graphs.

Minor containment is decided exactly by exhaustive contraction search, so
everything here is meant for small graphs.  Running out of budget raises
:class:`MinorBudgetExceeded`; it is never reported as "no minor".
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .cliques import clique_census
from .graph import Graph, GraphError, bits, complete_bipartite, complete_graph, popcount


class MinorBudgetExceeded(RuntimeError):
    """A minor search hit its vertex cap or its branch-node cap."""


@dataclass(frozen=True)
class MinorSearchBudget:
    max_vertices: int = 12
    max_branch_nodes: int = 5_000_000

    def __post_init__(self) -> None:
        if self.max_vertices < 1 or self.max_branch_nodes < 1:
            raise ValueError("minor search budgets must be positive")


DEFAULT_BUDGET = MinorSearchBudget()


def degeneracy(g: Graph) -> int:
    """Largest minimum degree met while repeatedly deleting a minimum-degree vertex."""
    alive = g.vertex_mask
    best = 0
    while alive:
        v = min(bits(alive), key=lambda u: popcount(g.adj[u] & alive))
        best = max(best, popcount(g.adj[v] & alive))
        alive ^= 1 << v
    return best


def max_degree(g: Graph) -> int:
    if g.n == 0:
        raise GraphError("maximum degree of the empty graph is undefined")
    return max(g.degrees())


# -- minor search ----------------------------------------------------------


def _edge_count(adj: tuple[int, ...]) -> int:
    return sum(popcount(row) for row in adj) // 2


def _remove(adj: tuple[int, ...], v: int) -> tuple[int, ...]:
    """Delete vertex ``v`` and close the gap in the labels."""
    low = (1 << v) - 1
    out = []
    for u, row in enumerate(adj):
        if u != v:
            out.append(row & low | (row >> (v + 1)) << v)
    return tuple(out)


def _contract(adj: tuple[int, ...], u: int, v: int) -> tuple[int, ...]:
    """Contract edge ``uv`` (``u < v``) into ``u``, then drop ``v``."""
    merged = (adj[u] | adj[v]) & ~(1 << u) & ~(1 << v)
    rows = list(adj)
    rows[u] = merged
    for w in bits(merged):
        rows[w] |= 1 << u
    return _remove(tuple(rows), v)


def _components(adj: tuple[int, ...]) -> list[int]:
    seen = 0
    comps = []
    for s in range(len(adj)):
        if seen >> s & 1:
            continue
        comp = frontier = 1 << s
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= adj[v]
            frontier = nxt & ~comp
            comp |= frontier
        seen |= comp
        comps.append(comp)
    return comps


def _induced(adj: tuple[int, ...], keep: int) -> tuple[int, ...]:
    order = list(bits(keep))
    index = {v: i for i, v in enumerate(order)}
    return tuple(sum(1 << index[u] for u in bits(adj[v] & keep)) for v in order)


def _spanning_subgraph(host: tuple[int, ...], pattern: tuple[int, ...]) -> bool:
    """Is ``pattern`` a subgraph of ``host`` when both have the same vertex count?"""
    k = len(pattern)
    order = sorted(range(k), key=lambda v: -popcount(pattern[v]))
    host_deg = [popcount(r) for r in host]
    need = [popcount(r) for r in pattern]
    image = [-1] * k
    used = 0

    def place(i: int) -> bool:
        nonlocal used
        if i == k:
            return True
        p = order[i]
        for h in range(k):
            if used >> h & 1 or host_deg[h] < need[p]:
                continue
            if all(host[h] >> image[q] & 1 for q in bits(pattern[p]) if image[q] >= 0):
                image[p] = h
                used |= 1 << h
                if place(i + 1):
                    return True
                used ^= 1 << h
                image[p] = -1
        return False

    return place(0)


class _MinorSearch:
    """Exact test for ``pattern`` being a minor of a host graph.

    Search nodes are graphs obtained from the host by vertex deletions and
    edge contractions.  Once a node has as many vertices as the pattern,
    the pattern must be a spanning subgraph of it, which accounts for edge
    deletions.  Forced moves that cannot lose a model are applied first:
    isolated vertices go when the pattern has none, degree-1 vertices go
    when the pattern has minimum degree 2, and degree-2 vertices are
    suppressed when the pattern has minimum degree 3.
    """

    def __init__(self, pattern: Graph, budget: MinorSearchBudget) -> None:
        self.pattern = pattern.adj
        self.k = pattern.n
        self.pattern_m = pattern.m
        self.pattern_deg = sorted((popcount(r) for r in pattern.adj), reverse=True)
        self.min_deg = min(self.pattern_deg) if self.pattern_deg else 0
        self.connected = pattern.n > 0 and len(_components(pattern.adj)) == 1
        self.is_complete = self.pattern_m == self.k * (self.k - 1) // 2
        self.budget = budget
        self.nodes = 0
        self.failed: set[tuple[int, ...]] = set()

    def _reduce(self, adj: tuple[int, ...]) -> tuple[int, ...]:
        changed = True
        while changed and len(adj) > self.k:
            changed = False
            for v, row in enumerate(adj):
                d = popcount(row)
                if d < self.min_deg and d <= 1:
                    adj = _remove(adj, v)
                    changed = True
                    break
                if d == 2 and self.min_deg >= 3:
                    a, b = bits(row)
                    rows = list(adj)
                    rows[a] |= 1 << b
                    rows[b] |= 1 << a
                    adj = _remove(tuple(rows), v)
                    changed = True
                    break
        return adj

    def _final(self, adj: tuple[int, ...]) -> bool:
        if self.is_complete:
            return _edge_count(adj) == self.pattern_m
        host_deg = sorted((popcount(r) for r in adj), reverse=True)
        if any(h < p for h, p in zip(host_deg, self.pattern_deg)):
            return False
        return _spanning_subgraph(adj, self.pattern)

    def run(self, adj: tuple[int, ...]) -> bool:
        self.nodes += 1
        if self.nodes > self.budget.max_branch_nodes:
            raise MinorBudgetExceeded(f"minor search exceeded {self.budget.max_branch_nodes} branch nodes")
        adj = self._reduce(adj)
        n = len(adj)
        if n < self.k or _edge_count(adj) < self.pattern_m:
            return False
        if adj in self.failed:
            return False
        if self.connected:
            comps = _components(adj)
            if len(comps) > 1:
                found = any(
                    self.run(_induced(adj, c)) for c in comps if popcount(c) >= self.k
                )
                if not found:
                    self.failed.add(adj)
                return found
        if n == self.k:
            found = self._final(adj)
        else:
            found = any(self.run(child) for child in self._children(adj))
        if not found:
            self.failed.add(adj)
        return found

    def _children(self, adj: tuple[int, ...]):
        n = len(adj)
        pivot = min(range(n), key=lambda v: popcount(adj[v]))
        edges = [(min(pivot, w), max(pivot, w)) for w in bits(adj[pivot])]
        first = set(edges)
        edges += [(u, w) for u in range(n) for w in bits(adj[u] >> (u + 1) << (u + 1)) if (u, w) not in first]
        for u, w in edges:
            yield _contract(adj, u, w)
        for v in range(n):
            yield _remove(adj, v)


def has_minor(g: Graph, h: Graph, budget: MinorSearchBudget = DEFAULT_BUDGET) -> bool:
    """Exact test whether ``h`` can be obtained from a subgraph of ``g`` by contracting edges."""
    if g.n > budget.max_vertices:
        raise MinorBudgetExceeded(f"graph has {g.n} vertices, budget allows {budget.max_vertices}")
    if h.n == 0:
        return True
    if h.n > g.n or h.m > g.m:
        return False
    return _MinorSearch(h, budget).run(g.adj)


K5 = complete_graph(5)
K33 = complete_bipartite(3, 3)


def is_planar(g: Graph, budget: MinorSearchBudget = DEFAULT_BUDGET) -> bool:
    """Planarity by excluded minors, after the edge-count filter ``m <= 3n - 6``."""
    if g.n >= 3 and g.m > 3 * g.n - 6:
        return False
    return not has_minor(g, K5, budget) and not has_minor(g, K33, budget)


def hadwiger_number(g: Graph, budget: MinorSearchBudget = DEFAULT_BUDGET) -> int:
    """Largest ``t`` such that ``K_t`` is a minor of ``g``."""
    if g.n > budget.max_vertices:
        raise MinorBudgetExceeded(f"graph has {g.n} vertices, budget allows {budget.max_vertices}")
    if g.n == 0:
        return 0
    t = clique_census(g).clique_number
    m = g.m
    while (t + 1) * t // 2 <= m and has_minor(g, complete_graph(t + 1), budget):
        t += 1
    return t


# -- complete multipartite graphs ------------------------------------------


def _check_parts(parts: Sequence[int]) -> None:
    if not parts:
        raise ValueError("need at least one part")
    if any(p < 1 for p in parts):
        raise ValueError(f"every part must be non-empty, got {list(parts)}")


def sitton_matching(parts: Sequence[int]) -> int:
    """Maximum matching size of a complete multipartite graph: ``min(n // 2, n - largest)``."""
    if any(p < 0 for p in parts):
        raise ValueError(f"part sizes must be non-negative, got {list(parts)}")
    sizes = [p for p in parts if p]
    if not sizes:
        return 0
    n = sum(sizes)
    return min(n // 2, n - max(sizes))


def multipartite_reduced_matching(parts: Sequence[int]) -> int:
    """Matching number after shrinking every colour class by one vertex."""
    _check_parts(parts)
    return sitton_matching([p - 1 for p in parts])


def hadwiger_multipartite(parts: Sequence[int]) -> int:
    """Hadwiger number of a complete multipartite graph.

    One vertex from each class forms a clique, and every edge of a
    maximum matching among the remaining vertices contracts to one more
    branch set, giving ``k + min((n - k) // 2, n - largest - k + 1)``.
    """
    _check_parts(parts)
    return len(parts) + multipartite_reduced_matching(parts)


MATCHING_MAX_VERTICES = 16


def max_matching_bruteforce(g: Graph, max_vertices: int = MATCHING_MAX_VERTICES) -> int:
    """Maximum matching size by exhaustive search (no blossoms)."""
    if g.n > max_vertices:
        raise ValueError(f"brute-force matching limited to {max_vertices} vertices, got {g.n}")
    adj = g.adj
    best = 0

    def search(free: int, size: int) -> None:
        nonlocal best
        # drop vertices that have no free neighbour left
        live = 0
        for v in bits(free):
            if adj[v] & free:
                live |= 1 << v
        if size + popcount(live) // 2 <= best:
            return
        if not live:
            best = max(best, size)
            return
        v = (live & -live).bit_length() - 1
        for u in bits(adj[v] & live):
            search(live & ~(1 << v) & ~(1 << u), size + 1)
        search(live & ~(1 << v), size)

    search(g.vertex_mask, 0)
    return best
