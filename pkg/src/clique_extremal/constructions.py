"""Deterministic generators for graphs that attain the clique bounds.

Each generator validates its parameters with the same rules as the
matching bound in :mod:`clique_extremal.bounds` and raises
:class:`~clique_extremal.bounds.BoundPreconditionError` otherwise.
"""

from __future__ import annotations

from collections import deque
from fractions import Fraction
from math import comb
from typing import Sequence

from . import bounds
from .bounds import BoundPreconditionError, decompose_edges
from .graph import Graph, PasteMap, complete_graph, empty_graph, from_edges, paste


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise BoundPreconditionError(message)


def _pad(g: Graph, n: int) -> Graph:
    """Append isolated vertices until ``g`` has ``n`` vertices."""
    return Graph(n, g.adj + (0,) * (n - g.n))


def construct_extremal_nm(n: int, m: int) -> Graph:
    """``K_d`` on ``0..d-1``, vertex ``d`` joined to ``0..extra-1``, the rest isolated."""
    _require(n >= 0 and 0 <= m <= comb(n, 2), f"need 0 <= m <= C(n,2), got n={n}, m={m}")
    if n == 0:
        return empty_graph(0)
    dec = decompose_edges(m)
    if dec.d == n:
        return complete_graph(n)
    edges = [(i, j) for j in range(dec.d) for i in range(j)]
    edges += [(i, dec.d) for i in range(dec.extra)]
    return from_edges(n, edges)


def construct_degree_extremal(n: int, m: int, max_deg: int) -> Graph:
    """Disjoint copies of ``K_{max_deg+1}`` padded with isolated vertices."""
    _require(max_deg >= 1, f"maximum degree must be at least 1, got {max_deg}")
    block = comb(max_deg + 1, 2)
    _require(m >= 0 and m % block == 0, f"m={m} is not a multiple of C({max_deg + 1},2) = {block}")
    _require(2 * m <= max_deg * n, f"need m <= max_deg*n/2, got n={n}, m={m}, max_deg={max_deg}")
    copies = m // block
    size = max_deg + 1
    edges = [
        (c * size + i, c * size + j)
        for c in range(copies)
        for j in range(size)
        for i in range(j)
    ]
    return from_edges(n, edges)


def construct_dtree(n: int, d: int) -> Graph:
    """A ``d``-tree on ``n`` vertices grown from ``K_d``.

    Each new vertex is joined to the most recently completed ``d``-clique:
    the previous seed clique with its lowest vertex swapped for the
    previously added vertex.  With ``d = 1`` this is a path.
    """
    _require(0 <= d <= n, f"need n >= d >= 0, got n={n}, d={d}")
    edges = [(i, j) for j in range(d) for i in range(j)]
    seed = list(range(d))
    for v in range(d, n):
        edges.extend((u, v) for u in seed)
        if d:
            seed = seed[1:] + [v]
    return from_edges(n, edges)


def degenerate_extremal_order(m: int, d: int) -> int:
    """Vertex count of the ``d``-tree that carries all ``m`` edges."""
    _require(d >= 1, f"degeneracy must be at least 1, got {d}")
    twice = 2 * m + d * (d + 1)
    _require(twice % (2 * d) == 0, f"m={m} has the wrong residue modulo d={d}")
    return twice // (2 * d)


def construct_degenerate_extremal(n: int, m: int, d: int) -> Graph:
    """A ``d``-tree holding all ``m`` edges plus isolated vertices up to ``n``."""
    _require(d >= 1, f"degeneracy must be at least 1, got {d}")
    _require(
        comb(d, 2) <= m <= d * n - comb(d + 1, 2),
        f"need C(d,2) <= m <= dn - C(d+1,2), got n={n}, m={m}, d={d}",
    )
    want = 0 if d % 2 else d // 2
    _require(m % d == want, f"need m mod {d} == {want}, got m={m}")
    order = degenerate_extremal_order(m, d)
    return _pad(construct_dtree(order, d), n)


def stacked_planar_faces(n: int) -> tuple[Graph, list[tuple[int, int, int]]]:
    """Stacked triangulation on ``n`` vertices and its internal faces, oldest first."""
    _require(n >= 3, f"need n >= 3, got n={n}")
    edges = [(0, 1), (0, 2), (1, 2)]
    faces: deque[tuple[int, int, int]] = deque([(0, 1, 2)])
    for v in range(3, n):
        a, b, c = faces.popleft()
        edges += [(a, v), (b, v), (c, v)]
        faces.extend([(a, b, v), (a, c, v), (b, c, v)])
    return from_edges(n, edges), list(faces)


def construct_stacked_planar(n: int) -> Graph:
    """Maximal planar graph grown from ``K_3`` by inserting degree-3 vertices into faces.

    Internal faces are served first-in first-out, so the vertices arrive in
    full rounds: one vertex in every internal face, then one in every face
    that round created, and so on.  The outer face is never subdivided.
    """
    return stacked_planar_faces(n)[0]


def construct_planar_extremal(n: int, m: int) -> Graph:
    """Stacked triangulation on ``m/3 + 2`` vertices plus isolated vertices."""
    _require(n >= 3, f"need n >= 3, got n={n}")
    _require(3 <= m <= 3 * n - 6 and m % 3 == 0, f"need m in {{3, 6, ..., 3n-6}}, got n={n}, m={m}")
    return _pad(construct_stacked_planar(m // 3 + 2), n)


def construct_v8() -> Graph:
    """The Wagner graph: an 8-cycle plus its four antipodal chords."""
    edges = [(i, (i + 1) % 8) for i in range(8)] + [(i, i + 4) for i in range(4)]
    return from_edges(8, edges)


def construct_k5_chain(n: int) -> Graph:
    """Copies of ``K_5`` glued in a chain, each on an edge of the previous copy.

    The shared edge joins the two highest-numbered vertices of the previous
    copy, so copy ``i`` occupies vertices ``3i .. 3i + 4``.
    """
    _require(n >= 5 and n % 3 == 2, f"need n >= 5 with n = 2 mod 3, got n={n}")
    k5 = complete_graph(5)
    g = k5
    while g.n < n:
        g = paste(g, k5, PasteMap((g.n - 2, g.n - 1), (0, 1)))
    return g


def construct_multipartite(parts: Sequence[int]) -> Graph:
    """Complete multipartite graph with consecutive colour classes of the given sizes."""
    _require(len(parts) >= 1, "need at least one part")
    _require(all(p >= 1 for p in parts), f"every part must be non-empty, got {list(parts)}")
    colour = [i for i, p in enumerate(parts) for _ in range(p)]
    n = len(colour)
    edges = [(u, v) for v in range(n) for u in range(v) if colour[u] != colour[v]]
    return from_edges(n, edges)


def multipartite_clique_count(parts: Sequence[int]) -> int:
    """``prod(n_i + 1)``: each clique takes at most one vertex per colour class."""
    out = 1
    for p in parts:
        out *= p + 1
    return out


def attained_value(name: str, **params) -> Fraction:
    """Clique count each generator is built to attain, from the closed forms."""
    if name == "nm":
        return Fraction(bounds.max_cliques_nm(params["n"], params["m"]))
    if name == "degree":
        return bounds.degree_bound(params["n"], params["m"], params["max_deg"])
    if name == "dtree":
        return Fraction(bounds.degenerate_bound(params["n"], params["d"]))
    if name == "degenerate":
        return bounds.degenerate_edge_bound(params["n"], params["m"], params["d"])
    if name == "stacked-planar":
        return Fraction(bounds.k5_minor_free_bound(params["n"]))
    if name == "planar":
        return bounds.planar_bound(params["n"], params["m"])
    if name == "v8":
        g = construct_v8()
        return Fraction(1 + g.n + g.m)
    if name == "k5-chain":
        return bounds.k33_minor_free_bound(params["n"])
    if name == "multipartite":
        return Fraction(multipartite_clique_count(params["parts"]))
    raise KeyError(f"unknown generator {name!r}")


GENERATORS = {
    "nm": construct_extremal_nm,
    "degree": construct_degree_extremal,
    "dtree": construct_dtree,
    "degenerate": construct_degenerate_extremal,
    "stacked-planar": construct_stacked_planar,
    "planar": construct_planar_extremal,
    "v8": construct_v8,
    "k5-chain": construct_k5_chain,
    "multipartite": construct_multipartite,
}
