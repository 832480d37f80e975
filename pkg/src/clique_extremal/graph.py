"""Immutable simple graphs on vertices ``0..n-1`` with bitset adjacency.

A vertex set is a plain Python ``int`` used as a bitset; bit ``v`` is set
when vertex ``v`` belongs to the set.  ``Graph.adj[v]`` is the neighbourhood
of ``v`` in that form.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator


class GraphError(ValueError):
    """Raised for malformed graphs, bad vertex references and bad encodings."""


def bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: int) -> int:
    return bin(mask).count("1")


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 0:
            raise GraphError(f"negative vertex count {self.n}")
        if len(self.adj) != self.n:
            raise GraphError(f"expected {self.n} adjacency rows, got {len(self.adj)}")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise GraphError(f"vertex {v} has a neighbour outside 0..{self.n - 1}")
            if row >> v & 1:
                raise GraphError(f"loop at vertex {v}")
            for u in bits(row):
                if not self.adj[u] >> v & 1:
                    raise GraphError(f"edge {v}-{u} is not symmetric")

    @property
    def m(self) -> int:
        return sum(popcount(row) for row in self.adj) // 2

    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return popcount(self.adj[v])

    def degrees(self) -> list[int]:
        return [popcount(row) for row in self.adj]

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v``, sorted lexicographically."""
        return [(u, v) for u in range(self.n) for v in bits(self.adj[u] >> (u + 1) << (u + 1))]

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise GraphError(f"vertex {v} out of range for n={self.n}")

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m}, g6={encode_graph6(self).decode()!r})"


def empty_graph(n: int) -> Graph:
    if n < 0:
        raise GraphError(f"negative vertex count {n}")
    return Graph(n, (0,) * n)


def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph from an edge iterable; duplicate edges collapse, loops are rejected."""
    adj = [0] * n
    for u, v in edges:
        if u == v:
            raise GraphError(f"loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge {u}-{v} out of range for n={n}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj))


def add_edge(g: Graph, u: int, v: int) -> Graph:
    if u == v:
        raise GraphError(f"loop at vertex {u}")
    g._check_vertex(u)
    g._check_vertex(v)
    adj = list(g.adj)
    adj[u] |= 1 << v
    adj[v] |= 1 << u
    return Graph(g.n, tuple(adj))


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, tuple(full ^ (1 << v) for v in range(n)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError("a cycle needs at least 3 vertices")
    return from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def path_graph(n: int) -> Graph:
    return from_edges(n, ((i, i + 1) for i in range(n - 1)))


def star_graph(leaves: int) -> Graph:
    """``K_{1,leaves}`` with the centre at vertex 0."""
    return from_edges(leaves + 1, ((0, i) for i in range(1, leaves + 1)))


def complete_bipartite(a: int, b: int) -> Graph:
    return from_edges(a + b, ((i, a + j) for i in range(a) for j in range(b)))


def induced_subgraph(g: Graph, vertices: int | Iterable[int]) -> Graph:
    """Subgraph induced by ``vertices`` (a bitset or an iterable), relabelled in ascending order."""
    if isinstance(vertices, int):
        keep = list(bits(vertices))
    else:
        keep = sorted(set(vertices))
    for v in keep:
        g._check_vertex(v)
    index = {v: i for i, v in enumerate(keep)}
    adj = []
    for v in keep:
        row = 0
        for u in bits(g.adj[v]):
            if u in index:
                row |= 1 << index[u]
        adj.append(row)
    return Graph(len(keep), tuple(adj))


def neighbourhood_subgraph(g: Graph, v: int) -> Graph:
    """The subgraph induced by the neighbours of ``v``."""
    g._check_vertex(v)
    return induced_subgraph(g, g.adj[v])


def delete_vertex(g: Graph, v: int) -> Graph:
    """Remove ``v``; vertices above ``v`` shift down by one."""
    g._check_vertex(v)
    return induced_subgraph(g, g.vertex_mask ^ (1 << v))


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    return paste(g1, g2, PasteMap((), ()))


def complement(g: Graph) -> Graph:
    full = g.vertex_mask
    return Graph(g.n, tuple(full ^ row ^ (1 << v) for v, row in enumerate(g.adj)))


@dataclass(frozen=True)
class PasteMap:
    """Identifies ``in_first[i]`` of the first graph with ``in_second[i]`` of the second."""

    in_first: tuple[int, ...]
    in_second: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.in_first) != len(self.in_second):
            raise GraphError("paste map sides differ in length")
        if len(set(self.in_first)) != len(self.in_first) or len(set(self.in_second)) != len(self.in_second):
            raise GraphError("paste map is not injective")


def paste(g1: Graph, g2: Graph, shared: PasteMap) -> Graph:
    """Glue ``g1`` and ``g2`` along the common induced subgraph described by ``shared``.

    Vertices of ``g1`` keep their labels.  The unshared vertices of ``g2``
    follow as ``g1.n, g1.n + 1, ...`` in ascending order of their label in ``g2``.
    """
    for v in shared.in_first:
        g1._check_vertex(v)
    for v in shared.in_second:
        g2._check_vertex(v)
    k = len(shared.in_first)
    for i in range(k):
        for j in range(i + 1, k):
            e1 = g1.has_edge(shared.in_first[i], shared.in_first[j])
            e2 = g2.has_edge(shared.in_second[i], shared.in_second[j])
            if e1 != e2:
                raise GraphError(
                    f"shared vertices {i} and {j} are adjacent in one graph but not the other"
                )
    relabel = dict(zip(shared.in_second, shared.in_first))
    nxt = g1.n
    for v in range(g2.n):
        if v not in relabel:
            relabel[v] = nxt
            nxt += 1
    edges = list(g1.edges())
    edges.extend((relabel[u], relabel[v]) for u, v in g2.edges())
    return from_edges(nxt, edges)


# -- edge-mask view, used by the exhaustive scans -------------------------


def edge_slot(i: int, j: int) -> int:
    """Bit position of edge ``{i, j}`` in the column-major upper triangle (graph6 order)."""
    if i > j:
        i, j = j, i
    return j * (j - 1) // 2 + i


def edge_slots(n: int) -> list[tuple[int, int]]:
    """All vertex pairs in graph6 order: ``(0,1), (0,2), (1,2), (0,3), ...``."""
    return [(i, j) for j in range(1, n) for i in range(j)]


def from_edge_mask(n: int, mask: int) -> Graph:
    adj = [0] * n
    for s, (i, j) in enumerate(edge_slots(n)):
        if mask >> s & 1:
            adj[i] |= 1 << j
            adj[j] |= 1 << i
    return Graph(n, tuple(adj))


def to_edge_mask(g: Graph) -> int:
    mask = 0
    for u, v in g.edges():
        mask |= 1 << edge_slot(u, v)
    return mask


# -- graph6 ----------------------------------------------------------------

_G6_HEADER = b">>graph6<<"


def _encode_n(n: int) -> bytes:
    if n < 0:
        raise GraphError(f"negative vertex count {n}")
    if n <= 62:
        return bytes([n + 63])
    if n <= 258047:
        return bytes([126] + [((n >> s) & 63) + 63 for s in (12, 6, 0)])
    if n <= 68719476735:
        return bytes([126, 126] + [((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0)])
    raise GraphError(f"graph6 cannot encode n={n}")


def encode_graph6(g: Graph) -> bytes:
    """Encode ``g`` in graph6 (no ``>>graph6<<`` header, no newline)."""
    out = bytearray(_encode_n(g.n))
    chunk = 0
    filled = 0
    for i, j in edge_slots(g.n):
        chunk = chunk << 1 | (g.adj[i] >> j & 1)
        filled += 1
        if filled == 6:
            out.append(chunk + 63)
            chunk = filled = 0
    if filled:
        out.append((chunk << (6 - filled)) + 63)
    return bytes(out)


def decode_graph6(data: bytes | str) -> Graph:
    if isinstance(data, str):
        data = data.encode("ascii")
    data = data.strip()
    if data.startswith(_G6_HEADER):
        data = data[len(_G6_HEADER):]
    if not data:
        raise GraphError("empty graph6 string")
    if any(not 63 <= b <= 126 for b in data):
        raise GraphError("graph6 byte outside 63..126")
    if data[0] != 126:
        n, pos = data[0] - 63, 1
    elif len(data) >= 2 and data[1] == 126:
        if len(data) < 8:
            raise GraphError("truncated graph6 header")
        n, pos = 0, 8
        for b in data[2:8]:
            n = n << 6 | (b - 63)
    else:
        if len(data) < 4:
            raise GraphError("truncated graph6 header")
        n, pos = 0, 4
        for b in data[1:4]:
            n = n << 6 | (b - 63)
    slots = n * (n - 1) // 2
    body = data[pos:]
    if len(body) != (slots + 5) // 6:
        raise GraphError(f"graph6 body has {len(body)} bytes, expected {(slots + 5) // 6} for n={n}")
    stream = 0
    for b in body:
        stream = stream << 6 | (b - 63)
    pad = 6 * len(body) - slots
    if stream & ((1 << pad) - 1):
        raise GraphError("nonzero padding bits in graph6 string")
    stream >>= pad
    adj = [0] * n
    for s, (i, j) in enumerate(edge_slots(n)):
        if stream >> (slots - 1 - s) & 1:
            adj[i] |= 1 << j
            adj[j] |= 1 << i
    return Graph(n, tuple(adj))


# -- edge-list text --------------------------------------------------------


def format_edgelist(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def parse_edgelist(text: str) -> Graph:
    """Parse ``"n m"`` followed by ``m`` lines ``"u v"``; blank lines and ``#`` comments are ignored."""
    rows = []
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            rows.append(line.split())
    if not rows:
        raise GraphError("empty edge list")
    try:
        header = [int(x) for x in rows[0]]
        pairs = [tuple(int(x) for x in row) for row in rows[1:]]
    except ValueError as exc:
        raise GraphError(f"non-integer token in edge list: {exc}") from None
    if len(header) != 2:
        raise GraphError("edge list header must be 'n m'")
    n, m = header
    if any(len(p) != 2 for p in pairs):
        raise GraphError("each edge line must hold exactly two vertices")
    if len(pairs) != m:
        raise GraphError(f"header declares {m} edges but {len(pairs)} follow")
    g = from_edges(n, pairs)  # type: ignore[arg-type]
    if g.m != m:
        raise GraphError("edge list contains repeated edges")
    return g


def parse_graph(data: bytes | str, fmt: str = "auto") -> Graph:
    """Read graph6 or edge-list text; ``auto`` picks edge-list when the first byte is a digit."""
    if isinstance(data, bytes):
        text = data.decode("ascii")
    else:
        text = data
    stripped = text.lstrip()
    if fmt == "auto":
        fmt = "edgelist" if stripped[:1].isdigit() or stripped[:1] == "#" else "graph6"
    if fmt == "graph6":
        return decode_graph6(stripped.splitlines()[0] if stripped else "")
    if fmt == "edgelist":
        return parse_edgelist(text)
    raise GraphError(f"unknown graph format {fmt!r}")

