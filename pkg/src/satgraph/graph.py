"""Simple undirected graphs on dense labels 0..n-1 with bitset neighbourhoods."""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, NamedTuple

from . import _backend
from .errors import GraphError


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def vertices_of(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


class Graph:
    """Undirected simple graph.

    ``adj[v]`` is an int bitset of the neighbours of ``v``.  Construction
    mutates in place (``add_edge``); every analysis function treats a graph
    as a value and never mutates it.
    """

    __slots__ = ("n", "adj", "m")

    def __init__(self, n: int = 0, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise GraphError(f"vertex count must be non-negative, got {n}")
        self.n = n
        self.adj = [0] * n
        self.m = 0
        for u, v in edges:
            self.add_edge(u, v)

    def add_edge(self, u: int, v: int) -> "Graph":
        if u == v:
            raise GraphError(f"loop at vertex {u} is not allowed")
        if not (0 <= u < self.n and 0 <= v < self.n):
            raise GraphError(f"edge ({u}, {v}) out of range for n={self.n}")
        if not self.adj[u] >> v & 1:
            self.adj[u] |= 1 << v
            self.adj[v] |= 1 << u
            self.m += 1
        return self

    def with_edge(self, u: int, v: int) -> "Graph":
        return self.copy().add_edge(u, v)

    def without_vertex(self, v: int) -> tuple["Graph", list[int]]:
        return induced_subgraph(self, self.full_mask & ~(1 << v))

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return bin(self.adj[v]).count("1")

    def neighbors(self, v: int) -> list[int]:
        return vertices_of(self.adj[v])

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def edges(self) -> list[tuple[int, int]]:
        """Edges (u, v) with u < v in lexicographic order."""
        return [(u, v) for u in range(self.n) for v in vertices_of(self.adj[u] >> (u + 1) << (u + 1))]

    def copy(self) -> "Graph":
        g = Graph(self.n)
        g.adj = list(self.adj)
        g.m = self.m
        return g

    def validate(self) -> None:
        """Raise GraphError if symmetry, looplessness or the edge count is off."""
        total = 0
        for u in range(self.n):
            if self.adj[u] >> u & 1:
                raise GraphError(f"loop at {u}")
            if self.adj[u] >> self.n:
                raise GraphError(f"neighbour of {u} out of range")
            for v in vertices_of(self.adj[u]):
                if not self.adj[v] >> u & 1:
                    raise GraphError(f"asymmetric adjacency {u}->{v}")
            total += self.degree(u)
        if total != 2 * self.m:
            raise GraphError(f"cached edge count {self.m} != {total // 2}")

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self):
        return hash((self.n, tuple(self.adj)))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


@dataclass(frozen=True)
class Cut:
    """Edge cut [S, V-S]; ``side`` is the bitset of S."""

    side: int
    crossing_edges: tuple[tuple[int, int], ...]

    @property
    def size(self) -> int:
        return len(self.crossing_edges)

    @classmethod
    def from_side(cls, g: Graph, side: int) -> "Cut":
        if side == 0 or side == g.full_mask:
            raise GraphError("cut side must be a nonempty proper vertex subset")
        crossing = tuple((u, v) for u, v in g.edges() if (side >> u & 1) != (side >> v & 1))
        return cls(side, crossing)

    def vertices(self) -> list[int]:
        return vertices_of(self.side)


class DegreeProfile(NamedTuple):
    min_degree: int
    max_degree: int
    sequence: tuple[int, ...]


def new_graph(n: int) -> Graph:
    return Graph(n)


def add_edge(g: Graph, u: int, v: int) -> Graph:
    """Add edge uv in place; re-adding an existing edge is a no-op."""
    return g.add_edge(u, v)


def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    return Graph(n, edges)


def complete_graph(n: int) -> Graph:
    return Graph(n, ((u, v) for u in range(n) for v in range(u + 1, n)))


def cycle_graph(n: int) -> Graph:
    return Graph(n, ((i, (i + 1) % n) for i in range(n)))


def path_graph(n: int) -> Graph:
    return Graph(n, ((i, i + 1) for i in range(n - 1)))


def complement_edges(g: Graph) -> list[tuple[int, int]]:
    full = g.full_mask
    return [(u, v) for u in range(g.n) for v in vertices_of(full & ~g.adj[u] & ~((2 << u) - 1))]


def induced_subgraph(g: Graph, verts: int) -> tuple[Graph, list[int]]:
    """G[verts] relabeled 0..|verts|-1 in increasing order of old label.

    Returns the subgraph and ``labels`` with labels[new] = old.
    """
    if verts & ~g.full_mask:
        raise GraphError("vertex set is not a subset of V(G)")
    labels = vertices_of(verts)
    index = {old: new for new, old in enumerate(labels)}
    h = Graph(len(labels))
    for new, old in enumerate(labels):
        for w in vertices_of(g.adj[old] & verts):
            if w > old:
                h.add_edge(new, index[w])
    return h, labels


def degree_profile(g: Graph) -> DegreeProfile:
    if g.n == 0:
        raise GraphError("degree profile of the empty graph is undefined")
    seq = tuple(g.degree(v) for v in range(g.n))
    return DegreeProfile(min(seq), max(seq), seq)


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        raise GraphError("connectivity of the empty graph is undefined")
    return _backend.kernels(g.n).component_of(g.adj, g.full_mask, 0) == g.full_mask


# -- edge-list text format ---------------------------------------------------


def format_edge_list(g: Graph) -> str:
    """Canonical text: ``n m`` then one ``u v`` line per edge, u < v, sorted."""
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> Graph:
    """Parse the edge-list format.  Pairs may be unordered or repeated."""
    rows = [ln.split() for ln in text.splitlines() if ln.strip()]
    if not rows:
        raise GraphError("empty edge list")
    try:
        n, m = (int(x) for x in rows[0])
    except ValueError as exc:
        raise GraphError(f"bad header {' '.join(rows[0])!r}; expected 'n m'") from exc
    if len(rows) - 1 != m:
        raise GraphError(f"header announces {m} edges, found {len(rows) - 1} lines")
    g = Graph(n)
    for lineno, row in enumerate(rows[1:], start=2):
        if len(row) != 2:
            raise GraphError(f"line {lineno}: expected 'u v'")
        try:
            u, v = int(row[0]), int(row[1])
        except ValueError as exc:
            raise GraphError(f"line {lineno}: non-integer vertex") from exc
        g.add_edge(u, v)
    return g


def read_edge_list(path) -> Graph:
    return parse_edge_list(Path(path).read_text(encoding="ascii"))


def write_edge_list(g: Graph, path) -> None:
    Path(path).write_text(format_edge_list(g), encoding="ascii", newline="\n")


def canonical_form(g: Graph) -> tuple[int, Graph]:
    """Isomorphism-invariant code and the relabeled representative.

    The code is the minimal column-major upper-triangle bit string over all
    relabelings that list vertices by non-increasing degree.
    """
    code, perm = _backend.search_kernels(g.n).canonical_code(g.adj, g.n)
    h = Graph(g.n)
    for a in range(g.n):
        for b in range(a + 1, g.n):
            if g.adj[perm[a]] >> perm[b] & 1:
                h.add_edge(a, b)
    return code, h
