"""Named graph families and closed-form edge counts."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from math import comb
from typing import Sequence

from .graph import Graph, GraphError


def rho(k: int, n: int) -> int:
    """(k-1)(n-1) - floor(n/(k+1)) * C(k-1, 2): the k-edge-connectivity saturation number."""
    if k < 1 or n < 1:
        raise ValueError(f"rho needs k >= 1 and n >= 1, got k={k}, n={n}")
    return (k - 1) * (n - 1) - (n // (k + 1)) * comb(k - 1, 2)


def extremal_count(k: int, n: int) -> int:
    """(k-1)n - C(k, 2): edges of a (k-1)-tree on n vertices."""
    return (k - 1) * n - comb(k, 2)


def build_k_minus(k: int) -> Graph:
    """K_{k+1} minus the edge {0, k}."""
    if k < 2:
        raise GraphError(f"K_(k+1)^- needs k >= 2, got {k}")
    g = Graph(k + 1)
    for u in range(k + 1):
        for v in range(u + 1, k + 1):
            if (u, v) != (0, k):
                g.add_edge(u, v)
    return g


def build_complete_split(n: int, k: int) -> Graph:
    """Clique on vertices 0..k-2 joined to the independent set k-1..n-1."""
    if k < 1 or n < k:
        raise GraphError(f"S_(n,k) needs n >= k >= 1, got n={n}, k={k}")
    g = Graph(n)
    for u in range(k - 1):
        for v in range(u + 1, n):
            g.add_edge(u, v)
    return g


@dataclass
class GknLayout:
    """Block/tail membership of the ladder construction.

    ``blocks[i][j]`` is the vertex u_{i+1, j+1}; ``tail[j]`` is w_{j+1}.
    """

    k: int
    n: int
    t: int
    r: int
    blocks: list[list[int]] = field(default_factory=list)
    tail: list[int] = field(default_factory=list)

    def block_mask(self, i: int) -> int:
        """Bitset of the i-th block (0-based)."""
        m = 0
        for v in self.blocks[i]:
            m |= 1 << v
        return m

    def to_json(self) -> dict:
        return {"k": self.k, "n": self.n, "t": self.t, "r": self.r,
                "blocks": [list(b) for b in self.blocks], "tail": list(self.tail)}


def build_gkn(k: int, n: int) -> tuple[Graph, GknLayout]:
    """Ladder of t = n // (k+1) copies of K_{k+1}^- plus r tail vertices.

    Consecutive blocks are joined by u_{i,j} u_{i+1,j} for j outside {2, k};
    each tail vertex is adjacent to the k-1 middle vertices of the last block.
    u_{i,j} has label (i-1)(k+1) + (j-1), w_j has label t(k+1) + (j-1).
    """
    if k < 3 or n < k + 1:
        raise GraphError(f"G_(k,n) needs k >= 3 and n >= k+1, got k={k}, n={n}")
    t, r = divmod(n, k + 1)
    layout = GknLayout(k, n, t, r)
    g = Graph(n)
    for i in range(t):
        block = [i * (k + 1) + j for j in range(k + 1)]
        layout.blocks.append(block)
        for a in range(k + 1):
            for b in range(a + 1, k + 1):
                if (a, b) != (0, k):
                    g.add_edge(block[a], block[b])
        assert not g.has_edge(block[0], block[k])
    rungs = [j for j in range(k + 1) if j not in (1, k - 1)]  # 0-based [k+1] - {2, k}
    for i in range(t - 1):
        for j in rungs:
            g.add_edge(layout.blocks[i][j], layout.blocks[i + 1][j])
    middle = layout.blocks[-1][1:k]
    for j in range(r):
        w = t * (k + 1) + j
        layout.tail.append(w)
        for v in middle:
            g.add_edge(w, v)
    return g, layout


def _random_attachments(q: int, n: int, seed: int) -> list[tuple[int, ...]]:
    # Contract: random.Random(seed); cliques kept in creation order, starting
    # with (0..q-1); vertex v picks cliques[rng.randrange(len(cliques))], then
    # appends (clique - {x}) + {v} sorted, for x in the clique in ascending order.
    rng = random.Random(seed)
    cliques: list[tuple[int, ...]] = [tuple(range(q))]
    attach = []
    for v in range(q, n):
        c = cliques[rng.randrange(len(cliques))]
        attach.append(c)
        for x in c:
            cliques.append(tuple(sorted([y for y in c if y != x] + [v])))
    return attach


def build_k_tree(q: int, n: int, attach: Sequence[Sequence[int]] | None = None,
                 seed: int | None = None) -> Graph:
    """A q-tree on n vertices: K_q on 0..q-1, then vertex v joined to attach[v-q].

    Pass an explicit attachment list, or a seed for the documented
    pseudo-random choice in ``_random_attachments``.
    """
    if q < 1 or n < q:
        raise GraphError(f"q-tree needs n >= q >= 1, got q={q}, n={n}")
    if attach is None:
        attach = _random_attachments(q, n, 0 if seed is None else seed)
    if len(attach) != n - q:
        raise GraphError(f"need {n - q} attachment cliques, got {len(attach)}")
    g = Graph(n)
    for u in range(q):
        for v in range(u + 1, q):
            g.add_edge(u, v)
    for v, clique in enumerate(attach, start=q):
        clique = list(clique)
        if len(set(clique)) != q or any(not 0 <= x < v for x in clique):
            raise GraphError(f"vertex {v}: attachment {clique} is not {q} earlier vertices")
        for a in range(q):
            for b in range(a + 1, q):
                if not g.has_edge(clique[a], clique[b]):
                    raise GraphError(f"vertex {v}: attachment {clique} is not a clique")
        for x in clique:
            g.add_edge(v, x)
    return g
