"""Edge/vertex connectivity, minimum cuts and k-connected subgraph detectors.

Minimum edge cuts come from unit-capacity max-flow out of the lowest vertex;
vertex connectivity from max-flow on the vertex-split digraph over all
nonadjacent pairs.  The detectors split along cuts of size < k until they
find a piece that is k-(edge-)connected or run out of vertices.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from itertools import combinations
from math import comb

from . import _backend
from .graph import Cut, Graph, GraphError, vertices_of

DEFAULT_NODE_BUDGET = 10**9


def node_budget(budget: int | None = None) -> int:
    """Explicit budget, else $SATGRAPH_BUDGET_NODES, else the default."""
    if budget is not None:
        return budget
    env = os.environ.get("SATGRAPH_BUDGET_NODES")
    return int(env) if env else DEFAULT_NODE_BUDGET


@dataclass(frozen=True)
class SubgraphWitness:
    verts: int
    kind: str  # "edge-connected" | "vertex-connected"
    level: int

    def vertices(self) -> list[int]:
        return vertices_of(self.verts)


def _need_two(g: Graph) -> None:
    if g.n < 2:
        raise GraphError(f"connectivity needs at least 2 vertices, got {g.n}")


def global_min_edge_cut(g: Graph) -> Cut:
    """Minimum edge cut.  Disconnected graphs give a size-0 cut."""
    _need_two(g)
    size, side = _backend.kernels(g.n).edge_min_cut(g.adj, g.full_mask)
    cut = Cut.from_side(g, side)
    assert cut.size == size
    return cut


def edge_connectivity(g: Graph) -> int:
    _need_two(g)
    return _backend.kernels(g.n).edge_connectivity_capped(g.adj, g.full_mask, g.n)


def vertex_connectivity(g: Graph) -> int:
    """kappa(G); K_n gives n - 1."""
    _need_two(g)
    kappa, _ = _backend.kernels(g.n).vertex_min_cut(g.adj, g.full_mask)
    return kappa


def min_vertex_cut(g: Graph) -> tuple[int, list[int]]:
    """kappa(G) with a separating set of that size (n-1 vertices for K_n)."""
    _need_two(g)
    kappa, cut = _backend.kernels(g.n).vertex_min_cut(g.adj, g.full_mask)
    return kappa, vertices_of(cut)


def has_k_edge_connected_subgraph(g: Graph, k: int) -> SubgraphWitness | None:
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    verts = _backend.kernels(g.n).ecs_piece(g.adj, g.full_mask, k)
    return SubgraphWitness(verts, "edge-connected", k) if verts else None


def has_k_connected_subgraph(g: Graph, k: int, budget: int | None = None) -> SubgraphWitness | None:
    """Search induced subgraphs for one with vertex connectivity >= k.

    Raises BudgetExceeded if the decomposition visits more than ``budget``
    distinct vertex sets.
    """
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    verts = _backend.kernels(g.n).cs_piece(g.adj, g.full_mask, k, node_budget(budget))
    return SubgraphWitness(verts, "vertex-connected", k) if verts else None


def contains_k_minus(g: Graph, k: int) -> int | None:
    """Bitset of k+1 vertices inducing at least C(k+1, 2) - 1 edges, or None."""
    if k < 2:
        raise ValueError(f"k must be >= 2, got {k}")
    need = comb(k + 1, 2) - 1
    cand = [v for v in range(g.n) if g.degree(v) >= k - 1]
    for combo in combinations(cand, k + 1):
        mask = 0
        for v in combo:
            mask |= 1 << v
        inner = sum(bin(g.adj[v] & mask).count("1") for v in combo) // 2
        if inner >= need:
            return mask
    return None
