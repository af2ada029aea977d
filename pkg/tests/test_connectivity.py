import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from conftest import random_corpus
from satgraph.connectivity import (
    contains_k_minus,
    edge_connectivity,
    global_min_edge_cut,
    has_k_connected_subgraph,
    has_k_edge_connected_subgraph,
    min_vertex_cut,
    node_budget,
    vertex_connectivity,
)
from satgraph.errors import BudgetExceeded, GraphError
from satgraph.graph import Cut, Graph, complete_graph, cycle_graph, induced_subgraph, path_graph
from satgraph.constructions import build_gkn, build_k_minus


@st.composite
def graphs(draw, max_n=8, min_n=2):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    bits = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph(n, [p for p, b in zip(pairs, bits) if b])


# values below were computed with the brute-force oracles and then frozen
@pytest.mark.parametrize("name,lam,kappa", [
    ("K4-", 2, 2), ("bowtie", 2, 1), ("S83", 2, 2), ("C5", 2, 2), ("K5", 4, 4),
    ("P4", 1, 1), ("2K2", 0, 0), ("star5", 1, 1), ("petersen", 3, 3), ("G39", 2, 2),
])
def test_frozen_connectivity(corpus, backend_name, name, lam, kappa):
    g = corpus[name]
    assert edge_connectivity(g) == lam
    assert vertex_connectivity(g) == kappa


def test_g39_cut_certificate(backend_name):
    cut = global_min_edge_cut(build_gkn(3, 9)[0])
    assert cut.side == 0b1111 and cut.crossing_edges == ((0, 4), (3, 7))


def test_disconnected_cut_is_empty():
    cut = global_min_edge_cut(Graph(4, [(0, 1), (2, 3)]))
    assert cut.size == 0 and cut.side == 0b0011


def test_needs_two_vertices():
    for f in (edge_connectivity, vertex_connectivity, global_min_edge_cut, min_vertex_cut):
        with pytest.raises(GraphError):
            f(Graph(1))


def test_complete_graph_kappa():
    # removing all but one vertex leaves K_1
    assert min_vertex_cut(complete_graph(5)) == (4, [0, 1, 2, 3])


def test_min_vertex_cut_separates(corpus):
    for g in corpus.values():
        if g.n < 2:
            continue
        kappa, sep = min_vertex_cut(g)
        if kappa == g.n - 1:
            continue
        assert len(sep) == kappa
        rest = g.full_mask
        for v in sep:
            rest &= ~(1 << v)
        h, _ = induced_subgraph(g, rest)
        assert not oracles._connected(h.adj, range(h.n))


def test_corpus_against_oracles(corpus, backend_name):
    for g in corpus.values():
        if g.n < 2:
            continue
        lam = edge_connectivity(g)
        assert lam == oracles.min_cut_bruteforce(g.adj)
        assert vertex_connectivity(g) == oracles.vertex_connectivity_bruteforce(g.adj)
        assert vertex_connectivity(g) <= lam <= min(g.degree(v) for v in range(g.n))


def _smallest_min_side(g):
    return min((Cut.from_side(g, s).size, s) for s in range(1, g.full_mask))


def test_tie_break_smallest_side(backend_name):
    for g in random_corpus(80, 8, seed=99):
        cut = global_min_edge_cut(g)
        assert (cut.size, cut.side) == _smallest_min_side(g)


@given(graphs())
@settings(max_examples=150, deadline=None)
def test_edge_connectivity_property(g):
    cut = global_min_edge_cut(g)
    assert cut.size == edge_connectivity(g) == oracles.min_cut_bruteforce(g.adj)
    assert (cut.size, cut.side) == _smallest_min_side(g)


@given(graphs(max_n=7), st.integers(1, 4))
@settings(max_examples=150, deadline=None)
def test_subgraph_detectors_property(g, k):
    w = has_k_edge_connected_subgraph(g, k)
    assert (w is not None) == oracles.has_kecs_bruteforce(g.adj, k)
    if w is not None:
        assert oracles.min_cut_bruteforce(g.adj, w.vertices()) >= k
    c = has_k_connected_subgraph(g, k)
    assert (c is not None) == oracles.has_kcs_bruteforce(g.adj, k)
    if c is not None:
        assert len(c.vertices()) >= k + 1
        assert oracles.vertex_connectivity_bruteforce(g.adj, c.vertices()) >= k


@given(graphs(max_n=7), st.integers(1, 4), st.data())
@settings(max_examples=80, deadline=None)
def test_monotone_under_edge_addition(g, k, data):
    missing = [(u, v) for u in range(g.n) for v in range(u + 1, g.n) if not g.has_edge(u, v)]
    if not missing or has_k_edge_connected_subgraph(g, k) is None:
        return
    u, v = data.draw(st.sampled_from(missing))
    assert has_k_edge_connected_subgraph(g.with_edge(u, v), k) is not None


def test_detectors_on_constructions():
    g, lay = build_gkn(3, 9)
    assert has_k_edge_connected_subgraph(g, 3) is None
    assert has_k_edge_connected_subgraph(g, 2).vertices() == list(range(9))
    assert has_k_connected_subgraph(cycle_graph(6), 2).vertices() == list(range(6))
    assert has_k_connected_subgraph(path_graph(6), 2) is None


def test_vertex_detector_budget():
    g = build_gkn(3, 12)[0]
    with pytest.raises(BudgetExceeded):
        has_k_connected_subgraph(g, 3, budget=2)


def test_node_budget_env(monkeypatch):
    monkeypatch.setenv("SATGRAPH_BUDGET_NODES", "17")
    assert node_budget() == 17
    assert node_budget(5) == 5


def test_contains_k_minus():
    assert contains_k_minus(build_k_minus(3), 3) == 0b1111
    assert contains_k_minus(cycle_graph(5), 3) is None
    g, lay = build_gkn(3, 9)
    found = contains_k_minus(g, 3)
    assert found in (lay.block_mask(0), lay.block_mask(1))


def test_inputs_not_mutated(corpus):
    g = corpus["G39"]
    before = list(g.adj)
    edge_connectivity(g)
    has_k_connected_subgraph(g, 3)
    assert g.adj == before


def test_random_large_graph_backends_agree(monkeypatch):
    import satgraph._backend as backend
    rng = random.Random(4)
    gs = [Graph(30, [(u, v) for u in range(30) for v in range(u + 1, 30) if rng.random() < 0.3])
          for _ in range(5)]
    fast = [(edge_connectivity(g), global_min_edge_cut(g).side, vertex_connectivity(g)) for g in gs]
    monkeypatch.setattr(backend, "compiled", None)
    slow = [(edge_connectivity(g), global_min_edge_cut(g).side, vertex_connectivity(g)) for g in gs]
    assert fast == slow
