from math import comb

import pytest

from satgraph import is_saturated_vertex
from satgraph.constructions import (
    _random_attachments,
    build_complete_split,
    build_gkn,
    build_k_minus,
    build_k_tree,
    extremal_count,
    rho,
)
from satgraph.errors import GraphError
from satgraph.graph import Cut, complete_graph


def test_rho_small_values():
    assert [rho(3, n) for n in range(4, 9)] == [5, 7, 9, 11, 12]
    assert [rho(2, n) for n in range(2, 9)] == [n - 1 for n in range(2, 9)]


@pytest.mark.parametrize("k", range(2, 51))
def test_rho_at_k_plus_one(k):
    assert rho(k, k + 1) == comb(k + 1, 2) - 1


def test_rho_rejects():
    with pytest.raises(ValueError):
        rho(0, 5)


def test_extremal_count():
    assert extremal_count(3, 7) == 11
    assert extremal_count(2, 5) == 4


@pytest.mark.parametrize("k", range(2, 9))
def test_k_minus(k):
    g = build_k_minus(k)
    assert g.n == k + 1 and g.m == comb(k + 1, 2) - 1
    assert not g.has_edge(0, k)


def test_k_minus_rejects():
    with pytest.raises(GraphError):
        build_k_minus(1)


def test_complete_split():
    g = build_complete_split(8, 3)
    assert g.m == 13
    assert [g.degree(v) for v in range(8)] == [7, 7] + [2] * 6
    assert build_complete_split(4, 4) == complete_graph(4)


def test_g39_layout():
    g, lay = build_gkn(3, 9)
    assert (g.n, g.m) == (9, 14)
    assert (lay.t, lay.r) == (2, 1)
    assert lay.blocks == [[0, 1, 2, 3], [4, 5, 6, 7]]
    assert lay.tail == [8]
    # rungs at positions 1 and 4 of each block
    assert g.has_edge(0, 4) and g.has_edge(3, 7)
    assert not g.has_edge(1, 5) and not g.has_edge(2, 6)
    assert sorted(g.neighbors(8)) == [5, 6]
    assert lay.to_json() == {"k": 3, "n": 9, "t": 2, "r": 1,
                             "blocks": [[0, 1, 2, 3], [4, 5, 6, 7]], "tail": [8]}


@pytest.mark.parametrize("k", [3, 4, 5, 6])
def test_gkn_structure(k):
    for n in range(k + 1, 4 * (k + 1) + k):
        g, lay = build_gkn(k, n)
        g.validate()
        assert g.n == n and g.m == rho(k, n)
        for i in range(lay.t):
            b = lay.blocks[i]
            assert not g.has_edge(b[0], b[k])
        for i in range(lay.t - 1):
            side = 0
            for j in range(i + 1):
                side |= lay.block_mask(j)
            assert Cut.from_side(g, side).size == k - 1
        for w in lay.tail:
            assert g.degree(w) == k - 1


def test_gkn_rejects():
    with pytest.raises(GraphError):
        build_gkn(2, 6)
    with pytest.raises(GraphError):
        build_gkn(3, 3)


def test_k_tree_base_case():
    assert build_k_tree(2, 3, attach=[(0, 1)]) == complete_graph(3)


@pytest.mark.parametrize("q", [1, 2, 3, 4])
def test_k_tree_edge_count(q):
    for seed in range(10):
        g = build_k_tree(q, 9, seed=seed)
        g.validate()
        assert g.m == q * 9 - comb(q + 1, 2)


def test_k_tree_reproduces_split_graph():
    for n, k in [(6, 3), (8, 3), (7, 4)]:
        base = tuple(range(k - 1))
        assert build_k_tree(k - 1, n, attach=[base] * (n - k + 1)) == build_complete_split(n, k)


def test_k_tree_rejects_bad_attachments():
    with pytest.raises(GraphError):
        build_k_tree(2, 4, attach=[(0, 1), (0, 3)])  # 0-3 not an edge yet
    with pytest.raises(GraphError):
        build_k_tree(2, 4, attach=[(0, 1)])
    with pytest.raises(GraphError):
        build_k_tree(3, 2)


def test_random_attachments_frozen():
    # the generator is part of the external contract
    assert _random_attachments(2, 6, 7) == [(0, 1), (0, 1), (1, 3), (3, 4)]
    assert _random_attachments(2, 5, 0) == [(0, 1), (1, 2), (0, 1)]


@pytest.mark.parametrize("k", [3, 4])
def test_k_tree_vertex_saturated(k):
    for n in range(k, 10):
        for seed in range(3):
            assert is_saturated_vertex(build_k_tree(k - 1, n, seed=seed), k).saturated
