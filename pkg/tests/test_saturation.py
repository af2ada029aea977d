from math import comb

import pytest

import oracles
from satgraph import (
    build_complete_split,
    build_gkn,
    build_k_minus,
    build_k_tree,
    check_extremal_structure,
    is_saturated_edge,
    is_saturated_vertex,
    lemma_invariant_suite,
    rho,
    search_optimum,
)
from satgraph.errors import BudgetExceeded
from satgraph.graph import Graph, complete_graph, cycle_graph, path_graph
from satgraph.saturation import expected_value


def test_k_minus_is_edge_saturated():
    for k in range(2, 8):
        r = is_saturated_edge(build_k_minus(k), k)
        assert r.saturated and r.detail is None


def test_complete_small_graph_vacuous():
    assert is_saturated_edge(complete_graph(3), 3).saturated
    assert is_saturated_vertex(complete_graph(3), 3).saturated


def test_contains_member_report():
    r = is_saturated_edge(complete_graph(5), 3)
    assert r.verdict == "contains-member"
    assert r.witness.vertices() == [0, 1, 2, 3, 4]
    assert r.to_json() == {"family": "edge", "k": 3, "verdict": "contains-member",
                           "detail": {"kind": "edge-connected", "level": 3,
                                      "vertices": [0, 1, 2, 3, 4]}}


def test_misses_edge_report():
    r = is_saturated_edge(path_graph(4), 3)
    assert r.verdict == "misses-edge" and r.non_edge == (0, 2)
    assert r.to_json()["detail"] == {"non_edge": [0, 2]}


def test_g38_vertex_family_misses():
    r = is_saturated_vertex(build_gkn(3, 8)[0], 3)
    assert r.verdict == "misses-edge" and r.non_edge == (0, 5)


def test_trees_are_the_2_saturated_graphs():
    # every graph on 5 vertices: saturated for k=2 exactly when a tree
    for adj in oracles.all_graphs(5):
        g = Graph(5, oracles.edges_of(adj))
        tree = g.m == 4 and oracles._connected(adj, range(5))
        assert is_saturated_edge(g, 2).saturated == tree


@pytest.mark.parametrize("family", ["edge", "vertex"])
@pytest.mark.parametrize("k", [2, 3, 4])
def test_verdicts_match_oracle(backend_name, family, k):
    for n in (4, 5):
        for adj in oracles.all_graphs(n):
            g = Graph(n, oracles.edges_of(adj))
            assert (is_saturated_edge(g, k) if family == "edge"
                    else is_saturated_vertex(g, k)).saturated == oracles.saturated_bruteforce(adj, k, family)


@pytest.mark.parametrize("family", ["edge", "vertex"])
@pytest.mark.parametrize("k", [2, 3, 4])
@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_search_matches_bruteforce(family, k, n):
    lo, hi, nlo, nhi = oracles.sat_ex_bruteforce(n, k, family)
    sat = search_optimum(n, k, family, "sat")
    ex = search_optimum(n, k, family, "ex")
    assert (sat.value, ex.value) == (lo, hi)
    assert (len(sat.witnesses), len(ex.witnesses)) == (nlo, nhi)


# n = 6 from the same brute-force oracle (about a minute), frozen
@pytest.mark.parametrize("family,k,frozen", [
    ("edge", 3, (9, 9, 11, 11)),
    ("edge", 4, (12, 12, 3, 3)),
    ("vertex", 3, (9, 10, 9, 1)),
    ("vertex", 4, (12, 12, 3, 3)),
])
def test_search_n6_frozen(family, k, frozen):
    sat = search_optimum(6, k, family, "sat")
    ex = search_optimum(6, k, family, "ex")
    assert (sat.value, ex.value, len(sat.witnesses), len(ex.witnesses)) == frozen


@pytest.mark.parametrize("k,nmax", [(2, 8), (3, 8), (4, 7)])
def test_edge_sat_formula(k, nmax):
    for n in range(1, nmax + 1):
        sat = search_optimum(n, k, "edge", "sat")
        ex = search_optimum(n, k, "edge", "ex")
        assert sat.value == expected_value(n, k, "edge", "sat")
        if n > k:
            assert sat.value == rho(k, n)
        assert sat.value <= ex.value


@pytest.mark.parametrize("k", [2, 3])
def test_vertex_sat_formula(k):
    # the closed form counts a (k-1)-tree, so it needs n >= k
    for n in range(k, 8):
        res = search_optimum(n, k, "vertex", "sat")
        assert res.value == (k - 1) * n - comb(k, 2)
        assert res.value <= search_optimum(n, k, "vertex", "ex").value


def test_tree_counts():
    # unlabeled trees on 6, 7, 8 vertices
    assert [len(search_optimum(n, 2, "edge", "sat").witnesses) for n in (6, 7, 8)] == [6, 11, 23]


def test_witnesses_are_saturated_and_distinct():
    res = search_optimum(7, 3, "edge", "sat")
    assert len(set(res.witnesses)) == len(res.witnesses)
    for g in res.graphs():
        assert g.m == res.value and is_saturated_edge(g, 3).saturated


def test_search_is_deterministic():
    a = search_optimum(6, 3, "edge", "ex")
    b = search_optimum(6, 3, "edge", "ex")
    assert a.witnesses == b.witnesses and a.graphs_examined == b.graphs_examined


def test_search_workers_agree():
    one = search_optimum(7, 3, "edge", "sat")
    two = search_optimum(7, 3, "edge", "sat", workers=2)
    assert one.witnesses == two.witnesses and one.graphs_examined == two.graphs_examined


def test_search_budget():
    with pytest.raises(BudgetExceeded):
        search_optimum(9, 3, "edge", "sat")
    with pytest.raises(BudgetExceeded):
        search_optimum(8, 3, "vertex", "sat")
    assert search_optimum(8, 2, "vertex", "sat", max_order=8).value == 7


def test_search_rejects():
    with pytest.raises(ValueError):
        search_optimum(5, 3, "bogus")
    with pytest.raises(ValueError):
        search_optimum(5, 3, "edge", "max")
    with pytest.raises(ValueError):
        search_optimum(0, 3)


def test_result_json():
    d = search_optimum(4, 3, "edge", "sat").to_json()
    assert d["value"] == 5 and d["witnesses"] == ["4 5\n0 1\n0 2\n0 3\n1 2\n1 3\n"]
    assert set(d) == {"n", "k", "family", "mode", "value", "witnesses", "graphs_examined", "elapsed_ms"}


@pytest.mark.parametrize("n", [4, 5, 6, 7])
def test_extremal_structure(n):
    assert check_extremal_structure(search_optimum(n, 3, "edge", "ex"))


def test_extremal_structure_rejects():
    with pytest.raises(ValueError):
        check_extremal_structure(search_optimum(5, 3, "edge", "sat"))


def test_lemma_suite_on_constructions():
    for k in (3, 4):
        for n in range(k + 1, 3 * (k + 1)):
            statuses = dict(lemma_invariant_suite(build_gkn(k, n)[0], k))
            assert "fail" not in statuses.values()
            assert statuses["cut-decomposition"] == ("pass" if n >= k + 2 else "skip")


def test_lemma_suite_rejects_unsaturated():
    with pytest.raises(ValueError):
        lemma_invariant_suite(cycle_graph(5), 3)
    with pytest.raises(ValueError):
        lemma_invariant_suite(complete_graph(3), 3)


def test_lemma_suite_on_search_witnesses():
    for n in range(4, 8):
        for mode in ("sat", "ex"):
            for g in search_optimum(n, 3, "edge", mode).graphs():
                assert "fail" not in dict(lemma_invariant_suite(g, 3)).values()


def test_split_graph_vertex_saturated():
    for n in range(3, 10):
        assert is_saturated_vertex(build_complete_split(n, 3), 3).saturated


def test_k_tree_vertex_saturated_seeds():
    for seed in range(20):
        assert is_saturated_vertex(build_k_tree(2, 9, seed=seed), 3).saturated


def test_expected_value_unknown():
    assert expected_value(7, 3, "vertex", "ex") is None


def test_c5_contains_member():
    assert is_saturated_edge(cycle_graph(5), 2).verdict == "contains-member"


@pytest.mark.parametrize("k", [3, 4, 5])
def test_gkn_saturated_wide_range(k):
    for n in range(k + 1, 4 * (k + 1) + k + 1):
        assert is_saturated_edge(build_gkn(k, n)[0], k).saturated


def test_saturated_plus_edge_contains_member():
    for k in (2, 3):
        for n in (5, 6, 7):
            for g in search_optimum(n, k, "edge", "sat").graphs():
                for u in range(n):
                    for v in range(u + 1, n):
                        if not g.has_edge(u, v):
                            assert is_saturated_edge(g.with_edge(u, v), k).verdict == "contains-member"


def test_lemma_suite_g312():
    g, lay = build_gkn(3, 12)
    assert dict(lemma_invariant_suite(g, 3)) == {
        "edge-connectivity": "pass", "cut-decomposition": "pass", "contains-k-minus": "pass"}


def test_k_minus_lemma_boundary():
    assert dict(lemma_invariant_suite(build_k_minus(3), 3))["cut-decomposition"] == "skip"


def test_extremal_structure_k4_base():
    # n = k+1: deleting the degree-(k-1) vertex leaves K_k
    assert check_extremal_structure(search_optimum(5, 4, "edge", "ex"))
