import random

import pytest

import satgraph._backend as backend
from satgraph import build_complete_split, build_gkn, build_k_minus, build_k_tree
from satgraph.graph import Graph, complete_graph, cycle_graph, path_graph


def random_graph(n, p, rng):
    g = Graph(n)
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                g.add_edge(u, v)
    return g


def random_corpus(count, max_n, seed, min_n=2):
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        n = rng.randint(min_n, max_n)
        out.append(random_graph(n, rng.choice([0.2, 0.35, 0.5, 0.7, 0.9]), rng))
    return out


def named_graphs():
    two_triangles = Graph(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)])
    named = {
        "K1": Graph(1),
        "K2": complete_graph(2),
        "P4": path_graph(4),
        "C5": cycle_graph(5),
        "K5": complete_graph(5),
        "K4-": build_k_minus(3),
        "K5-": build_k_minus(4),
        "2K2": Graph(4, [(0, 1), (2, 3)]),
        "star5": Graph(5, [(0, i) for i in range(1, 5)]),
        "bowtie": two_triangles,
        "petersen": Graph(10, [(i, (i + 1) % 5) for i in range(5)]
                          + [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
                          + [(i, i + 5) for i in range(5)]),
        "S83": build_complete_split(8, 3),
        "G38": build_gkn(3, 8)[0],
        "G39": build_gkn(3, 9)[0],
        "G47": build_gkn(4, 7)[0],
        "tree2_9": build_k_tree(2, 9, seed=3),
    }
    return named


@pytest.fixture(scope="session")
def corpus():
    graphs = dict(named_graphs())
    for i, g in enumerate(random_corpus(60, 9, seed=20240611)):
        graphs[f"rand{i}"] = g
    return graphs


@pytest.fixture(params=["compiled", "python"])
def backend_name(request, monkeypatch):
    """Run the test once per kernel backend."""
    if request.param == "compiled":
        if backend.compiled is None:
            pytest.skip("compiled extension not built")
    else:
        monkeypatch.setattr(backend, "compiled", None)
    return request.param
