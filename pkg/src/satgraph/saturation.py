"""Saturation verdicts and exhaustive sat/ex search at small order.

A graph is saturated for a family when it contains no member but adding any
missing edge creates one.  The two families here are graphs with edge
connectivity >= k ("edge") and vertex connectivity >= k ("vertex").
"""

from __future__ import annotations

import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from math import comb

from . import _backend
from ._kernels_py import CONTAINS_MEMBER, EDGE, MISSES_EDGE, SATURATED, VERTEX
from .connectivity import (
    SubgraphWitness,
    contains_k_minus,
    edge_connectivity,
    global_min_edge_cut,
    node_budget,
)
from .constructions import extremal_count, rho
from .errors import BudgetExceeded
from .graph import (
    Graph,
    canonical_form,
    complete_graph,
    format_edge_list,
    induced_subgraph,
    parse_edge_list,
)

log = logging.getLogger(__name__)

FAMILIES = {"edge": EDGE, "vertex": VERTEX}
KINDS = {"edge": "edge-connected", "vertex": "vertex-connected"}
MODES = ("sat", "ex")
DEFAULT_MAX_ORDER = {"edge": 8, "vertex": 7}

_VERDICTS = {SATURATED: "saturated", CONTAINS_MEMBER: "contains-member", MISSES_EDGE: "misses-edge"}


@dataclass(frozen=True)
class SaturationReport:
    family: str
    k: int
    verdict: str
    witness: SubgraphWitness | None = None
    non_edge: tuple[int, int] | None = None

    @property
    def saturated(self) -> bool:
        return self.verdict == "saturated"

    @property
    def detail(self):
        return self.witness if self.witness is not None else self.non_edge

    def to_json(self) -> dict:
        if self.witness is not None:
            detail = {"kind": self.witness.kind, "level": self.witness.level,
                      "vertices": self.witness.vertices()}
        elif self.non_edge is not None:
            detail = {"non_edge": list(self.non_edge)}
        else:
            detail = None
        return {"family": self.family, "k": self.k, "verdict": self.verdict, "detail": detail}


def _report(g: Graph, k: int, family: str, budget: int | None) -> SaturationReport:
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    code, a, b = _backend.kernels(g.n).saturation_verdict(
        g.adj, g.n, k, FAMILIES[family], node_budget(budget))
    if code == CONTAINS_MEMBER:
        return SaturationReport(family, k, _VERDICTS[code], witness=SubgraphWitness(a, KINDS[family], k))
    if code == MISSES_EDGE:
        return SaturationReport(family, k, _VERDICTS[code], non_edge=(a, b))
    return SaturationReport(family, k, _VERDICTS[code])


def is_saturated_edge(g: Graph, k: int) -> SaturationReport:
    """Verdict for the family of k-edge-connected graphs."""
    return _report(g, k, "edge", None)


def is_saturated_vertex(g: Graph, k: int, budget: int | None = None) -> SaturationReport:
    """Verdict for the family of k-connected graphs."""
    return _report(g, k, "vertex", budget)


# -- exhaustive search -------------------------------------------------------


@dataclass
class SearchResult:
    n: int
    k: int
    family: str
    mode: str
    value: int
    witnesses: list[str] = field(default_factory=list)
    graphs_examined: int = 0
    elapsed: float = 0.0

    def graphs(self) -> list[Graph]:
        return [parse_edge_list(w) for w in self.witnesses]

    def to_json(self) -> dict:
        return {"n": self.n, "k": self.k, "family": self.family, "mode": self.mode,
                "value": self.value, "witnesses": list(self.witnesses),
                "graphs_examined": self.graphs_examined,
                "elapsed_ms": round(self.elapsed * 1000.0, 3)}


def _edge_range(n: int, k: int, family: str) -> tuple[int, int]:
    # lower: connected with min degree >= k-1
    lo = max(n - 1, -(-n * (k - 1) // 2))
    # upper: splitting along cuts of < k edges down to single vertices
    # charges at most k-1 edges per split, so no k-edge-connected subgraph
    # means at most (k-1)(n-1) edges
    hi = (k - 1) * (n - 1) if family == "edge" else comb(n, 2)
    return lo, min(hi, comb(n, 2))


def _graph_from_bits(n: int, bits: int) -> Graph:
    g = Graph(n)
    p = 0
    for i in range(n):
        for j in range(i + 1, n):
            if bits >> p & 1:
                g.add_edge(i, j)
            p += 1
    return g


def _level_job(args):
    n, k, fam, m, row0, max_nodes = args
    return _backend.search_kernels(n).search_level(n, k, fam, m, row0, max_nodes)


def _run_level(n, k, fam, m, workers, max_nodes):
    if workers <= 1:
        return _backend.search_kernels(n).search_level(n, k, fam, m, None, max_nodes)
    subsets = range(1 << (n - 1))
    chunks = [list(subsets[i::workers]) for i in range(workers)]
    found, examined, nodes = [], 0, 0
    with ProcessPoolExecutor(max_workers=workers) as pool:
        for f, e, nd in pool.map(_level_job, [(n, k, fam, m, c, max_nodes) for c in chunks]):
            found.extend(f)
            examined += e
            nodes += nd
    return found, examined, nodes


def search_optimum(n: int, k: int, family: str = "edge", mode: str = "sat", *,
                   workers: int = 1, max_order: int | None = None,
                   budget: int | None = None) -> SearchResult:
    """Exact sat/ex over all labeled graphs on n vertices.

    Edge counts are scanned upward (sat) or downward (ex) from feasibility
    bounds; the first count holding a saturated graph is the optimum.  One
    witness per isomorphism class is returned, sorted by canonical code.
    """
    if family not in FAMILIES:
        raise ValueError(f"family must be 'edge' or 'vertex', got {family!r}")
    if mode not in MODES:
        raise ValueError(f"mode must be 'sat' or 'ex', got {mode!r}")
    if n < 1 or k < 1:
        raise ValueError(f"need n >= 1 and k >= 1, got n={n}, k={k}")
    limit = DEFAULT_MAX_ORDER[family] if max_order is None else max_order
    if n > limit:
        raise BudgetExceeded(f"n={n} exceeds the {family}-family order budget {limit}")
    max_nodes = node_budget(budget)
    start = time.perf_counter()

    if k == 1:
        # any edge is a member, so only the edgeless graph qualifies
        graphs, examined = [Graph(n)], 1
    elif n <= k:
        # no member fits on n <= k vertices; only K_n has nothing to add
        graphs, examined = [complete_graph(n)], 1
    else:
        lo, hi = _edge_range(n, k, family)
        levels = range(lo, hi + 1) if mode == "sat" else range(hi, lo - 1, -1)
        graphs, examined = [], 0
        for m in levels:
            bits, ex, nodes = _run_level(n, k, FAMILIES[family], m, workers, max_nodes)
            examined += ex
            log.debug("n=%d k=%d %s %s m=%d: %d saturated of %d examined (%d nodes)",
                      n, k, family, mode, m, len(bits), ex, nodes)
            if bits:
                graphs = [_graph_from_bits(n, b) for b in bits]
                break
        if not graphs:
            raise RuntimeError(f"no saturated graph found for n={n}, k={k}, {family}")

    classes = {}
    for g in graphs:
        code, rep = canonical_form(g)
        classes.setdefault(code, rep)
    witnesses = [format_edge_list(classes[c]) for c in sorted(classes)]
    return SearchResult(n, k, family, mode, graphs[0].m, witnesses, examined,
                        time.perf_counter() - start)


def expected_value(n: int, k: int, family: str, mode: str) -> int | None:
    """Closed-form optimum where one is known, else None."""
    if k == 1:
        return 0
    if n <= k:
        return comb(n, 2)
    if family == "edge":
        return rho(k, n) if mode == "sat" else extremal_count(k, n)
    if mode == "sat":
        return extremal_count(k, n)
    return None


def check_extremal_structure(result: SearchResult) -> bool:
    """Every ex-witness has a degree-(k-1) vertex whose deletion leaves a
    saturated graph with (k-1)(n-1) - C(k,2) edges."""
    if result.mode != "ex" or result.family != "edge":
        raise ValueError("needs an edge-family ex search result")
    n, k = result.n, result.k
    if n < k + 1:
        raise ValueError(f"needs n >= k+1, got n={n}, k={k}")
    target = extremal_count(k, n - 1)
    for g in result.graphs():
        ok = False
        for v in range(n):
            if g.degree(v) != k - 1:
                continue
            h, _ = g.without_vertex(v)
            if h.m == target and is_saturated_edge(h, k).saturated:
                ok = True
                break
        if not ok:
            return False
    return True


def lemma_invariant_suite(g: Graph, k: int) -> list[tuple[str, str]]:
    """Structural facts every edge-saturated graph on >= k+1 vertices obeys.

    Returns (check, "pass" | "fail" | "skip") for:
      edge-connectivity  kappa'(G) = k - 1
      cut-decomposition  across the returned minimum cut, with S the larger
                         side, G[S] is saturated on >= k+1 vertices and G[V-S]
                         is K_1 or likewise (k >= 3, n >= k+2 only)
      contains-k-minus   some k+1 vertices induce K_{k+1} minus an edge
    """
    if g.n < k + 1:
        raise ValueError(f"needs n >= k+1, got n={g.n}, k={k}")
    if not is_saturated_edge(g, k).saturated:
        raise ValueError("input graph is not saturated")
    out = [("edge-connectivity", "pass" if edge_connectivity(g) == k - 1 else "fail")]

    if k >= 3 and g.n >= k + 2:
        cut = global_min_edge_cut(g)
        big = cut.side
        small = g.full_mask & ~big
        if bin(big).count("1") < bin(small).count("1"):
            big, small = small, big

        def nontrivial(mask):
            h, _ = induced_subgraph(g, mask)
            return h.n >= k + 1 and is_saturated_edge(h, k).saturated

        ok = cut.size == k - 1 and nontrivial(big) and (
            bin(small).count("1") == 1 or nontrivial(small))
        out.append(("cut-decomposition", "pass" if ok else "fail"))
    else:
        out.append(("cut-decomposition", "skip"))

    if k >= 2:
        out.append(("contains-k-minus", "pass" if contains_k_minus(g, k) is not None else "fail"))
    else:
        out.append(("contains-k-minus", "skip"))
    return out
