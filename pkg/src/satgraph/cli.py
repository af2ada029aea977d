"""``satgraph`` command line.

Exit codes:
  0  success / saturated
  1  bad input (parse error, invalid parameters)
  2  verify: graph contains a member of the family
  3  verify: some non-edge creates no member
  4  enumeration budget exceeded
  5  spectral: partition is not equitable
  6  search: measured optimum contradicts the closed-form value
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import sys
from dataclasses import dataclass
from pathlib import Path

from . import __version__
from .connectivity import (
    contains_k_minus,
    edge_connectivity,
    global_min_edge_cut,
    has_k_connected_subgraph,
    has_k_edge_connected_subgraph,
    min_vertex_cut,
)
from .constructions import (
    build_complete_split,
    build_gkn,
    build_k_minus,
    build_k_tree,
    extremal_count,
    rho,
)
from .errors import BudgetExceeded, GraphError
from .graph import degree_profile, format_edge_list, is_connected, read_edge_list, vertices_of
from .saturation import (
    DEFAULT_MAX_ORDER,
    expected_value,
    is_saturated_edge,
    is_saturated_vertex,
    search_optimum,
)
from .spectral import (
    degree_bounds_check,
    is_equitable,
    quotient_spectral_radius,
    read_partition,
    saturated_spectral_floor,
)

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_CONTAINS = 2
EXIT_MISSES = 3
EXIT_BUDGET = 4
EXIT_NOT_EQUITABLE = 5
EXIT_CONTRADICTION = 6

_VERDICT_EXIT = {"saturated": EXIT_OK, "contains-member": EXIT_CONTAINS, "misses-edge": EXIT_MISSES}


def _num(x):
    """Render floats with 12 significant digits; recurse into containers."""
    if type(x).__module__ == "numpy":
        x = x.item()
    if isinstance(x, float):
        if math.isnan(x) or math.isinf(x):
            return str(x)
        return float(f"{x:.12g}")
    if isinstance(x, dict):
        return {k: _num(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_num(v) for v in x]
    return x


def emit(obj, out=None) -> None:
    out = out or sys.stdout
    out.write(json.dumps(_num(obj), indent=2) + "\n")


def parse_range(text: str) -> range:
    """'4..8' (inclusive) or a single integer."""
    if ".." in text:
        lo, hi = text.split("..", 1)
        lo, hi = int(lo), int(hi)
    else:
        lo = hi = int(text)
    if lo > hi or lo < 1:
        raise ValueError(f"bad range {text!r}")
    return range(lo, hi + 1)


@dataclass
class RunConfig:
    command: str
    k: int | None = None
    n: int | None = None
    n_range: range | None = None
    kind: str | None = None
    family: str = "edge"
    mode: str = "sat"
    input: Path | None = None
    out: Path | None = None
    partition: Path | None = None
    seed: int | None = None
    tol: float = 1e-10
    workers: int = 1
    budget: int | None = None
    max_order: int | None = None

    @classmethod
    def from_args(cls, ns: argparse.Namespace) -> "RunConfig":
        cfg = cls(command=ns.command)
        for name in ("k", "n", "kind", "family", "mode", "seed", "tol", "workers",
                     "budget", "max_order"):
            if getattr(ns, name, None) is not None:
                setattr(cfg, name, getattr(ns, name))
        for name in ("input", "out", "partition"):
            if getattr(ns, name, None) is not None:
                setattr(cfg, name, Path(getattr(ns, name)))
        if getattr(ns, "n_range", None) is not None:
            cfg.n_range = parse_range(ns.n_range)
        cfg.validate()
        return cfg

    def validate(self) -> None:
        if self.k is not None and self.k < 1:
            raise ValueError("--k must be >= 1")
        if self.n is not None and self.n < 1:
            raise ValueError("--n must be >= 1")
        if self.workers < 1:
            raise ValueError("--workers must be >= 1")
        if self.tol <= 0:
            raise ValueError("--tol must be positive")
        if self.command == "construct":
            if self.kind == "kminus" and self.n is not None and self.n != self.k + 1:
                raise ValueError("--kind kminus takes no --n (it has k+1 vertices)")
            if self.kind != "kminus" and self.n is None:
                raise ValueError(f"--kind {self.kind} requires --n")
            if self.seed is not None and self.kind != "ktree":
                raise ValueError("--seed only applies to --kind ktree")


# -- commands ----------------------------------------------------------------


def cmd_construct(cfg: RunConfig) -> int:
    layout = None
    if cfg.kind == "gkn":
        g, layout = build_gkn(cfg.k, cfg.n)
    elif cfg.kind == "split":
        g = build_complete_split(cfg.n, cfg.k)
    elif cfg.kind == "kminus":
        g = build_k_minus(cfg.k)
    else:
        g = build_k_tree(cfg.k - 1, cfg.n, seed=cfg.seed)
    text = format_edge_list(g)
    if cfg.out is None:
        sys.stdout.write(text)
    else:
        cfg.out.write_text(text, encoding="ascii", newline="\n")
        if layout is not None:
            lay = cfg.out.with_name(cfg.out.stem + ".layout.json")
            lay.write_text(json.dumps(layout.to_json()) + "\n", encoding="ascii", newline="\n")
    return EXIT_OK


def cmd_verify(cfg: RunConfig) -> int:
    g = read_edge_list(cfg.input)
    if cfg.family == "edge":
        report = is_saturated_edge(g, cfg.k)
    else:
        report = is_saturated_vertex(g, cfg.k, cfg.budget)
    emit(report.to_json())
    return _VERDICT_EXIT[report.verdict]


def cmd_search(cfg: RunConfig) -> int:
    res = search_optimum(cfg.n, cfg.k, cfg.family, cfg.mode, workers=cfg.workers,
                         max_order=cfg.max_order, budget=cfg.budget)
    emit(res.to_json())
    want = expected_value(cfg.n, cfg.k, cfg.family, cfg.mode)
    if want is not None and res.value != want:
        print(f"satgraph: measured {res.value} != closed form {want}", file=sys.stderr)
        return EXIT_CONTRADICTION
    return EXIT_OK


def table_rows(k: int, ns: range, family: str = "edge", workers: int = 1,
               max_order: int | None = None, budget: int | None = None):
    limit = DEFAULT_MAX_ORDER[family] if max_order is None else max_order
    for n in ns:
        sat_f, ex_f = rho(k, n), extremal_count(k, n)
        sat_s = ex_s = ""
        if n <= limit:
            sat_s = search_optimum(n, k, family, "sat", workers=workers,
                                   max_order=limit, budget=budget).value
            ex_s = search_optimum(n, k, family, "ex", workers=workers,
                                  max_order=limit, budget=budget).value
        yield {"n": n, "rho_formula": sat_f, "sat_searched": sat_s,
               "ex_formula": ex_f, "ex_searched": ex_s, "gap": ex_f - sat_f}


def cmd_table(cfg: RunConfig) -> int:
    fields = ["n", "rho_formula", "sat_searched", "ex_formula", "ex_searched", "gap"]
    w = csv.DictWriter(sys.stdout, fieldnames=fields, lineterminator="\n")
    w.writeheader()
    for row in table_rows(cfg.k, cfg.n_range, cfg.family, cfg.workers, cfg.max_order, cfg.budget):
        w.writerow(row)
    return EXIT_OK


def cmd_spectral(cfg: RunConfig) -> int:
    g = read_edge_list(cfg.input)
    b = degree_bounds_check(g)
    out = {"n": g.n, "m": g.m, "lambda1": b.radius, "average_degree": b.lower,
           "max_degree": b.upper, "regular": b.regular,
           "lower_bound_tight": b.lower_tight, "upper_bound_tight": b.upper_tight}
    if cfg.k is not None:
        floor = saturated_spectral_floor(cfg.k)
        out["floor"] = floor
        out["meets_floor"] = b.radius >= floor - 1e-8
        out["floor_equality"] = abs(b.radius - floor) <= 1e-8
    code = EXIT_OK
    if cfg.partition is not None:
        p = read_partition(cfg.partition)
        q = is_equitable(g, p)
        out["partition"] = p.to_lists()
        out["equitable"] = q is not None
        if q is None:
            code = EXIT_NOT_EQUITABLE
        else:
            lam_q = quotient_spectral_radius(q, cfg.tol)
            out["quotient"] = q.tolist()
            out["quotient_lambda1"] = lam_q
            out["quotient_matches"] = abs(lam_q - b.radius) <= 1e-8
    emit(out)
    return code


def cmd_analyze(cfg: RunConfig) -> int:
    g = read_edge_list(cfg.input)
    prof = degree_profile(g)
    out = {"n": g.n, "m": g.m, "min_degree": prof.min_degree, "max_degree": prof.max_degree,
           "connected": is_connected(g)}
    if g.n >= 2:
        cut = global_min_edge_cut(g)
        kappa, sep = min_vertex_cut(g)
        out.update({"edge_connectivity": edge_connectivity(g),
                    "min_edge_cut": {"side": cut.vertices(),
                                     "crossing_edges": [list(e) for e in cut.crossing_edges]},
                    "vertex_connectivity": kappa, "min_vertex_cut": sep})
    if cfg.k is not None:
        ecs = has_k_edge_connected_subgraph(g, cfg.k)
        cs = has_k_connected_subgraph(g, cfg.k, cfg.budget)
        km = contains_k_minus(g, cfg.k) if cfg.k >= 2 else None
        out.update({"k": cfg.k,
                    "k_edge_connected_subgraph": ecs.vertices() if ecs else None,
                    "k_connected_subgraph": cs.vertices() if cs else None,
                    "k_minus": vertices_of(km) if km is not None else None})
    emit(out)
    return EXIT_OK


COMMANDS = {"construct": cmd_construct, "verify": cmd_verify, "search": cmd_search,
            "table": cmd_table, "spectral": cmd_spectral, "analyze": cmd_analyze}


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="satgraph",
        description="Edge- and vertex-connectivity saturation: constructions, "
                    "verification, exhaustive search and spectral bounds.",
        epilog=__doc__.split("\n", 1)[1],
        formatter_class=argparse.RawDescriptionHelpFormatter)
    p.add_argument("--version", action="version", version=f"satgraph {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("construct", help="write a named graph as an edge list")
    c.add_argument("--kind", required=True, choices=["gkn", "split", "kminus", "ktree"],
                   help="gkn: ladder construction; split: S_(n,k); kminus: K_(k+1) minus an "
                        "edge; ktree: seeded (k-1)-tree")
    c.add_argument("--k", type=int, required=True)
    c.add_argument("--n", type=int)
    c.add_argument("--seed", type=int, help="ktree attachment seed (default 0)")
    c.add_argument("--out", help="output path (default stdout); gkn also writes <stem>.layout.json")

    v = sub.add_parser("verify", help="saturation verdict for an edge-list file")
    v.add_argument("input")
    v.add_argument("--k", type=int, required=True)
    v.add_argument("--family", choices=["edge", "vertex"], default="edge")
    v.add_argument("--budget", type=int, help="node budget for the vertex family")

    s = sub.add_parser("search", help="exhaustive sat/ex search")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--family", choices=["edge", "vertex"], default="edge")
    s.add_argument("--mode", choices=["sat", "ex"], default="sat")
    s.add_argument("--workers", type=int, default=1)
    s.add_argument("--budget", type=int, help="search node budget ($SATGRAPH_BUDGET_NODES)")
    s.add_argument("--max-order", type=int, dest="max_order",
                   help="largest n allowed (default 8 edge / 7 vertex)")

    t = sub.add_parser("table", help="formula vs search CSV")
    t.add_argument("--k", type=int, required=True)
    t.add_argument("--n", dest="n_range", required=True, help="inclusive range, e.g. 4..8")
    t.add_argument("--family", choices=["edge", "vertex"], default="edge")
    t.add_argument("--workers", type=int, default=1)
    t.add_argument("--budget", type=int)
    t.add_argument("--max-order", type=int, dest="max_order")

    sp = sub.add_parser("spectral", help="spectral radius, degree bounds, quotient matrix")
    sp.add_argument("input")
    sp.add_argument("--k", type=int, help="compare against the saturated-graph floor for k")
    sp.add_argument("--partition", help="file with one block of vertex indices per line")
    sp.add_argument("--tol", type=float)

    a = sub.add_parser("analyze", help="connectivity report for an edge-list file")
    a.add_argument("input")
    a.add_argument("--k", type=int)
    a.add_argument("--budget", type=int)
    return p


def main(argv=None) -> int:
    ns = build_parser().parse_args(argv)
    try:
        cfg = RunConfig.from_args(ns)
        return COMMANDS[cfg.command](cfg)
    except BudgetExceeded as exc:
        print(f"satgraph: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (GraphError, ValueError, OSError) as exc:
        print(f"satgraph: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
