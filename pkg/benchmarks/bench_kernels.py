"""Time the compiled kernels against the pure-Python fallback.

    python benchmarks/bench_kernels.py            # table
    python benchmarks/bench_kernels.py --json     # machine-readable
    python benchmarks/bench_kernels.py --quick    # fewer repeats, smaller search

Each case runs the same call on both backends, checks the results are
identical, and reports the best-of-N wall time.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
import time

from satgraph import _kernels_py as pure
from satgraph._backend import compiled
from satgraph.constructions import build_gkn
from satgraph.graph import Graph


def _random_adj(n, p, seed):
    rng = random.Random(seed)
    g = Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])
    return g.adj, g.full_mask


def cases(quick):
    adj30, full30 = _random_adj(30, 0.3, 1)
    adj20, full20 = _random_adj(20, 0.4, 2)
    g = build_gkn(4, 20)[0]
    g38 = build_gkn(3, 8)[0]
    n_search, m_search = (6, 9) if quick else (7, 11)
    return [
        ("edge_min_cut n=30", lambda k: k.edge_min_cut(adj30, full30)),
        ("vertex_min_cut n=20", lambda k: k.vertex_min_cut(adj20, full20)),
        ("ecs_piece k=4 n=30", lambda k: k.ecs_piece(adj30, full30, 4)),
        ("verdict edge G(4,20)", lambda k: k.saturation_verdict(g.adj, g.n, 4, pure.EDGE, 10**9)),
        ("verdict vertex G(3,8)", lambda k: k.saturation_verdict(g38.adj, g38.n, 3, pure.VERTEX, 10**9)),
        (f"search_level n={n_search} m={m_search}",
         lambda k: k.search_level(n_search, 3, pure.EDGE, m_search)),
        ("canonical_code G(3,8)", lambda k: k.canonical_code(g38.adj, g38.n)),
    ]


def best_time(fn, repeats):
    best = float("inf")
    out = None
    for _ in range(repeats):
        t = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t)
    return best, out


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.split("\n")[0])
    ap.add_argument("--repeats", type=int, default=5)
    ap.add_argument("--quick", action="store_true")
    ap.add_argument("--json", action="store_true")
    args = ap.parse_args(argv)
    if compiled is None:
        print("compiled extension not available; nothing to compare", file=sys.stderr)
        return 1
    repeats = 2 if args.quick else args.repeats

    rows = []
    for name, call in cases(args.quick):
        tc, rc = best_time(lambda: call(compiled), repeats)
        tp, rp = best_time(lambda: call(pure), max(1, repeats // 2))
        if rc != rp:
            raise SystemExit(f"{name}: backends disagree")
        rows.append({"case": name, "compiled_s": tc, "python_s": tp, "speedup": tp / tc})

    if args.json:
        print(json.dumps(rows, indent=2))
    else:
        print(f"{'case':<26}{'compiled':>12}{'python':>12}{'speedup':>10}")
        for r in rows:
            print(f"{r['case']:<26}{r['compiled_s'] * 1e3:>10.2f}ms{r['python_s'] * 1e3:>10.2f}ms"
                  f"{r['speedup']:>9.0f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
