"""Compiled vs pure-Python subset-search kernel.

    python benchmarks/bench_oracle.py [--repeat 3] [--json]

Each row runs the full oracle minimisation (ascending cardinality) on one
instance with both kernels, checks they return the same minimum, witness and
candidate count, and reports the best-of-N wall time.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from idcode import kernel, oracle
from idcode.topology import Topology

CASES = [
    # (topology, n, r, kind, prune)
    ("cycle", 15, 1, "ic", False),
    ("cycle", 17, 2, "ic", False),
    ("path", 16, 2, "ic", False),
    ("cycle", 16, 2, "ld", False),
    ("cycle", 19, 1, "ic", False),
    ("cycle", 20, 2, "ld", False),
    ("cycle", 19, 1, "ic", True),
    ("cycle", 19, 4, "ic", True),
    ("cycle", 20, 2, "ld", True),
]


def _time(fn, repeat):
    best, out = float("inf"), None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--json", action="store_true")
    args = ap.parse_args(argv)
    if kernel.BACKEND != "cython":
        print("compiled kernel not built; nothing to compare", file=sys.stderr)
        return 1

    rows = []
    for topo, n, r, kind, prune in CASES:
        t = Topology.cycle(n) if topo == "cycle" else Topology.path(n)
        run = {b: (lambda b=b: oracle.minimum(t, r, kind, prune=prune, backend=b))
               for b in ("cython", "python")}
        tc, rc = _time(run["cython"], args.repeat)
        tp, rp = _time(run["python"], args.repeat)
        if rc != rp:
            print(f"backends disagree on {t} r={r} {kind}: {rc} vs {rp}", file=sys.stderr)
            return 1
        rows.append({"instance": f"{t} r={r} {kind}", "pruned": prune, "minimum": rc.minimum,
                     "explored": rc.explored, "cython_s": round(tc, 5), "python_s": round(tp, 5),
                     "speedup": round(tp / tc, 1) if tc else None})

    if args.json:
        for row in rows:
            print(json.dumps(row))
        return 0
    head = f"{'instance':<18}{'pruned':>7}{'min':>5}{'explored':>11}{'cython s':>11}{'python s':>11}{'x':>8}"
    print(head)
    for w in rows:
        print(f"{w['instance']:<18}{str(w['pruned']):>7}{w['minimum']:>5}{w['explored']:>11}"
              f"{w['cython_s']:>11.4f}{w['python_s']:>11.4f}{w['speedup']:>8}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
