"""Command-line front end.

    idcode bound    --cycle -n 9 -r 3 --kind ic
    idcode build    --cycle -n 11 --kind ld [--json] [--oracle] [--deviations FILE]
    idcode verify   --cycle -n 6 -r 2 --kind ld --code 1,3,5
    idcode verify   --json-in [FILE]          # records from `build --json`
    idcode sweep    --cycle --kind ic -r 1..3 -n 5..18 [--oracle] [--csv|--json]
    idcode selftest [--quick]

Exit codes: 0 ok, 1 check failed, 2 undefined instance, 3 construction
failure, 64 usage error.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import Iterable, Optional

from . import bounds, construct, oracle, report, selftest
from .errors import BudgetExceeded, ConstructionError, InputError, NoCharacterization
from .kernel import BACKEND
from .topology import Kind, Topology, admits_r_ic
from .verify import check_characterization, is_r_ic, is_r_ld

EXIT_OK, EXIT_FAIL, EXIT_UNDEFINED, EXIT_CONSTRUCTION, EXIT_USAGE = 0, 1, 2, 3, 64


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        sys.exit(EXIT_USAGE)


def parse_ints(text: str) -> list[int]:
    """'5', '1..3', '1,4,7..9' -> sorted distinct ints."""
    out = set()
    try:
        for part in text.split(","):
            part = part.strip()
            if not part:
                continue
            if ".." in part:
                lo, hi = part.split("..", 1)
                out.update(range(int(lo), int(hi) + 1))
            else:
                out.add(int(part))
    except ValueError:
        raise UsageError(f"cannot parse integer list {text!r}") from None
    return sorted(out)


def _instance_flags(p, ranges=False):
    topo = p.add_mutually_exclusive_group(required=not ranges)
    topo.add_argument("--cycle", action="store_true", help="cycle C_n")
    topo.add_argument("--path", action="store_true", help="path P_n")
    if ranges:
        p.add_argument("-n", required=True, help="vertex counts, e.g. 5..18")
        p.add_argument("-r", default=None, help="radii, e.g. 1..3 (ld: 2)")
    else:
        p.add_argument("-n", type=int, required=True)
        p.add_argument("-r", type=int, default=None)
    p.add_argument("--kind", choices=("ic", "ld"), default="ic")


def _topology_name(args) -> str:
    return "path" if args.path else "cycle"


def _radius(kind: str, r: Optional[int]) -> int:
    if kind == "ld":
        if r is not None and r != 2:
            raise UsageError("closed forms for locating-dominating sets need r = 2")
        return 2
    if r is None:
        raise UsageError("-r is required for --kind ic")
    if r < 1:
        raise UsageError("-r must be positive")
    return r


def _emit_table(rows: list[dict], cols: list[str], out=None):
    out = out or sys.stdout
    cells = [[("-" if row[c] is None else str(row[c])) for c in cols] for row in rows]
    widths = [max(len(c), *(len(x[i]) for x in cells)) if cells else len(c) for i, c in enumerate(cols)]
    print("  ".join(c.ljust(w) for c, w in zip(cols, widths)).rstrip(), file=out)
    for x in cells:
        print("  ".join(v.ljust(w) for v, w in zip(x, widths)).rstrip(), file=out)


def _write_deviations(path: Optional[str], records: Iterable[Optional[dict]]):
    records = [r for r in records if r]
    if not path or not records:
        return
    with open(path, "a", encoding="utf-8") as fh:
        for r in records:
            fh.write(json.dumps(r) + "\n")


# -- commands ----------------------------------------------------------------------

def cmd_bound(args) -> int:
    r = _radius(args.kind, args.r)
    t = Topology(Kind(_topology_name(args)), args.n)
    res = report.closed_form(t, r, args.kind)
    rec = report.ReportRecord(t.kind.value, t.n, r, args.kind, case=res.case, bound=res.value,
                              agrees=res.defined)
    if args.json:
        print(json.dumps(rec.to_json()))
    else:
        value = res.value if res.defined else "undefined"
        print(f"{t} r={r} {args.kind}: {value} ({res.case})")
    return EXIT_OK if res.defined else EXIT_UNDEFINED


def cmd_build(args) -> int:
    r = _radius(args.kind, args.r)
    t = Topology(Kind(_topology_name(args)), args.n)
    res = report.closed_form(t, r, args.kind)
    if not res.defined:
        print(f"{t} r={r} {args.kind}: undefined instance", file=sys.stderr)
        return EXIT_UNDEFINED
    try:
        rec = report.evaluate(t.kind.value, t.n, r, args.kind, with_oracle=args.oracle)
    except BudgetExceeded as exc:
        raise UsageError(str(exc)) from None
    if not rec.verified:
        print(json.dumps({"error": "construction failed", **rec.to_json()}), file=sys.stderr)
        return EXIT_CONSTRUCTION
    _write_deviations(args.deviations, [rec.deviation_record])
    if args.json:
        print(json.dumps(rec.to_json()))
    else:
        print(" ".join(map(str, rec.code)))
        print(f"# size {rec.size}, bound {rec.bound} ({rec.case})"
              + (f", oracle {rec.oracle_min}" if rec.oracle_min is not None else ""), file=sys.stderr)
        for d in rec.deviations:
            print(f"# deviation: {d}", file=sys.stderr)
    return EXIT_OK


def _verify_one(topology: str, n: int, r: int, kind: str, code: list[int]) -> dict:
    t = Topology(Kind(topology), n)
    for v in code:
        if not 1 <= v <= n:
            raise UsageError(f"label {v} outside 1..{n}")
    verdict = is_r_ld(t, code, r) if kind == "ld" else is_r_ic(t, code, r)
    char = None
    if kind == "ic" and admits_r_ic(t, r):
        try:
            char = check_characterization(t, r, code)
        except NoCharacterization:
            char = None
    return {
        "topology": topology, "n": n, "r": r, "kind": kind, "code": sorted(set(code)),
        "ok": verdict.ok,
        "witness": list(verdict.witness) if verdict.witness else None,
        "rule": verdict.rule,
        "characterization": None if char is None else {
            "lemma": char.lemma, "ok": char.ok, "rule": char.rule,
            "witness": list(char.witness) if char.witness else None},
        "agree": None if char is None else char.ok == verdict.ok,
    }


def _read_records(source: str) -> list[dict]:
    text = sys.stdin.read() if source == "-" else open(source, encoding="utf-8").read()
    text = text.strip()
    if not text:
        raise UsageError("no JSON input")
    try:
        data = json.loads(text)
        return data if isinstance(data, list) else [data]
    except json.JSONDecodeError:
        try:
            return [json.loads(line) for line in text.splitlines() if line.strip()]
        except json.JSONDecodeError as exc:
            raise UsageError(f"invalid JSON input: {exc}") from None


def cmd_verify(args) -> int:
    jobs = []
    if args.json_in is not None:
        for rec in _read_records(args.json_in):
            try:
                jobs.append((rec["topology"], rec["n"], rec["r"], rec["kind"], list(rec["code"])))
            except (KeyError, TypeError):
                raise UsageError("JSON records need topology, n, r, kind and code") from None
    else:
        if args.code is None or not (args.cycle or args.path):
            raise UsageError("verify needs --cycle/--path, -n and --code, or --json-in")
        r = args.r if args.r is not None else (2 if args.kind == "ld" else None)
        if r is None or r < 1:
            raise UsageError("-r is required for --kind ic")
        jobs.append((_topology_name(args), args.n, r, args.kind, parse_ints(args.code)))
    results = [_verify_one(*job) for job in jobs]
    for res in results:
        if args.json:
            print(json.dumps(res))
            continue
        name = f"{'C' if res['topology'] == 'cycle' else 'P'}_{res['n']}"
        head = f"{name} r={res['r']} {res['kind']} {res['code']}: "
        if res["ok"]:
            line = head + "ok"
        else:
            line = head + f"FAIL ({res['rule']}, witness {res['witness']})"
        char = res["characterization"]
        if char is not None:
            status = "ok" if char["ok"] else f"FAIL ({char['rule']}, witness {char['witness']})"
            line += f"; {char['lemma']}: {status}; agree={res['agree']}"
        print(line)
    return EXIT_OK if all(r["ok"] for r in results) else EXIT_FAIL


def _sweep_cell(cell):
    topology, n, r, kind, with_oracle = cell
    try:
        t = Topology(Kind(topology), n)
        if not report.closed_form(t, r, kind).defined:
            return None
        return report.evaluate(topology, n, r, kind, with_oracle=with_oracle)
    except InputError:
        return None


def cmd_sweep(args) -> int:
    topology = _topology_name(args)
    ns = parse_ints(args.n)
    if args.kind == "ld":
        if topology != "cycle":
            raise UsageError("closed-form locating-dominating sets exist only for cycles")
        rs = parse_ints(args.r) if args.r else [2]
        if rs != [2]:
            raise UsageError("closed forms for locating-dominating sets need r = 2")
    else:
        if not args.r:
            raise UsageError("-r is required for --kind ic")
        rs = parse_ints(args.r)
    cells = []
    for r in rs:
        if r < 1:
            raise UsageError("radii must be positive")
        for n in ns:
            if topology == "cycle" and (n < 3 or (args.kind == "ic" and n % 2 == 0)):
                continue  # no closed form for even cycles
            if topology == "path" and n < 1:
                continue
            cells.append((topology, n, r, args.kind, args.oracle))
    if args.workers > 1:
        with ProcessPoolExecutor(args.workers) as pool:
            records = list(pool.map(_sweep_cell, cells))
    else:
        records = [_sweep_cell(c) for c in cells]
    skipped = sum(r is None for r in records)
    if skipped:
        print(f"skipped {skipped} instance(s) without a closed form", file=sys.stderr)
    records = sorted((r for r in records if r is not None), key=lambda r: r.sort_key)
    _write_deviations(args.deviations, (r.deviation_record for r in records))

    rows = [r.to_json() for r in records]
    if args.json:
        for row in rows:
            print(json.dumps(row))
    elif args.csv:
        w = csv.writer(sys.stdout, lineterminator="\n")
        w.writerow(report.FIELDS)
        for row in rows:
            w.writerow([" ".join(map(str, row[f])) if isinstance(row[f], list) else
                        ("" if row[f] is None else row[f]) for f in report.FIELDS])
    else:
        cols = ["topology", "n", "r", "kind", "bound", "case", "size", "oracle_min", "agrees"]
        _emit_table(rows, cols)
    bad = [r for r in records if not r.agrees]
    if bad:
        print(f"{len(bad)} disagreement(s)", file=sys.stderr)
    return EXIT_FAIL if bad else EXIT_OK


def cmd_selftest(args) -> int:
    print(f"kernel backend: {BACKEND}", file=sys.stderr)
    results = selftest.run(quick=args.quick)
    for c in results:
        print(f"{'PASS' if c.ok else 'FAIL'}  {c.name}" + (f"  -- {c.detail}" if c.detail and not c.ok else ""))
    ok = all(c.ok for c in results)
    print(f"{sum(c.ok for c in results)}/{len(results)} checks passed")
    return EXIT_OK if ok else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="idcode", description="Identifying codes and locating-dominating sets on paths and cycles.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("bound", help="closed-form minimum size")
    _instance_flags(p)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("build", help="construct and verify an optimal code")
    _instance_flags(p)
    p.add_argument("--json", action="store_true")
    p.add_argument("--oracle", action="store_true", help="also run the exhaustive oracle")
    p.add_argument("--deviations", metavar="FILE", help="append repaired-construction records (NDJSON)")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("verify", help="check a candidate code")
    topo = p.add_mutually_exclusive_group()
    topo.add_argument("--cycle", action="store_true")
    topo.add_argument("--path", action="store_true")
    p.add_argument("-n", type=int)
    p.add_argument("-r", type=int)
    p.add_argument("--kind", choices=("ic", "ld"), default="ic")
    p.add_argument("--code", help="labels, e.g. 1,3,5 or 1..11")
    p.add_argument("--json-in", nargs="?", const="-", metavar="FILE",
                   help="read records (as printed by build --json) from FILE or stdin")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("sweep", help="bounds, constructions and oracle over a grid")
    _instance_flags(p, ranges=True)
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--csv", action="store_true")
    fmt.add_argument("--json", action="store_true")
    p.add_argument("--oracle", action="store_true")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--deviations", metavar="FILE")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("selftest", help="run the invariant suite and sweep matrix")
    p.add_argument("--quick", action="store_true")
    p.set_defaults(func=cmd_selftest)
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, InputError) as exc:
        print(f"idcode: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BudgetExceeded as exc:
        print(f"idcode: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ConstructionError as exc:
        print(f"idcode: construction failed: {exc}", file=sys.stderr)
        return EXIT_CONSTRUCTION
    except BrokenPipeError:  # e.g. piped into head
        sys.stderr.close()
        return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
