"""Invariant checks and the bound/construction/oracle sweep matrix.

``run()`` returns one :class:`Check` per group; the CLI's ``selftest``
command prints them and exits non-zero when any fails.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations
from math import gcd
from typing import Callable

from . import construct, report
from .errors import NoCharacterization
from .topology import Topology
from .verify import (SeparationKind, check_characterization, cycle_lemma, is_r_ic,
                     is_r_ld, separation_census)


@dataclass
class Check:
    name: str
    ok: bool
    detail: str = ""


def worked_examples() -> Check:
    problems = []
    s = construct.stream(21, 5, 1)
    if (s.body, s.tail) != ((1, 6, 11, 16, 21), 5):
        problems.append(f"stream(21,5,1) = {s}")
    s = construct.stream(21, 5, 5)
    if (s.body, s.tail) != ((5, 10, 15, 20), 4):
        problems.append(f"stream(21,5,5) = {s}")
    fs = construct.full_streams(21, 9)
    if len(fs) != 3 or fs[2].vertices != (3, 12, 21, 9, 18, 6, 15, 3):
        problems.append(f"full_streams(21,9) = {fs}")
    for n, D in ((11, {1, 2, 5, 9}), (6, {1, 3, 5})):
        if not is_r_ld(Topology.cycle(n), D, 2).ok:
            problems.append(f"{sorted(D)} is not a 2-LD of C_{n}")
    if construct.build_ic_odd_cycle(4, 3).labels != [1, 2, 4, 5, 7, 8]:
        problems.append("C_9, r=3 construction differs from the residue recipe")
    return Check("worked examples", not problems, "; ".join(problems))


def stream_algebra(pairs=((21, 5), (21, 9), (9, 3), (23, 5), (19, 4), (17, 17))) -> Check:
    problems = []
    for n, s in pairs:
        fs = construct.full_streams(n, s)
        lefts = [a for f in fs for a, _ in f.constraints]
        if sorted(lefts) != list(range(1, n + 1)):
            problems.append(f"({n},{s}) constraint left ends are not a permutation")
        appearances = [v for f in fs for c in f.constraints for v in c]
        if any(appearances.count(v) != 2 for v in range(1, n + 1)):
            problems.append(f"({n},{s}) some vertex is not in exactly two constraints")
        if len(fs) != gcd(s, n) or any(len(f.vertices) != n // gcd(s, n) + 1 for f in fs):
            problems.append(f"({n},{s}) full stream shape")
    return Check("stream algebra", not problems, "; ".join(problems))


def characterization_samples(trials: int, seed: int = 7) -> Check:
    rng = random.Random(seed)
    bad = []
    done = 0
    while done < trials:
        r = rng.randint(1, 6)
        if rng.random() < 0.5:
            n = rng.randint(2 * r + 2, 6 * r + 8)
            if cycle_lemma(n, r) is None:
                continue
            t = Topology.cycle(n)
        else:
            t = Topology.path(rng.randint(2 * r + 1, 6 * r + 8))
        density = rng.uniform(0.3, 0.95)
        D = [v for v in t.vertices if rng.random() < density]
        if is_r_ic(t, D, r).ok != check_characterization(t, r, D).ok:
            bad.append(f"{t} r={r} D={D}")
        done += 1
    return Check(f"characterization equivalence ({trials} samples)", not bad, "; ".join(bad[:3]))


def characterization_exhaustive(max_n: int) -> Check:
    bad = []
    for r in (1, 2):
        for kind in ("cycle", "path"):
            for n in range(2 * r + 1, max_n + 1):
                t = Topology(kind, n)
                if t.is_cycle and cycle_lemma(n, r) is None:
                    continue
                for size in range(n + 1):
                    for D in combinations(range(1, n + 1), size):
                        try:
                            same = is_r_ic(t, D, r).ok == check_characterization(t, r, D).ok
                        except NoCharacterization:
                            continue
                        if not same:
                            bad.append(f"{t} r={r} D={list(D)}")
    return Check(f"characterization exhaustive (n <= {max_n}, r <= 2)", not bad, "; ".join(bad[:3]))


def census_samples(trials: int, seed: int = 11) -> Check:
    rng = random.Random(seed)
    bad = []
    for _ in range(trials):
        n = rng.randint(3, 40)
        D = [v for v in range(1, n + 1) if rng.random() < rng.uniform(0.1, 0.9)]
        c = separation_census(n, D, 2)
        if c.max_count(SeparationKind.CONSECUTIVE) > 2 or c.max_count(SeparationKind.D_CONSECUTIVE) > 2:
            bad.append(f"C_{n} D={D}")
    return Check(f"separation census <= 2 ({trials} samples)", not bad, "; ".join(bad[:3]))


def sweep_matrix(ic_cycle_max: int, path_max: int, ld_max: int) -> Check:
    grid = []
    for r in (1, 2, 3, 4):
        grid += [("cycle", n, r, "ic") for n in range(2 * r + 3, ic_cycle_max + 1, 2)]
    for r in (1, 2, 3):
        grid += [("path", n, r, "ic") for n in range(2 * r + 1, path_max + 1)]
    grid += [("cycle", n, 2, "ld") for n in range(3, ld_max + 1)]
    failed = []
    for cell in grid:
        rec = report.evaluate(*cell, with_oracle=True)
        if not rec.agrees or rec.oracle_min is None:
            failed.append(f"{rec.case} ({cell[0]} n={cell[1]} r={cell[2]} {cell[3]}: "
                          f"bound {rec.bound}, size {rec.size}, oracle {rec.oracle_min})")
    return Check(f"sweep matrix ({len(grid)} instances)", not failed, "; ".join(failed[:5]))


def large_constructions(max_n: int, max_r: int) -> Check:
    failed = []
    for r in range(1, max_r + 1):
        cells = [("cycle", n) for n in range(2 * r + 3, max_n + 1, 2)]
        cells += [("path", n) for n in range(2 * r + 1, max_n + 1)]
        for kind, n in cells:
            rec = report.evaluate(kind, n, r, "ic")
            if not rec.agrees:
                failed.append(f"{rec.case} ({kind} n={n} r={r})")
    return Check(f"constructions verify and meet the bound (n <= {max_n}, r <= {max_r})",
                 not failed, "; ".join(failed[:5]))


def plan(quick: bool) -> list[Callable[[], Check]]:
    if quick:
        return [
            worked_examples,
            stream_algebra,
            lambda: characterization_samples(2000),
            lambda: characterization_exhaustive(10),
            lambda: census_samples(300),
            lambda: sweep_matrix(15, 14, 14),
            lambda: large_constructions(101, 4),
        ]
    return [
        worked_examples,
        stream_algebra,
        lambda: characterization_samples(10_000),
        lambda: characterization_exhaustive(12),
        lambda: census_samples(1000),
        lambda: sweep_matrix(19, 18, 18),
        lambda: large_constructions(301, 6),
    ]


def run(quick: bool = False) -> list[Check]:
    out = []
    for step in plan(quick):
        try:
            out.append(step())
        except Exception as exc:  # a crash is a failed check, not a crashed suite
            out.append(Check(getattr(step, "__name__", "check"), False, f"{type(exc).__name__}: {exc}"))
    return out
