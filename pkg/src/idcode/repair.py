"""Fallbacks used when a construction recipe does not verify.

Cycles: search covers of the step-s constraint chains, starting from the
forced completions (one doubled constraint) and widening to covers with
the surplus the target size allows. Paths: an exact dynamic program over
windows of 2r+1 vertices that encodes the path characterization
(window-ends pairs, no empty window, forced vertices near both ends, both
end segments hit). Small instances may finally fall back to the oracle's
exhaustive search. Every candidate is checked by the definitional verifier.
"""

from __future__ import annotations

from itertools import combinations_with_replacement, product
from math import gcd
from typing import Optional

import numpy as np

from .topology import Topology
from .verify import cycle_lemma, is_r_ic, is_r_ld

MAX_CANDIDATES = 500_000
PATH_DP_MAX_R = 8


def repair(t: Topology, r: int, kind: str, target: int) -> tuple[Optional[frozenset], str]:
    """A valid code of exactly ``target`` vertices, or ``(None, reason)``."""
    if kind == "ic" and t.is_cycle:
        code = seeded_cycle_search(t.n, r, target)
        if code is not None:
            return code, "seeded cover search"
    if kind == "ic" and not t.is_cycle and r <= PATH_DP_MAX_R:
        code = path_window_dp(t.n, r)
        if code is not None and len(code) == target:
            return code, "window DP"
        if code is not None:
            return None, f"window DP optimum {len(code)} != bound {target}"
    code = _exhaustive(t, r, kind, target)
    if code is not None:
        return code, "exhaustive search"
    return None, "no valid code found within the search budget"


# -- cycles ---------------------------------------------------------------------

def _repair_step(n: int, r: int) -> Optional[int]:
    lemma = cycle_lemma(n, r)
    if lemma is None:
        return None
    return n - (2 * r + 1) if lemma == "Lemma5" else 2 * r + 1


def _orbit_covers(orbit: list[int], size: int, limit: int):
    """Vertex covers of the closed chain ``orbit`` with ``size`` vertices.

    The uncovered vertices form an independent set; it is enumerated by its
    gaps, surplus units first spent on a single gap (the forced completions).
    """
    L = len(orbit)
    m = L - size
    surplus = size - m
    if m <= 0 or surplus < 0:
        if m <= 0 and size <= L:
            yield frozenset(orbit)
        return
    seen = set()
    for extra in combinations_with_replacement(range(m), surplus):
        for off in range(L):
            gaps = [1] * m
            for e in extra:
                gaps[e] += 1
            pos, out = off, []
            for g in gaps:
                out.append(pos % L)
                pos += g + 1
            key = frozenset(out)
            if key in seen:
                continue
            seen.add(key)
            if len(seen) > limit:
                return
            yield frozenset(v for i, v in enumerate(orbit) if i not in key)


def seeded_cycle_search(n: int, r: int, target: int, limit: int = MAX_CANDIDATES) -> Optional[frozenset]:
    s = _repair_step(n, r)
    if s is None:
        return None
    t = Topology.cycle(n)
    g = gcd(s, n)
    orbits = []
    for i in range(1, g + 1):
        orbit, v = [i], i
        while (v := (v - 1 + s) % n + 1) != i:
            orbit.append(v)
        orbits.append(orbit)
    L = n // g
    base = (L + 1) // 2
    spare = target - g * base
    if spare < 0:
        return None
    tried = 0
    # distribute the spare vertices over the full streams, fewest first
    for split in _splits(spare, g):
        pools = [list(_orbit_covers(o, base + e, limit)) for o, e in zip(orbits, split)]
        for parts in product(*pools):
            tried += 1
            if tried > limit:
                return None
            code = frozenset().union(*parts)
            if len(code) == target and is_r_ic(t, code, r).ok:
                return code
    return None


def _splits(total: int, parts: int):
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _splits(total - first, parts - 1):
            yield (first,) + rest


# -- paths ----------------------------------------------------------------------

def path_window_dp(n: int, r: int) -> Optional[frozenset]:
    """Exact minimum r-IC of P_n by dynamic programming over the last 2r+1 bits.

    State bit 0 is the newest vertex. Positions before vertex 1 are virtual
    members, which makes every window condition vacuous near the start.
    """
    if n < 2 * r + 1:
        return None
    w = 2 * r + 1
    size = 1 << w
    full = size - 1
    inf = np.iinfo(np.int32).max // 2
    states = np.arange(size)
    newest = states & 1
    pred0 = states >> 1
    pred1 = pred0 | (1 << (w - 1))
    head = (1 << (r + 1)) - 1
    forced = set(range(r + 2, 2 * r + 2)) | set(range(n - 2 * r, n - r))

    cost = np.full(size, inf, dtype=np.int64)
    cost[full] = 0
    choices = np.zeros((n + 1, size), dtype=bool)
    for pos in range(1, n + 1):
        ok = states != 0
        if pos in forced:
            ok &= newest == 1
        if pos == r + 1:
            ok &= (states & head) != 0
        if pos == n:
            ok &= (states & head) != 0
        c0 = np.where(newest == 1, cost[pred0], inf)  # oldest bit 0 needs the new bit set
        c1 = cost[pred1]
        use1 = c1 < c0
        new = np.where(use1, c1, c0) + newest
        new = np.where(ok & (new < inf), new, inf)
        choices[pos] = use1
        cost = new
    best = int(np.argmin(cost))
    if cost[best] >= inf:
        return None
    code, state = [], best
    for pos in range(n, 0, -1):
        if state & 1:
            code.append(pos)
        state = (state >> 1) | (int(choices[pos][state]) << (w - 1))
    return frozenset(code)


# -- last resort --------------------------------------------------------------------

def _exhaustive(t: Topology, r: int, kind: str, target: int) -> Optional[frozenset]:
    from . import kernel, oracle
    from .topology import ball_masks, from_mask

    try:
        budget = oracle.SearchBudget.from_env()
    except ValueError:
        return None
    if t.n > budget.max_n:
        return None
    hitting = oracle._hitting(t, r, kind, True)
    mask, _ = kernel.search(ball_masks(t, r), t.n, target, kind == "ld", hitting, -1, MAX_CANDIDATES)
    if mask < 0:
        return None
    code = from_mask(mask)
    check = is_r_ld if kind == "ld" else is_r_ic
    return code if check(t, code, r).ok else None
