"""Definitional and characterization checks for identifying codes and
locating-dominating sets.

Every failing :class:`Verdict` carries a witness pair ``(u, v)`` whose
signatures coincide (``u == v`` means the signature of ``u`` is empty), so a
failure can always be re-checked with :func:`signature`.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterable, Optional

from .errors import NoCharacterization
from .topology import Topology, admits_r_ic, ball, check_radius, vertex_set


@dataclass(frozen=True)
class Verdict:
    ok: bool
    witness: Optional[tuple[int, int]] = None
    rule: Optional[str] = None
    lemma: Optional[str] = None

    def __bool__(self) -> bool:
        return self.ok


def _fail(witness, rule, lemma=None) -> Verdict:
    return Verdict(False, witness, rule, lemma)


class SeparationKind(str, enum.Enum):
    CONSECUTIVE = "consecutive"
    D_CONSECUTIVE = "d-consecutive"


def signature(t: Topology, D: Iterable[int], r: int, x: int) -> frozenset:
    return ball(t, x, r) & frozenset(D)


def _distinct_signatures(t, D, r, vertices) -> Verdict:
    seen: dict[frozenset, int] = {}
    for x in vertices:
        s = signature(t, D, r, x)
        if not s:
            return _fail((x, x), "empty-signature")
        if s in seen:
            return _fail((seen[s], x), "equal-signature")
        seen[s] = x
    return Verdict(True)


def is_r_ic(t: Topology, D: Iterable[int], r: int) -> Verdict:
    D = vertex_set(t, D)
    check_radius(r)
    if not admits_r_ic(t, r):
        return _fail(None, "inadmissible")
    return _distinct_signatures(t, D, r, t.vertices)


def is_r_ld(t: Topology, D: Iterable[int], r: int) -> Verdict:
    D = vertex_set(t, D)
    check_radius(r)
    return _distinct_signatures(t, D, r, (x for x in t.vertices if x not in D))


# -- characterizations -------------------------------------------------------

def cycle_lemma(n: int, r: int) -> Optional[str]:
    """Name of the local characterization that applies on C_n, if any."""
    if n >= 4 * r + 2:
        return "Lemma2"
    if 3 * r + 2 <= n <= 4 * r + 1:
        return "Lemma19"
    if 2 * r + 5 <= n <= 3 * r + 1 and n - (2 * r + 1) >= 4:
        return "Lemma5"
    return None


def check_cycle_characterization(n: int, r: int, D: Iterable[int]) -> Verdict:
    """Check the pairwise/window conditions that characterize r-ICs of C_n.

    Raises NoCharacterization when no lemma covers (n, r); callers should
    fall back to :func:`is_r_ic`.
    """
    check_radius(r)
    lemma = cycle_lemma(n, r)
    if lemma is None:
        raise NoCharacterization(f"no characterization for C_{n} with r={r}")
    t = Topology.cycle(n)
    inD = vertex_set(t, D).__contains__
    w = t.wrap

    if lemma in ("Lemma2", "Lemma19"):
        s = 2 * r + 1
        for i in range(1, n + 1):
            if not inD(i) and not inD(w(i + s)):
                # the two middle vertices of the window see the same detectors
                return _fail((w(i + r), w(i + r + 1)), f"{lemma}-(1)", lemma)
        if lemma == "Lemma2":
            for i in range(1, n + 1):
                if not any(inD(w(i + j)) for j in range(s)):
                    c = w(i + r)
                    return _fail((c, c), "Lemma2-(2)", lemma)
        return Verdict(True, lemma=lemma)

    q = n - (2 * r + 1)
    for i in range(1, n + 1):
        if not inD(i) and not inD(w(i + q)):
            return _fail((w(i - r - 1), w(i - r)), "Lemma5-(1)", lemma)
    empty = [i for i in range(1, n + 1)
             if not any(inD(w(i + j)) for j in range(1, q + 1))]
    if len(empty) > 1:
        i, j = empty[0], empty[1]
        return _fail((w(i - r), w(j - r)), "Lemma5-(2)", lemma)
    return Verdict(True, lemma=lemma)


def check_path_characterization(n: int, r: int, D: Iterable[int]) -> Verdict:
    """The four window/boundary conditions characterizing r-ICs of P_n."""
    check_radius(r)
    if n < 2 * r + 1:
        return _fail(None, "inadmissible", "Lemma10")
    t = Topology.path(n)
    inD = vertex_set(t, D).__contains__
    lemma = "Lemma10"

    # boundary conditions first: they name the specific forced vertex
    for i in range(1, r + 1):
        # x_{i+r+1} alone separates x_i from x_{i+1}; mirrored at the far end
        if not inD(i + r + 1):
            return _fail((i, i + 1), "Lemma10-(3)", lemma)
        if not inD(n - r - i):
            return _fail((n - i, n - i + 1), "Lemma10-(3)", lemma)
    if not any(inD(i) for i in range(1, r + 2)):
        return _fail((1, 1), "Lemma10-(4)", lemma)
    if not any(inD(i) for i in range(n - r, n + 1)):
        return _fail((n, n), "Lemma10-(4)", lemma)
    for i in range(1, n - 2 * r):
        if not inD(i) and not inD(i + 2 * r + 1):
            return _fail((i + r, i + r + 1), "Lemma10-(1)", lemma)
    for i in range(1, n - 2 * r + 1):
        if not any(inD(i + j) for j in range(2 * r + 1)):
            return _fail((i + r, i + r), "Lemma10-(2)", lemma)
    return Verdict(True, lemma=lemma)


def check_characterization(t: Topology, r: int, D: Iterable[int]) -> Verdict:
    if t.is_cycle:
        return check_cycle_characterization(t.n, r, D)
    return check_path_characterization(t.n, r, D)


# -- separation census ---------------------------------------------------------

@dataclass
class Census:
    """Per code vertex: how many pairs of each kind it separates."""

    consecutive_pairs: list[tuple[int, int]]
    d_consecutive_pairs: list[tuple[int, int]]
    counts: dict[int, dict[SeparationKind, int]] = field(default_factory=dict)

    def max_count(self, kind: SeparationKind) -> int:
        return max((c[kind] for c in self.counts.values()), default=0)


def d_consecutive_pairs(n: int, D: Iterable[int]) -> list[tuple[int, int]]:
    """Pairs of non-code vertices with one connecting arc inside D."""
    D = frozenset(D)
    outside = [v for v in range(1, n + 1) if v not in D]
    m = len(outside)
    if m < 2:
        return []
    if m == 2:
        return [(outside[0], outside[1])]
    return [(outside[i], outside[(i + 1) % m]) for i in range(m)]


def separates(t: Topology, D, r: int, x: int, u: int, v: int) -> bool:
    return (x in signature(t, D, r, u)) != (x in signature(t, D, r, v))


def separation_census(n: int, D: Iterable[int], r: int = 2) -> Census:
    t = Topology.cycle(n)
    D = vertex_set(t, D)
    consecutive = [(v, t.wrap(v + 1)) for v in t.vertices] if n > 2 else ([(1, 2)] if n == 2 else [])
    dcons = d_consecutive_pairs(n, D)
    census = Census(consecutive, dcons)
    for x in sorted(D):
        census.counts[x] = {
            SeparationKind.CONSECUTIVE: sum(separates(t, D, r, x, u, v) for u, v in consecutive),
            SeparationKind.D_CONSECUTIVE: sum(separates(t, D, r, x, u, v) for u, v in dcons),
        }
    return census
