"""Closed-form minimum sizes of r-identifying codes (paths, odd cycles) and
2-locating-dominating sets (cycles).

Everything here is exact integer arithmetic. Each result carries the case tag
of the formula branch that produced it; :data:`CASES` lists every tag.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Optional

from .errors import InputError
from .topology import check_radius

UNDEFINED = "undefined"

CASES: dict[str, str] = {
    # odd cycles C_{2k+1}, s = 2r+1
    "Thm21": "n = 2r+3: floor((4r+6)/3)",
    "Thm6-1": "2r+5 <= n <= 3r+1, q' = n-(2r+1), n = l*q' + m: "
              "k+2 if (l odd, m = q'-1, n >= 5q') or (l even, m = 1)",
    "Thm6-2": "2r+5 <= n <= 3r+1 otherwise: g*ceil(n/2g), g = gcd(q', n)",
    "Thm20": "3r+2 <= n <= 4r+1: g*ceil(n/2g), g = gcd(2r+1, n)",
    "Thm3a": "n >= 4r+3, g = gcd(2r+1, n) != 1: g*ceil(n/2g)",
    "Thm3b": "n >= 4r+3, g = 1, k = (2r+1)p + q with q in {0, 2r}: k+2",
    "Thm3c": "n >= 4r+3, g = 1 otherwise: k+1",
    # paths P_n, n = (2r+1)p + q
    "Thm11-1-even": "q = 0, p even: (2r+1)p/2 + 1",
    "Thm11-1-odd": "q = 0, p odd: (2r+1)(p-1)/2 + 2r",
    "Thm11-2-even": "1 <= q <= r+1, p even: (2r+1)p/2 + q",
    "Thm11-2-odd": "1 <= q <= r+1, p odd: (2r+1)(p-1)/2 + 2r+1",
    "Thm11-3-even": "r+2 <= q <= 2r, p even: (2r+1)p/2 + q-1",
    "Thm11-3-odd": "r+2 <= q <= 2r, p odd: (2r+1)(p-1)/2 + 2r+1",
    # 2-LD on cycles
    "Thm15-small": "n <= 5: n-1",
    "Thm15-6": "n = 6: ceil(n/3)+1 = 3",
    "Thm15-6k+3": "n = 6k+3, k >= 1: ceil(n/3)+1",
    "Thm15-6k": "n = 6k: ceil(n/3)",
    "Thm15-6k+1": "n = 6k+1: ceil(n/3)",
    "Thm15-6k+2": "n = 6k+2: ceil(n/3)",
    "Thm15-6k+4": "n = 6k+4: ceil(n/3)",
    "Thm15-6k+5": "n = 6k+5: ceil(n/3)",
}


@dataclass(frozen=True)
class BoundResult:
    value: Optional[int]
    case: str

    @property
    def defined(self) -> bool:
        return self.value is not None


@dataclass(frozen=True)
class OddCycleParams:
    """Euclidean decompositions used by the odd-cycle formulas.

    ``k = (2r+1)p + q`` always; ``l, m`` (with ``qq = n-(2r+1)``,
    ``n = l*qq + m``) are only meaningful in the small-cycle regime.
    """

    k: int
    r: int
    p: int
    q: int
    qq: int
    l: int
    m: int

    @property
    def n(self) -> int:
        return 2 * self.k + 1


@dataclass(frozen=True)
class PathParams:
    n: int
    r: int
    p: int
    q: int


def cdiv(a: int, b: int) -> int:
    return -(-a // b)


def stream_count_bound(n: int, s: int) -> int:
    """gcd(s, n) * ceil(n / (2 gcd(s, n))): covering every step-s constraint."""
    g = gcd(s, n)
    return g * cdiv(n, 2 * g)


def odd_cycle_params(k: int, r: int) -> OddCycleParams:
    n = 2 * k + 1
    p, q = divmod(k, 2 * r + 1)
    qq = n - (2 * r + 1)
    l, m = divmod(n, qq) if qq > 0 else (0, 0)
    return OddCycleParams(k, r, p, q, qq, l, m)


def path_params(n: int, r: int) -> PathParams:
    p, q = divmod(n, 2 * r + 1)
    return PathParams(n, r, p, q)


def odd_cycle_case(k: int, r: int) -> str:
    """Case tag for C_{2k+1}; UNDEFINED when no r-IC exists."""
    check_radius(r)
    if k < 1:
        raise InputError(f"k must be positive, got {k}")
    n = 2 * k + 1
    if n <= 2 * r + 1:
        return UNDEFINED
    if n == 2 * r + 3:
        return "Thm21"
    if n <= 3 * r + 1:
        P = odd_cycle_params(k, r)
        if (P.l % 2 == 1 and P.m == P.qq - 1 and n >= 5 * P.qq) or (P.l % 2 == 0 and P.m == 1):
            return "Thm6-1"
        return "Thm6-2"
    if n <= 4 * r + 1:
        return "Thm20"
    if gcd(2 * r + 1, n) != 1:
        return "Thm3a"
    if odd_cycle_params(k, r).q in (0, 2 * r):
        return "Thm3b"
    return "Thm3c"


def min_ic_odd_cycle(k: int, r: int) -> BoundResult:
    case = odd_cycle_case(k, r)
    n = 2 * k + 1
    if case == UNDEFINED:
        value = None
    elif case == "Thm21":
        value = (4 * r + 6) // 3
    elif case in ("Thm6-1", "Thm3b"):
        value = k + 2
    elif case == "Thm6-2":
        value = stream_count_bound(n, n - (2 * r + 1))
    elif case in ("Thm20", "Thm3a"):
        value = stream_count_bound(n, 2 * r + 1)
    else:
        value = k + 1
    return BoundResult(value, case)


def min_ic_cycle(n: int, r: int) -> BoundResult:
    """Odd cycles only; even cycles are out of scope and rejected."""
    if n % 2 == 0:
        raise InputError(f"even cycle C_{n}: no closed form here (odd cycles only)")
    if n < 3:
        raise InputError(f"C_{n} is not a cycle")
    return min_ic_odd_cycle((n - 1) // 2, r)


def path_case(n: int, r: int) -> str:
    check_radius(r)
    if n < 1:
        raise InputError(f"path needs at least one vertex, got {n}")
    if n == 1:
        raise InputError("P_1 is a single vertex (code {1}); no closed form is offered")
    if n <= 2 * r:
        return UNDEFINED
    P = path_params(n, r)
    if P.q == 0:
        branch = 1
    elif P.q <= r + 1:
        branch = 2
    else:
        branch = 3
    return f"Thm11-{branch}-{'even' if P.p % 2 == 0 else 'odd'}"


def min_ic_path(n: int, r: int) -> BoundResult:
    case = path_case(n, r)
    if case == UNDEFINED:
        return BoundResult(None, case)
    s = 2 * r + 1
    p, q = path_params(n, r).p, path_params(n, r).q
    if p % 2 == 1:
        value = s * (p - 1) // 2 + (2 * r if q == 0 else 2 * r + 1)
    elif q == 0:
        value = s * p // 2 + 1
    elif q <= r + 1:
        value = s * p // 2 + q
    else:
        value = s * p // 2 + q - 1
    return BoundResult(value, case)


def ld2_cycle_case(n: int) -> str:
    if n < 3:
        raise InputError(f"C_{n} is not a cycle")
    if n <= 5:
        return "Thm15-small"
    if n == 6:
        return "Thm15-6"
    return "Thm15-6k" if n % 6 == 0 else f"Thm15-6k+{n % 6}"


def min_ld2_cycle(n: int) -> BoundResult:
    case = ld2_cycle_case(n)
    if case == "Thm15-small":
        # every radius-2 ball is the whole cycle, so only one vertex may stay outside D
        return BoundResult(n - 1, case)
    if case in ("Thm15-6", "Thm15-6k+3"):
        return BoundResult(cdiv(n, 3) + 1, case)
    return BoundResult(cdiv(n, 3), case)


def ld_lower_bound(n: int) -> int:
    if n < 3:
        raise InputError(f"C_{n} is not a cycle")
    return cdiv(n, 3)
