"""Exhaustive ground truth for small instances.

Subsets are tried by increasing cardinality and, within one cardinality, in
lexicographic order of their ascending label sequence, so the first valid set
found is both minimum and the lexicographically smallest optimum.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import NamedTuple, Optional

from . import kernel
from .errors import BudgetExceeded, InputError
from .topology import Topology, admits_r_ic, ball_masks, check_radius, from_mask
from .verify import is_r_ic, is_r_ld

DEFAULT_MAX_N = 20
ENUMERATE_MAX_N = 14


def default_max_n() -> int:
    raw = os.environ.get("IDCODE_ORACLE_MAX_N")
    if raw is None:
        return DEFAULT_MAX_N
    try:
        return int(raw)
    except ValueError:
        raise InputError(f"IDCODE_ORACLE_MAX_N must be an integer, got {raw!r}") from None


@dataclass(frozen=True)
class SearchBudget:
    max_n: int = DEFAULT_MAX_N
    max_candidates: Optional[int] = None

    @classmethod
    def from_env(cls, max_candidates: Optional[int] = None) -> "SearchBudget":
        return cls(default_max_n(), max_candidates)


@dataclass(frozen=True)
class OracleResult:
    minimum: Optional[int]  # None: infeasible
    witness: frozenset
    explored: int

    @property
    def feasible(self) -> bool:
        return self.minimum is not None


class PruneRule(NamedTuple):
    """A necessary condition: the code must meet every mask in ``masks``."""

    name: str
    masks: tuple[int, ...]


def pruning_rules(t: Topology, r: int, kind: str) -> list[PruneRule]:
    rules = [PruneRule("dominating", tuple(ball_masks(t, r)))]
    if kind == "ic" and t.n >= 2 * r + 2:
        # no window of 2r+2 consecutive vertices with both ends outside the code
        if t.is_cycle:
            starts = range(t.n)
        else:
            starts = range(t.n - 2 * r - 1)
        pairs = tuple(sorted({(1 << i) | (1 << ((i + 2 * r + 1) % t.n)) for i in starts}))
        rules.append(PruneRule("window-ends", pairs))
    return rules


def _hitting(t, r, kind, prune):
    if not prune:
        return []
    return sorted({m for rule in pruning_rules(t, r, kind) for m in rule.masks})


def _check_kind(kind):
    if kind not in ("ic", "ld"):
        raise InputError(f"kind must be 'ic' or 'ld', got {kind!r}")


def _guard(t: Topology, budget: SearchBudget, cap: Optional[int] = None):
    limit = budget.max_n if cap is None else min(budget.max_n, cap)
    if t.n > limit:
        raise BudgetExceeded(f"{t} exceeds the oracle guard n <= {limit}; "
                             "raise SearchBudget.max_n or IDCODE_ORACLE_MAX_N to override")


def _partition(args):
    balls, n, c, ld, hitting, first, limit, backend = args
    return kernel.search(balls, n, c, ld, hitting, first, limit, backend)


def _minimize(t, r, kind, budget, prune, workers, backend) -> OracleResult:
    n = t.n
    ld = kind == "ld"
    balls = ball_masks(t, r)
    hitting = _hitting(t, r, kind, prune)
    limit = -1 if budget.max_candidates is None else budget.max_candidates
    explored = 0
    pool = ProcessPoolExecutor(workers) if workers > 1 else None
    try:
        for c in range(n + 1):
            remaining = -1 if limit < 0 else limit - explored
            if pool is None or c == 0:
                mask, count = kernel.search(balls, n, c, ld, hitting, -1, remaining, backend)
            else:
                jobs = [(balls, n, c, ld, hitting, first, remaining, backend) for first in range(n)]
                mask, count = -1, 0
                # partitions are combined in first-element order, so the
                # winner and the explored count match the serial walk
                for m, k in pool.map(_partition, jobs):
                    count += k
                    if m != -1:
                        mask = m
                        break
            explored += count
            if mask == kernel.LIMIT_HIT or (limit >= 0 and explored > limit):
                raise BudgetExceeded(f"more than {limit} candidates examined on {t}")
            if mask >= 0:
                witness = from_mask(mask)
                check = is_r_ld(t, witness, r) if ld else is_r_ic(t, witness, r)
                assert check.ok, f"kernel returned an invalid witness {sorted(witness)}"
                return OracleResult(c, witness, explored)
    finally:
        if pool is not None:
            pool.shutdown()
    return OracleResult(None, frozenset(), explored)


def min_ic(t: Topology, r: int, budget: Optional[SearchBudget] = None, *,
           prune: bool = True, workers: int = 1, backend: Optional[str] = None) -> OracleResult:
    """Exact minimum r-identifying code of ``t`` by exhaustive search."""
    check_radius(r)
    budget = budget or SearchBudget.from_env()
    if not admits_r_ic(t, r):
        return OracleResult(None, frozenset(), 0)
    _guard(t, budget)
    return _minimize(t, r, "ic", budget, prune, workers, backend)


def min_ld(t: Topology, r: int, budget: Optional[SearchBudget] = None, *,
           prune: bool = True, workers: int = 1, backend: Optional[str] = None) -> OracleResult:
    """Exact minimum r-locating-dominating set of ``t`` (always feasible)."""
    check_radius(r)
    budget = budget or SearchBudget.from_env()
    _guard(t, budget)
    return _minimize(t, r, "ld", budget, prune, workers, backend)


def minimum(t: Topology, r: int, kind: str, budget: Optional[SearchBudget] = None, **kw) -> OracleResult:
    _check_kind(kind)
    return (min_ic if kind == "ic" else min_ld)(t, r, budget, **kw)


def enumerate_optima(t: Topology, r: int, kind: str,
                     budget: Optional[SearchBudget] = None) -> list[frozenset]:
    """Every minimum code of the given kind, in lexicographic order."""
    _check_kind(kind)
    budget = budget or SearchBudget.from_env()
    _guard(t, budget, ENUMERATE_MAX_N)
    best = minimum(t, r, kind, budget)
    if not best.feasible:
        return []
    masks = kernel.enumerate_all(ball_masks(t, r), t.n, best.minimum, kind == "ld",
                                 _hitting(t, r, kind, True))
    verifier = is_r_ld if kind == "ld" else is_r_ic
    out = [from_mask(m) for m in masks]
    assert all(verifier(t, D, r).ok for D in out)
    return out
