"""Per-instance report records: closed form, construction, optional oracle."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from . import bounds, construct, oracle
from .errors import BudgetExceeded, ConstructionError, InputError
from .topology import Kind, Topology

FIELDS = ("topology", "n", "r", "kind", "code", "size", "case", "bound",
          "oracle_min", "agrees", "deviations")


@dataclass
class ReportRecord:
    topology: str
    n: int
    r: int
    kind: str
    code: list[int] = field(default_factory=list)
    size: Optional[int] = None
    case: str = bounds.UNDEFINED
    bound: Optional[int] = None
    oracle_min: Optional[int] = None
    agrees: bool = False
    deviations: list[str] = field(default_factory=list)
    verified: bool = False
    deviation_record: Optional[dict] = None

    def to_json(self) -> dict:
        return {f: getattr(self, f) for f in FIELDS}

    @property
    def sort_key(self):
        return (self.topology, self.kind, self.r, self.n)


def closed_form(t: Topology, r: int, kind: str) -> bounds.BoundResult:
    """Bound dispatch; raises InputError where no closed form exists."""
    if kind == "ld":
        if not t.is_cycle or r != 2:
            raise InputError("closed-form locating-dominating sets exist only for cycles with r = 2")
        return bounds.min_ld2_cycle(t.n)
    if kind != "ic":
        raise InputError(f"kind must be 'ic' or 'ld', got {kind!r}")
    if t.is_cycle:
        return bounds.min_ic_cycle(t.n, r)
    return bounds.min_ic_path(t.n, r)


def evaluate(topology: str, n: int, r: int, kind: str, *, build: bool = True,
             with_oracle: bool = False, budget: Optional[oracle.SearchBudget] = None) -> ReportRecord:
    """Bound, construction and (optionally) oracle minimum for one instance.

    ``agrees`` is derived: the construction verifies, its size equals the
    bound, and the oracle (when run within budget) finds the same minimum.
    An instance with no code at all agrees when the oracle also finds none.
    """
    t = Topology(Kind(topology), n)
    rec = ReportRecord(t.kind.value, n, r, kind)
    res = closed_form(t, r, kind)
    rec.case, rec.bound = res.case, res.value

    checks = []
    if build and res.defined:
        try:
            c = construct.build(t, r, kind)
        except ConstructionError as exc:
            rec.deviations = [str(exc)]
            checks.append(False)
        else:
            rec.code, rec.size, rec.verified = c.labels, c.size, True
            rec.deviations = list(c.deviations)
            rec.deviation_record = c.deviation_record()
            checks.append(c.size == res.value)

    if with_oracle:
        budget = budget or oracle.SearchBudget.from_env()
        if n <= budget.max_n:
            try:
                o = oracle.minimum(t, r, kind, budget)
            except BudgetExceeded:
                o = None
            if o is not None:
                rec.oracle_min = o.minimum
                checks.append(o.minimum == res.value)
    rec.agrees = all(checks)
    return rec
