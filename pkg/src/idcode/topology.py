"""Paths and cycles with 1-based vertex labels, distances and radius-r balls."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable

from .errors import InputError

VertexSet = frozenset  # of int labels in 1..n


class Kind(str, enum.Enum):
    PATH = "path"
    CYCLE = "cycle"


@dataclass(frozen=True)
class Topology:
    kind: Kind
    n: int

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise InputError(f"vertex count must be a positive integer, got {self.n!r}")
        object.__setattr__(self, "kind", Kind(self.kind))

    @classmethod
    def path(cls, n: int) -> "Topology":
        return cls(Kind.PATH, n)

    @classmethod
    def cycle(cls, n: int) -> "Topology":
        return cls(Kind.CYCLE, n)

    @property
    def is_cycle(self) -> bool:
        return self.kind is Kind.CYCLE

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    def check_vertex(self, v: int) -> None:
        if not 1 <= v <= self.n:
            raise InputError(f"vertex {v} outside 1..{self.n}")

    def wrap(self, v: int) -> int:
        """Reduce an arbitrary integer label into 1..n (cycles only)."""
        return (v - 1) % self.n + 1

    def __str__(self) -> str:
        return f"{'C' if self.is_cycle else 'P'}_{self.n}"


def check_radius(r: int) -> None:
    if not isinstance(r, int) or r < 1:
        raise InputError(f"radius must be a positive integer, got {r!r}")


def vertex_set(t: Topology, labels: Iterable[int]) -> VertexSet:
    """Validate labels against ``t`` and freeze them."""
    out = frozenset(labels)
    for v in out:
        t.check_vertex(v)
    return out


def distance(t: Topology, u: int, v: int) -> int:
    t.check_vertex(u)
    t.check_vertex(v)
    d = abs(u - v)
    if t.is_cycle:
        d = min(d, t.n - d)
    return d


def ball(t: Topology, v: int, r: int) -> VertexSet:
    """All vertices within distance ``r`` of ``v``, ``v`` included."""
    t.check_vertex(v)
    check_radius(r)
    if t.is_cycle:
        if 2 * r + 1 >= t.n:
            return frozenset(t.vertices)
        return frozenset(t.wrap(v + d) for d in range(-r, r + 1))
    return frozenset(range(max(1, v - r), min(t.n, v + r) + 1))


def admits_r_ic(t: Topology, r: int) -> bool:
    """Whether all radius-r balls are pairwise distinct, i.e. some r-IC exists."""
    check_radius(r)
    if t.n == 1:
        return True  # one vertex, one ball
    if t.is_cycle:
        return t.n >= 2 * r + 2
    return t.n >= 2 * r + 1


def ball_masks(t: Topology, r: int) -> list[int]:
    """Balls as bit masks; bit ``v-1`` stands for label ``v``."""
    out = []
    for v in t.vertices:
        m = 0
        for u in ball(t, v, r):
            m |= 1 << (u - 1)
        out.append(m)
    return out


def to_mask(labels: Iterable[int]) -> int:
    m = 0
    for v in labels:
        m |= 1 << (v - 1)
    return m


def from_mask(mask: int) -> VertexSet:
    out = []
    v = 1
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return frozenset(out)
