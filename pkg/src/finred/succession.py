"""The succession relation induced by a stream.

``n > m`` holds iff ``m`` is one past the first red position at or after
``n``.  The relation is deterministic, so every position has a unique maximal
descending chain.  A decidable set of naturals is handled through its
characteristic stream (red exactly on the members).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import islice
from typing import Iterator, Optional, Union

from .fixpoint import Quotient, build_quotient, gfp, kleene_stages
from .stream import R, UpStream, at


@dataclass(frozen=True)
class Finite:
    positions: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "positions", tuple(self.positions))

    def __iter__(self) -> Iterator[int]:
        return iter(self.positions)

    def __len__(self) -> int:
        return len(self.positions)

    def take(self, k: int) -> list[int]:
        return list(self.positions[:k])


@dataclass(frozen=True)
class InfinitePeriodic:
    """``head`` followed by ``head[loop_start:]`` shifted by ``period``, forever."""

    head: tuple[int, ...]
    period: int
    loop_start: int = 0

    def __post_init__(self):
        object.__setattr__(self, "head", tuple(self.head))
        if not 0 <= self.loop_start < len(self.head) or self.period < 1:
            raise ValueError(f"bad periodic shape {self!r}")

    def __iter__(self) -> Iterator[int]:
        yield from self.head
        loop = self.head[self.loop_start:]
        shift = self.period
        while True:
            for x in loop:
                yield x + shift
            shift += self.period

    def take(self, k: int) -> list[int]:
        return list(islice(self, k))


PositionList = Union[Finite, InfinitePeriodic]
ChainResult = PositionList


@dataclass(frozen=True)
class Accessible:
    rank: int


@dataclass(frozen=True)
class NotAccessible:
    pass


AccResult = Union[Accessible, NotAccessible]


def successor(s: UpStream, n: int) -> Optional[int]:
    # one pass over the rest of the prefix and one full cycle decides absence
    stop = max(n, len(s.prefix)) + len(s.cycle)
    for ell in range(n, stop):
        if at(s, ell) is R:
            return ell + 1
    return None


def chain_from(s: UpStream, n: int) -> ChainResult:
    p, c = len(s.prefix), len(s.cycle)
    steps: list[int] = []
    seen: dict[int, int] = {}
    cur = n
    while True:
        m = successor(s, cur)
        if m is None:
            return Finite(tuple(steps))
        if m >= p:
            residue = (m - p) % c
            if residue in seen:
                start = seen[residue]
                return InfinitePeriodic(tuple(steps), m - steps[start], start)
            seen[residue] = len(steps)
        steps.append(m)
        cur = m


def _state_successor(s: UpStream, q: Quotient) -> list[Optional[int]]:
    out = []
    for i in range(q.state_count):
        m = successor(s, i)
        out.append(None if m is None else q.state_of_position(m))
    return out


def accessible(s: UpStream, n: int) -> AccResult:
    """Accessibility as the inductive (least) fixpoint; rank is the Kleene stage."""
    q = build_quotient(s)
    succ = _state_successor(s, q)

    def step(xs: int) -> int:
        out = 0
        for i, j in enumerate(succ):
            if j is None or xs >> j & 1:
                out |= 1 << i
        return out

    state = q.state_of_position(n)
    for rank, stage in enumerate(kleene_stages(step, q)):
        if stage >> state & 1:
            return Accessible(rank)
    return NotAccessible()


def strongly_normalizing(s: UpStream, n: int) -> bool:
    return isinstance(chain_from(s, n), Finite)


def antifounded(s: UpStream, n: int) -> bool:
    """Coinductive: ``n > m`` for some ``m`` that is itself antifounded."""
    q = build_quotient(s)
    succ = _state_successor(s, q)

    def step(xs: int) -> int:
        out = 0
        for i, j in enumerate(succ):
            if j is not None and xs >> j & 1:
                out |= 1 << i
        return out

    return bool(gfp(step, q) >> q.state_of_position(n) & 1)


def transitive_closure_step(s: UpStream, n: int, k: int) -> Optional[int]:
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    cur: Optional[int] = n
    for _ in range(k):
        cur = successor(s, cur)
        if cur is None:
            return None
    return cur


def relation_edges(s: UpStream, limit: int) -> list[tuple[int, Optional[int]]]:
    return [(n, successor(s, n)) for n in range(limit)]
