"""Finite quotient of an ultimately periodic stream and Kleene fixpoints on it.

A stream ``prefix (cycle)`` has exactly ``len(prefix) + len(cycle)`` distinct
suffixes up to the position bookkeeping below; predicates on streams that
respect bisimilarity are therefore subsets of these states.  State sets are
plain ``int`` bitmasks: bit ``i`` set means state ``i`` is a member.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable

from .stream import R, Color, UpStream

StateSet = int
Operator = Callable[[StateSet], StateSet]


class NonMonotone(RuntimeError):
    """A Kleene iterate left the chain (operator is not monotone)."""


@dataclass(frozen=True)
class Quotient:
    prefix_len: int
    cycle_len: int
    red: StateSet

    @property
    def state_count(self) -> int:
        return self.prefix_len + self.cycle_len

    @property
    def full(self) -> StateSet:
        return (1 << self.state_count) - 1

    @property
    def blue(self) -> StateSet:
        return self.full & ~self.red

    def step(self, i: int) -> int:
        return i + 1 if i < self.state_count - 1 else self.prefix_len

    def color_of(self, i: int) -> Color:
        return Color.R if self.red >> i & 1 else Color.B

    def state_of_position(self, n: int) -> int:
        p = self.prefix_len
        return n if n < p else p + (n - p) % self.cycle_len

    def preimage(self, ys: StateSet) -> StateSet:
        """``{i : step(i) in ys}``."""
        last = self.state_count - 1
        return ((ys >> 1) & ((1 << last) - 1)) | ((ys >> self.prefix_len & 1) << last)


def build_quotient(s: UpStream) -> Quotient:
    red = 0
    for i, c in enumerate(s.prefix + s.cycle):
        if c is R:
            red |= 1 << i
    return Quotient(len(s.prefix), len(s.cycle), red)


def members(xs: StateSet) -> list[int]:
    out = []
    i = 0
    while xs:
        if xs & 1:
            out.append(i)
        xs >>= 1
        i += 1
    return out


def state_set(states: Iterable[int]) -> StateSet:
    out = 0
    for i in states:
        out |= 1 << i
    return out


def lfp(op: Operator, q: Quotient) -> StateSet:
    """Least fixpoint of a monotone ``op``, iterating up from the empty set."""
    xs = 0
    for _ in range(q.state_count + 1):
        nxt = op(xs) & q.full
        if nxt == xs:
            return xs
        if xs & ~nxt:
            raise NonMonotone(f"lfp iterate dropped states: {xs:#b} -> {nxt:#b}")
        xs = nxt
    raise NonMonotone("lfp did not stabilise within state_count iterations")


def gfp(op: Operator, q: Quotient) -> StateSet:
    """Greatest fixpoint of a monotone ``op``, iterating down from the full set."""
    xs = q.full
    for _ in range(q.state_count + 1):
        nxt = op(xs) & q.full
        if nxt == xs:
            return xs
        if nxt & ~xs:
            raise NonMonotone(f"gfp iterate grew: {xs:#b} -> {nxt:#b}")
        xs = nxt
    raise NonMonotone("gfp did not stabilise within state_count iterations")


def kleene_stages(op: Operator, q: Quotient) -> list[StateSet]:
    """Iterates ``op^1(0), op^2(0), ...`` up to and including the least fixpoint."""
    stages = []
    xs = 0
    while True:
        nxt = op(xs) & q.full
        if xs & ~nxt:
            raise NonMonotone(f"lfp iterate dropped states: {xs:#b} -> {nxt:#b}")
        if nxt == xs:
            return stages
        stages.append(nxt)
        xs = nxt
        if len(stages) > q.state_count:
            raise NonMonotone("lfp did not stabilise within state_count iterations")


# Operators used throughout.  Each is monotone in its StateSet arguments.

def eventually(q: Quotient, xs: StateSet) -> StateSet:
    return lfp(lambda ys: xs | q.preimage(ys), q)


def always(q: Quotient, xs: StateSet) -> StateSet:
    return gfp(lambda ys: xs & q.preimage(ys), q)


def weak_until(q: Quotient, xs: StateSet) -> StateSet:
    """States where, if a first red occurs, ``xs`` holds right after it."""
    return gfp(lambda ys: (q.blue & q.preimage(ys)) | (q.red & q.preimage(xs)), q)


def strong_until(q: Quotient, xs: StateSet) -> StateSet:
    """Like :func:`weak_until` but the red must occur."""
    return lfp(lambda ys: (q.blue & q.preimage(ys)) | (q.red & q.preimage(xs)), q)
