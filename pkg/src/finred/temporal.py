"""Temporal predicates on streams.

Exact deciders on ultimately periodic streams go through the quotient and its
fixpoints; black-box streams only get fuel-bounded search for eventually-red
and always-blue.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

from . import kernels
from .fixpoint import Quotient, StateSet, build_quotient
from .stream import FunStream, R, UpStream, canonicalize, red_count


class UnsupportedPredicate(ValueError):
    pass


@dataclass(frozen=True)
class Predicate:
    pass


@dataclass(frozen=True)
class FRed(Predicate):
    pass


@dataclass(frozen=True)
class GBlue(Predicate):
    pass


@dataclass(frozen=True)
class FGBlue(Predicate):
    pass


@dataclass(frozen=True)
class GFRed(Predicate):
    pass


@dataclass(frozen=True)
class MuW(Predicate):
    """Almost always blue: least fixpoint of weak until."""


@dataclass(frozen=True)
class NuU(Predicate):
    """Infinitely often red: greatest fixpoint of strong until."""


@dataclass(frozen=True)
class AtMost(Predicate):
    """Fewer than ``n`` reds; ``AtMost(0)`` is everywhere false."""

    n: int

    def __post_init__(self):
        if self.n < 0:
            raise ValueError(f"AtMost bound must be >= 0, got {self.n}")


@dataclass(frozen=True)
class FIter(Predicate):
    """``n``-fold weak-until iterate starting from the empty predicate."""

    n: int

    def __post_init__(self):
        if self.n < 0:
            raise ValueError(f"FIter depth must be >= 0, got {self.n}")


@dataclass(frozen=True)
class OnApplied(Predicate):
    base: Predicate


@dataclass(frozen=True)
class PopApplied(Predicate):
    base: Predicate


@dataclass(frozen=True)
class Holds:
    pass


@dataclass(frozen=True)
class Fails:
    pass


@dataclass(frozen=True)
class Unknown:
    fuel_spent: int


Verdict3 = Union[Holds, Fails, Unknown]


def holding_states(p: Predicate, q: Quotient) -> StateSet:
    """The set of quotient states whose suffix satisfies ``p``."""
    match p:
        case FRed():
            return kernels.eventually(q, q.red)
        case GBlue():
            return kernels.always(q, q.blue)
        case FGBlue():
            return kernels.eventually(q, kernels.always(q, q.blue))
        case GFRed():
            return kernels.always(q, kernels.eventually(q, q.red))
        case MuW():
            return kernels.mu_w(q)
        case NuU():
            return kernels.nu_u(q)
        case AtMost(n):
            return kernels.atmost(q, n)
        case FIter(n):
            return kernels.fiter(q, n)
        case OnApplied(base):
            return kernels.weak_until(q, holding_states(base, q))
        case PopApplied(base):
            return kernels.strong_until(q, holding_states(base, q))
    raise UnsupportedPredicate(f"unknown predicate {p!r}")


def decide(p: Predicate, s: UpStream) -> bool:
    q = build_quotient(canonicalize(s))
    return bool(holding_states(p, q) & 1)


def minimal_bound(s: UpStream) -> Optional[int]:
    """Least ``n`` with fewer than ``n`` reds, None if there is no bound."""
    count = red_count(s)
    return None if count is None else count + 1


def check_black_box(p: Predicate, f: FunStream, fuel: int) -> Verdict3:
    """Search positions ``0 .. fuel-1`` in order for a red.

    Only eventually-red (confirmable) and always-blue (refutable) can be
    settled by finite search; anything else is rejected.
    """
    if not isinstance(p, (FRed, GBlue)):
        raise UnsupportedPredicate(
            f"{type(p).__name__} is not semi-decidable by finite search"
        )
    for n in range(fuel):
        if f(n) is R:
            return Holds() if isinstance(p, FRed) else Fails()
    return Unknown(fuel)


def fn_equals_atmost(s: UpStream, n_max: int) -> bool:
    return all(decide(FIter(n), s) == decide(AtMost(n), s) for n in range(n_max + 1))
