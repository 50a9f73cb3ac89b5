"""Stream and colist transformers used to separate the notions.

Each transformer is computed in closed form from the position of the first
red rather than by unfolding its corecursive definition cell by cell.
"""

from __future__ import annotations

from typing import Callable

from .stream import R, UpStream, canonicalize, first_red
from .succession import Finite, InfinitePeriodic, PositionList, chain_from

RedPositions = PositionList


def _up(prefix: str, cycle: str) -> UpStream:
    return canonicalize(UpStream.of(prefix, cycle))


def first_red_truncate(s: UpStream) -> UpStream:
    """Keep only the first red: ``B^k R (B)``."""
    k = first_red(s)
    if k is None:
        return canonicalize(s)
    return _up("B" * k + "R", "B")


def complement_until_red(s: UpStream) -> UpStream:
    """Red up to the first red of ``s``, then blue forever: ``R^k (B)``."""
    k = first_red(s)
    if k is None:
        return _up("", "R")
    return _up("R" * k, "B")


def pad_double(s: UpStream) -> UpStream:
    """Blue before the first red ``n``, red on ``[n, 2n]``, blue after."""
    n = first_red(s)
    if n is None:
        return _up("", "B")
    return _up("B" * n + "R" * (n + 1), "B")


def search_tag(s: UpStream) -> UpStream:
    """Copy blues until the first red at ``k``, then ``k`` reds, then blue."""
    k = first_red(s)
    if k is None:
        return _up("", "B")
    return _up("B" * k + "R" * k, "B")


TRANSFORMS: dict[str, Callable[[UpStream], UpStream]] = {
    "first-red-truncate": first_red_truncate,
    "complement-until-red": complement_until_red,
    "pad-double": pad_double,
    "search-tag": search_tag,
}


def red_positions(s: UpStream) -> RedPositions:
    s = canonicalize(s)
    p, c = len(s.prefix), len(s.cycle)
    in_prefix = [i for i, x in enumerate(s.prefix) if x is R]
    in_cycle = [p + i for i, x in enumerate(s.cycle) if x is R]
    if not in_cycle:
        return Finite(tuple(in_prefix))
    return InfinitePeriodic(tuple(in_prefix + in_cycle), c, len(in_prefix))


def chain_to_colist(s: UpStream, start: int) -> RedPositions:
    """Shift every chain element down by one, landing on red positions."""
    chain = chain_from(s, start)
    if isinstance(chain, Finite):
        return Finite(tuple(m - 1 for m in chain.positions))
    return InfinitePeriodic(tuple(m - 1 for m in chain.head), chain.period, chain.loop_start)
