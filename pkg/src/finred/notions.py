"""The six finitely-red notions, plus finiteness notions for decidable sets.

On ultimately periodic streams all six notions coincide.  Each is still
computed by its own procedure so that the agreement is an observation, not a
tautology of the code.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass
from typing import Any, Optional

from . import kernels
from .fixpoint import Quotient, build_quotient, gfp, lfp
from .stream import R, UpStream, at, canonicalize, format_stream, red_count
from .succession import Accessible, Finite, accessible, chain_from
from .temporal import FGBlue, GFRed, MuW, decide, minimal_bound

NOTION_NAMES = (
    "eventually_all_blue",
    "boundedly_red",
    "almost_always_blue",
    "streamless_reds",
    "not_not_fg_blue",
    "not_gf_red",
)


@dataclass(frozen=True)
class Notion:
    holds: bool
    witness: Optional[int] = None


@dataclass(frozen=True)
class Classification:
    eventually_all_blue: Notion
    boundedly_red: Notion
    almost_always_blue: Notion
    streamless_reds: Notion
    not_not_fg_blue: Notion
    not_gf_red: Notion

    def booleans(self) -> tuple[bool, ...]:
        return tuple(getattr(self, name).holds for name in NOTION_NAMES)

    def to_json(self, s: UpStream) -> dict[str, Any]:
        count = red_count(s)
        return {
            "schema": 1,
            "stream": format_stream(s),
            "notions": {name: asdict(getattr(self, name)) for name in NOTION_NAMES},
            "red_count": "infinite" if count is None else count,
        }


@dataclass(frozen=True)
class DecSet:
    """A decidable set of naturals, given by its characteristic stream."""

    characteristic: UpStream

    def __contains__(self, n: int) -> bool:
        return at(self.characteristic, n) is R

    @classmethod
    def reds(cls, s: UpStream) -> "DecSet":
        return cls(canonicalize(s))

    @classmethod
    def of(cls, members, tail_member: bool = False) -> "DecSet":
        """Finite set of ``members``; ``tail_member`` adds every larger natural."""
        members = set(members)
        top = max(members, default=-1) + 1
        prefix = "".join("R" if k in members else "B" for k in range(top))
        return cls(canonicalize(UpStream.of(prefix, "R" if tail_member else "B")))


def _all_blue_from(q: Quotient) -> Optional[int]:
    """Least position whose suffix is all blue."""
    good = kernels.always(q, q.blue)
    for n in range(q.state_count):
        if good >> q.state_of_position(n) & 1:
            return n
    return None


def _not_not_fg_blue(q: Quotient) -> bool:
    # not G (not G blue)
    not_g_blue = q.full & ~kernels.always(q, q.blue)
    return not kernels.always(q, not_g_blue) & 1


def classify(s: UpStream) -> Classification:
    s = canonicalize(s)
    q = build_quotient(s)

    fg = decide(FGBlue(), s)
    eab = Notion(fg, _all_blue_from(q) if fg else None)

    bound = minimal_bound(s)
    bounded = Notion(bound is not None, bound)

    acc = accessible(s, 0)
    almost = Notion(decide(MuW(), s), acc.rank if isinstance(acc, Accessible) else None)

    chain = chain_from(s, 0)
    sl = Notion(isinstance(chain, Finite), len(chain) if isinstance(chain, Finite) else None)

    return Classification(
        eventually_all_blue=eab,
        boundedly_red=bounded,
        almost_always_blue=almost,
        streamless_reds=sl,
        not_not_fg_blue=Notion(_not_not_fg_blue(q)),
        not_gf_red=Notion(not decide(GFRed(), s)),
    )


def reds_enumerate(s: UpStream) -> Optional[list[int]]:
    s = canonicalize(s)
    if R in s.cycle:
        return None
    return [i for i, c in enumerate(s.prefix) if c is R]


def bounded_size(a: DecSet, n: int) -> bool:
    """Every duplicate-free list over ``a`` is shorter than ``n``."""
    members = reds_enumerate(a.characteristic)
    return members is not None and len(members) < n


def noetherian_rank(a: DecSet) -> Optional[int]:
    """Derivation depth of the removal rule, via accessibility of 0."""
    acc = accessible(a.characteristic, 0)
    return acc.rank if isinstance(acc, Accessible) else None


def streamless(a: DecSet) -> bool:
    return isinstance(chain_from(a.characteristic, 0), Finite)


def almost_full_blues(s: UpStream) -> bool:
    """Every strictly increasing index sequence eventually hits a blue.

    Fails exactly when some increasing sequence can stay on reds forever,
    i.e. a red state is reachable again from itself in one or more steps.
    """
    q = build_quotient(canonicalize(s))

    def strictly_later(ys: int) -> int:
        return lfp(lambda zs: q.preimage(ys | zs), q)

    avoiding = gfp(lambda xs: strictly_later(xs & q.red), q)
    return not avoiding & 1
