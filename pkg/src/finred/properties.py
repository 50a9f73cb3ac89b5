"""Cross-module invariants, checked stream by stream over a finite family.

``run_suite`` is what ``finred check`` executes.  Every property is a plain
function ``(stream, config) -> bool``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Optional

from . import constructions as cons
from . import fixpoint as fx
from . import kernels, notions
from .stream import (
    R,
    UpStream,
    agreement_window,
    all_streams,
    at,
    bisimilar,
    canonicalize,
    f2s_up,
    first_red,
    format_stream,
    red_count,
    s2f,
    suffix,
)
from .succession import (
    Accessible,
    Finite,
    InfinitePeriodic,
    accessible,
    antifounded,
    chain_from,
    strongly_normalizing,
    successor,
    transitive_closure_step,
)
from .temporal import (
    AtMost,
    FGBlue,
    FIter,
    FRed,
    Fails,
    GBlue,
    GFRed,
    Holds,
    MuW,
    NuU,
    OnApplied,
    PopApplied,
    check_black_box,
    decide,
    holding_states,
    minimal_bound,
)


@dataclass(frozen=True)
class Config:
    max_n: int = 8
    fuel: int = 1000


Property = Callable[[UpStream, Config], bool]
PROPERTIES: dict[str, Property] = {}


def prop(name: str):
    def register(fn: Property) -> Property:
        PROPERTIES[name] = fn
        return fn

    return register


def _horizon(s: UpStream) -> int:
    return len(s.prefix) + 2 * len(s.cycle)


# stream core

@prop("stream.suffix_shift")
def _suffix_shift(s, cfg):
    h = _horizon(s)
    return all(at(suffix(s, n), k) == at(s, n + k) for n in range(h + 1) for k in range(h + 1))


@prop("stream.round_trip")
def _round_trip(s, cfg):
    return bisimilar(f2s_up(s2f(s), len(s.prefix), len(s.cycle)), s)


@prop("stream.canonical_idempotent")
def _canonical(s, cfg):
    c = canonicalize(s)
    return canonicalize(c) == c and bisimilar(c, s)


@prop("stream.suffix_stabilises")
def _stabilises(s, cfg):
    p, c = len(s.prefix), len(s.cycle)
    return all(bisimilar(suffix(s, n), suffix(s, n + c)) for n in range(p, p + c + 1))


@lru_cache(maxsize=1)
def _small_family() -> tuple[UpStream, ...]:
    return tuple(all_streams(2, 2))


@prop("stream.bisimilar_window")
def _bisim_window(s, cfg):
    for t in _small_family():
        pointwise = all(at(s, k) == at(t, k) for k in range(agreement_window(s, t)))
        if bisimilar(s, t) != pointwise:
            return False
    return True


# fixpoint engine against the compiled kernels

@prop("fixpoint.engine_matches_kernels")
def _engine(s, cfg):
    q = fx.build_quotient(s)
    if fx.eventually(q, q.red) != kernels.eventually(q, q.red):
        return False
    if fx.always(q, q.blue) != kernels.always(q, q.blue):
        return False
    mu = fx.lfp(lambda xs: fx.weak_until(q, xs), q)
    nu = fx.gfp(lambda xs: fx.strong_until(q, xs), q)
    if mu != kernels.mu_w(q) or nu != kernels.nu_u(q):
        return False
    for xs in (0, q.full, q.red, q.blue):
        if fx.weak_until(q, xs) != kernels.weak_until(q, xs):
            return False
        if fx.strong_until(q, xs) != kernels.strong_until(q, xs):
            return False
    return True


@prop("fixpoint.lfp_below_gfp")
def _lfp_gfp(s, cfg):
    q = fx.build_quotient(s)
    op = lambda xs: (q.red & q.preimage(xs)) | (q.blue & q.preimage(q.full))
    least, greatest = fx.lfp(op, q), fx.gfp(op, q)
    return least & ~greatest == 0 and op(least) == least and op(greatest) == greatest


# temporal

@prop("temporal.gblue_scan")
def _gblue(s, cfg):
    return decide(GBlue(), s) == (R not in s.prefix + s.cycle)


@prop("temporal.fgblue_cycle_scan")
def _fgblue(s, cfg):
    return decide(FGBlue(), s) == (R not in canonicalize(s).cycle)


@prop("temporal.nuU_is_GFred")
def _nuu(s, cfg):
    return decide(NuU(), s) == decide(GFRed(), s)


@prop("temporal.lpo_on_fragment")
def _lpo(s, cfg):
    g, f = decide(GBlue(), s), decide(FRed(), s)
    return g != f


@prop("temporal.fiter_is_atmost")
def _fiter(s, cfg):
    count = red_count(s)
    for n in range(cfg.max_n + 1):
        expected = count is not None and count < n
        if decide(FIter(n), s) != expected or decide(AtMost(n), s) != expected:
            return False
    return True


@prop("temporal.minimal_bound")
def _bound(s, cfg):
    b = minimal_bound(s)
    if b is None:
        return not any(decide(AtMost(n), s) for n in range(cfg.max_n + 1))
    return decide(AtMost(b), s) and not decide(AtMost(b - 1), s)


@prop("temporal.downward_chain")
def _downward(s, cfg):
    fg = decide(FGBlue(), s)
    bounded = minimal_bound(s) is not None
    mu = decide(MuW(), s)
    gf = decide(GFRed(), s)
    return (not fg or bounded) and (not bounded or mu) and (not mu or not gf)


@prop("temporal.black_box_sound")
def _black_box(s, cfg):
    f = s2f(s)
    for fuel in sorted({1, 4, 64, cfg.fuel}):
        for p in (FRed(), GBlue()):
            v = check_black_box(p, f, fuel)
            if isinstance(v, Holds) and not decide(p, s):
                return False
            if isinstance(v, Fails) and decide(p, s):
                return False
    return True


# succession

@prop("succession.deterministic_increasing")
def _succ(s, cfg):
    for n in range(_horizon(s) + 1):
        m = successor(s, n)
        if m is not None and (m <= n or at(s, m - 1) is not R):
            return False
    return True


@prop("succession.muW_is_acc")
def _muw_acc(s, cfg):
    return decide(MuW(), s) == isinstance(accessible(s, 0), Accessible)


@prop("succession.streamless_is_sn")
def _sl_sn(s, cfg):
    return notions.streamless(notions.DecSet.reds(s)) == strongly_normalizing(s, 0)


@prop("succession.nuU_is_af")
def _nuu_af(s, cfg):
    return decide(NuU(), s) == antifounded(s, 0)


@prop("succession.rank_is_chain_length")
def _rank(s, cfg):
    for n in range(_horizon(s) + 1):
        acc = accessible(s, n)
        chain = chain_from(s, n)
        if isinstance(acc, Accessible) != isinstance(chain, Finite):
            return False
        if isinstance(acc, Accessible):
            ahead = sum(1 for k in range(n, _horizon(s) + n + 1) if at(s, k) is R)
            if not acc.rank == len(chain) == ahead:
                return False
        if antifounded(s, n) != isinstance(chain, InfinitePeriodic):
            return False
    return True


@prop("succession.on_pop_characterisation")
def _on_pop(s, cfg):
    for base in (GBlue(), MuW()):
        for n in range(_horizon(s) + 1):
            t = suffix(s, n)
            m = successor(s, n)
            x_at_m = m is not None and decide(base, suffix(s, m))
            if decide(OnApplied(base), t) != (m is None or x_at_m):
                return False
            if decide(PopApplied(base), t) != x_at_m:
                return False
    return True


@prop("succession.acc_trans")
def _acc_trans(s, cfg):
    # rank of n under the transitive closure = longest chain = rank under the relation
    for n in range(_horizon(s) + 1):
        acc = accessible(s, n)
        if not isinstance(acc, Accessible):
            continue
        if acc.rank and transitive_closure_step(s, n, acc.rank) is None:
            return False
        if transitive_closure_step(s, n, acc.rank + 1) is not None:
            return False
    return True


# notions

@prop("notions.collapse")
def _collapse(s, cfg):
    oracle = R not in canonicalize(s).cycle
    c = notions.classify(s)
    if any(b != oracle for b in c.booleans()):
        return False
    for name in ("eventually_all_blue", "boundedly_red", "almost_always_blue", "streamless_reds"):
        notion = getattr(c, name)
        if (notion.witness is not None) != notion.holds:
            return False
    return True


@prop("notions.witnesses_consistent")
def _witnesses(s, cfg):
    c = notions.classify(s)
    if not c.boundedly_red.holds:
        return True
    reds = notions.reds_enumerate(s)
    n = c.eventually_all_blue.witness
    return (
        c.boundedly_red.witness
        == c.almost_always_blue.witness + 1
        == len(reds) + 1
        == c.streamless_reds.witness + 1
        and n == (reds[-1] + 1 if reds else 0)
    )


@prop("notions.atmost_is_bounded_size")
def _bounded(s, cfg):
    a = notions.DecSet.reds(s)
    return all(
        decide(AtMost(n), s) == notions.bounded_size(a, n) for n in range(cfg.max_n + 1)
    )


@prop("notions.enumerated_is_fgblue")
def _enum(s, cfg):
    return (notions.reds_enumerate(s) is not None) == decide(FGBlue(), s)


@prop("notions.almost_full_is_streamless")
def _af(s, cfg):
    return notions.almost_full_blues(s) == notions.streamless(notions.DecSet.reds(s))


@prop("notions.noetherian_rank")
def _noet(s, cfg):
    reds = notions.reds_enumerate(s)
    rank = notions.noetherian_rank(notions.DecSet.reds(s))
    return rank == (None if reds is None else len(reds))


# constructions

@prop("constructions.first_red_truncate")
def _frt(s, cfg):
    return decide(AtMost(2), cons.first_red_truncate(s))


@prop("constructions.complement_until_red")
def _cur(s, cfg):
    t = cons.complement_until_red(s)
    k = first_red(s)
    if red_count(t) != k:
        return False
    if decide(GBlue(), t) and at(s, 0) is not R:
        return False
    return decide(GFRed(), t) == decide(GBlue(), s)


@prop("constructions.pad_double")
def _pad(s, cfg):
    t = cons.pad_double(s)
    k = first_red(s)
    expected = 1 if k is None else k + 2
    return not decide(NuU(), t) and minimal_bound(t) == expected


@prop("constructions.search_tag")
def _tag(s, cfg):
    t = cons.search_tag(s)
    k = first_red(s)
    if red_count(t) != (0 if k is None else k):
        return False
    if (R not in t.prefix + t.cycle) != (k is None or k == 0):
        return False
    if k is not None and k >= 1:
        return decide(FIter(k + 1), t) and not decide(FIter(k), t)
    return True


@prop("constructions.red_positions")
def _reds(s, cfg):
    rp = cons.red_positions(s)
    horizon = _horizon(s) * 3
    listed = [x for x in rp.take(horizon) if x < horizon]
    actual = [k for k in range(horizon) if at(s, k) is R]
    if listed != actual:
        return False
    c = notions.classify(s)
    if isinstance(rp, Finite) != c.streamless_reds.holds:
        return False
    return not isinstance(rp, Finite) or list(rp.positions) == notions.reds_enumerate(s)


@prop("constructions.chain_to_colist")
def _c2c(s, cfg):
    for start in range(_horizon(s) + 1):
        out = cons.chain_to_colist(s, start)
        if any(at(s, x) is not R for x in out.take(2 * _horizon(s))):
            return False
    return True


@dataclass
class SuiteResult:
    streams: int = 0
    passed: dict[str, int] = field(default_factory=dict)
    failed: dict[str, list[str]] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not any(self.failed.values())


def run_suite(
    max_prefix: int = 5,
    max_cycle: int = 4,
    config: Optional[Config] = None,
    names: Optional[list[str]] = None,
) -> SuiteResult:
    config = config or Config()
    family = all_streams(max_prefix, max_cycle)
    selected = {k: v for k, v in PROPERTIES.items() if names is None or k in names}
    result = SuiteResult(streams=len(family))
    for name in selected:
        result.passed[name] = 0
        result.failed[name] = []
    for s in family:
        for name, check in selected.items():
            try:
                good = check(s, config)
            except Exception:  # a crash is a failure of that property
                good = False
            if good:
                result.passed[name] += 1
            else:
                result.failed[name].append(format_stream(s))
    return result
