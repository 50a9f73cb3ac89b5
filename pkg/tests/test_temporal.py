import pytest
from hypothesis import given, strategies as st

from finred.stream import B, R, FunStream, UpStream, parse_stream, s2f, suffix
from finred.temporal import (
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
    Unknown,
    UnsupportedPredicate,
    check_black_box,
    decide,
    fn_equals_atmost,
    minimal_bound,
)

import oracles
from conftest import raw_streams, up_streams

P = parse_stream


def red_block(n):
    return UpStream.of("R" * n, "B")


def test_decide_examples():
    assert decide(FGBlue(), P("BRB(B)"))
    assert decide(AtMost(1), P("(B)"))
    assert not decide(AtMost(0), P("(B)"))
    assert decide(GFRed(), P("(RB)"))
    assert not decide(MuW(), P("(RB)"))


@pytest.mark.parametrize("n", range(10))
def test_fiter_on_red_blocks(n):
    assert decide(FIter(n + 1), red_block(n))
    assert not decide(FIter(n), red_block(n))


def test_atmost_zero_everywhere_false(family):
    assert not any(decide(AtMost(0), s) for s in family)
    assert not any(decide(FIter(0), s) for s in family)


def test_negative_bounds_rejected():
    with pytest.raises(ValueError):
        AtMost(-1)
    with pytest.raises(ValueError):
        FIter(-1)


def test_minimal_bound_examples():
    assert minimal_bound(P("(B)")) == 1
    assert minimal_bound(P("BRB(B)")) == 2
    assert minimal_bound(P("(RB)")) is None


def test_black_box_examples():
    assert check_black_box(FRed(), s2f(P("BRB(B)")), 2) == Holds()
    assert check_black_box(GBlue(), FunStream(lambda n: B), 1000) == Unknown(1000)
    assert check_black_box(GBlue(), s2f(P("BBBR(B)")), 10) == Fails()
    assert check_black_box(FRed(), s2f(P("BBBR(B)")), 3) == Unknown(3)
    for p in (FGBlue(), GFRed(), MuW(), NuU(), AtMost(2)):
        with pytest.raises(UnsupportedPredicate):
            check_black_box(p, FunStream(lambda n: B), 10)


def test_black_box_spends_at_most_fuel():
    probed = []

    def lookup(n):
        probed.append(n)
        return B

    check_black_box(FRed(), FunStream(lookup), 17)
    assert probed == list(range(17))


def test_black_box_works_on_non_periodic_stream():
    squares = FunStream(lambda n: R if int(n**0.5) ** 2 == n and n > 50 else B)
    assert check_black_box(FRed(), squares, 100) == Holds()
    assert check_black_box(GBlue(), squares, 50) == Unknown(50)


@pytest.mark.parametrize("lit", ["(B)", "(RB)", "BRB(B)"])
def test_fn_equals_atmost_examples(lit):
    assert fn_equals_atmost(P(lit), 5)


@given(raw_streams())
def test_simple_modalities_match_oracle(s):
    assert decide(FRed(), s) == oracles.f_red(s)
    assert decide(GBlue(), s) == oracles.g_blue(s)
    assert decide(FGBlue(), s) == oracles.fg_blue(s)
    assert decide(GFRed(), s) == oracles.gf_red(s)


@given(raw_streams())
def test_fixpoint_predicates_match_oracle(s):
    assert decide(MuW(), s) == oracles.mu_w(s)
    assert decide(NuU(), s) == oracles.nu_u(s)


@given(raw_streams(), st.integers(min_value=0, max_value=9))
def test_atmost_and_fiter_match_oracle(s, n):
    assert decide(AtMost(n), s) == oracles.atmost(s, n)
    assert decide(FIter(n), s) == oracles.fiter(s, n)


@given(up_streams(), st.sampled_from([GBlue(), MuW(), FRed(), NuU()]))
def test_on_pop_layers_match_oracle(s, base):
    w = oracles.window(s)
    for n in range(w + 1):
        t = suffix(s, n)
        x = lambda m: decide(base, suffix(s, m))
        assert decide(OnApplied(base), t) == oracles.on(s, n, x)
        assert decide(PopApplied(base), t) == oracles.pop(s, n, x)


@given(up_streams())
def test_lpo_decided_on_fragment(s):
    assert decide(GBlue(), s) != decide(FRed(), s)


@given(up_streams())
def test_nu_u_is_gf_red(s):
    assert decide(NuU(), s) == decide(GFRed(), s)


@given(up_streams())
def test_fiter_is_atmost_up_to_8(s):
    assert fn_equals_atmost(s, 8)


@given(up_streams())
def test_minimal_bound_is_least(s):
    b = minimal_bound(s)
    if b is None:
        assert not any(decide(AtMost(n), s) for n in range(12))
    else:
        assert decide(AtMost(b), s) and not decide(AtMost(b - 1), s)


@given(up_streams())
def test_downward_chain(s):
    fg, mu, gf = decide(FGBlue(), s), decide(MuW(), s), decide(GFRed(), s)
    bounded = minimal_bound(s) is not None
    assert not fg or bounded
    assert not bounded or mu
    assert not mu or not gf


@given(up_streams(), st.integers(min_value=0, max_value=40))
def test_black_box_sound(s, fuel):
    f = s2f(s)
    for p in (FRed(), GBlue()):
        v = check_black_box(p, f, fuel)
        if isinstance(v, Holds):
            assert decide(p, s)
        elif isinstance(v, Fails):
            assert not decide(p, s)
        else:
            assert v.fuel_spent == fuel
    assert not isinstance(check_black_box(FRed(), f, fuel), Fails)
    assert not isinstance(check_black_box(GBlue(), f, fuel), Holds)
