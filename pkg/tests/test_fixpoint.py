import pytest
from hypothesis import given, strategies as st

from finred import fixpoint as fx
from finred.stream import R, UpStream, at

from conftest import raw_streams

U = UpStream.of


def test_build_quotient_examples():
    q = fx.build_quotient(U("", "B"))
    assert q.state_count == 1 and q.step(0) == 0 and q.color_of(0).value == "B"

    q = fx.build_quotient(U("BRB", "B"))
    assert q.state_count == 4
    assert [q.step(i) for i in range(4)] == [1, 2, 3, 3]

    q = fx.build_quotient(U("", "RB"))
    assert q.state_count == 2
    assert [q.step(i) for i in range(2)] == [1, 0]


@given(raw_streams())
def test_quotient_colours_positions(s):
    q = fx.build_quotient(s)
    for n in range(3 * q.state_count):
        assert q.color_of(q.state_of_position(n)) == at(s, n)
        assert q.state_of_position(n + 1) == q.step(q.state_of_position(n))


@given(raw_streams(), st.integers(min_value=0, max_value=2**12 - 1))
def test_preimage_matches_step(s, ys):
    q = fx.build_quotient(s)
    ys &= q.full
    expected = fx.state_set(i for i in range(q.state_count) if ys >> q.step(i) & 1)
    assert q.preimage(ys) == expected


def test_members_roundtrip():
    assert fx.members(0b1011) == [0, 1, 3]
    assert fx.state_set([0, 1, 3]) == 0b1011


def test_lfp_examples():
    q = fx.build_quotient(U("", "RB"))
    assert fx.lfp(lambda xs: xs, q) == 0
    assert fx.lfp(lambda xs: q.full, q) == q.full
    assert fx.lfp(lambda ys: q.red | q.preimage(ys), q) == q.full


def test_gfp_examples():
    q = fx.build_quotient(U("BRB", "B"))
    assert fx.gfp(lambda xs: xs, q) == q.full
    assert fx.gfp(lambda ys: q.blue & q.preimage(ys), q) == fx.state_set([2, 3])
    assert fx.gfp(lambda xs: 0, q) == 0


def test_non_monotone_detected():
    q = fx.build_quotient(U("", "RB"))
    flip = lambda xs: q.full & ~xs
    with pytest.raises(fx.NonMonotone):
        fx.lfp(flip, q)
    with pytest.raises(fx.NonMonotone):
        fx.gfp(flip, q)


def _counting(op):
    calls = []

    def wrapped(xs):
        calls.append(xs)
        return op(xs)

    return wrapped, calls


@given(raw_streams())
def test_fixpoints_are_fixed_and_ordered(s):
    q = fx.build_quotient(s)
    ops = [
        lambda ys: q.red | q.preimage(ys),
        lambda ys: q.blue & q.preimage(ys),
        lambda xs: fx.weak_until(q, xs),
        lambda xs: fx.strong_until(q, xs),
        lambda ys: (q.blue & q.preimage(ys)) | (q.red & q.preimage(q.full)),
    ]
    for op in ops:
        wrapped, calls = _counting(op)
        least = fx.lfp(wrapped, q)
        assert len(calls) <= q.state_count + 1
        wrapped, calls = _counting(op)
        greatest = fx.gfp(wrapped, q)
        assert len(calls) <= q.state_count + 1
        assert op(least) == least and op(greatest) == greatest
        assert least & ~greatest == 0


@given(raw_streams())
def test_kleene_stages_end_at_lfp(s):
    q = fx.build_quotient(s)
    op = lambda ys: q.red | q.preimage(ys)
    stages = fx.kleene_stages(op, q)
    assert (stages[-1] if stages else 0) == fx.lfp(op, q)
    assert all(a & ~b == 0 for a, b in zip(stages, stages[1:]))


@given(raw_streams())
def test_eventually_always_match_positions(s):
    q = fx.build_quotient(s)
    h = 2 * q.state_count
    ev = fx.eventually(q, q.red)
    al = fx.always(q, q.blue)
    for n in range(q.state_count):
        ahead = [at(s, k) for k in range(n, n + h)]
        assert bool(ev >> n & 1) == (R in ahead)
        assert bool(al >> n & 1) == (R not in ahead)
