"""Two-colour streams: ultimately periodic (exact) and black-box (function) views."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from itertools import product
from math import gcd
from typing import Callable, Iterable, Optional, Sequence


class Color(str, Enum):
    R = "R"
    B = "B"

    def __repr__(self) -> str:
        return self.value


R = Color.R
B = Color.B


class StreamError(ValueError):
    pass


class ShapeMismatch(StreamError):
    """A lookup does not repeat with the claimed prefix/cycle shape."""


class ParseError(StreamError):
    def __init__(self, text: str, offset: int, expected: str):
        self.text = text
        self.offset = offset
        self.expected = expected
        super().__init__(f"offset {offset}: expected {expected} in {text!r}")


def _colors(word: Iterable) -> tuple[Color, ...]:
    return tuple(Color(c) for c in word)


@dataclass(frozen=True)
class UpStream:
    """An ultimately periodic stream ``prefix cycle cycle cycle ...``.

    Instances are not canonical unless produced by :func:`canonicalize` (or
    anything that returns canonical streams, e.g. :func:`parse_stream`).
    """

    prefix: tuple[Color, ...]
    cycle: tuple[Color, ...]

    def __post_init__(self):
        object.__setattr__(self, "prefix", _colors(self.prefix))
        object.__setattr__(self, "cycle", _colors(self.cycle))
        if not self.cycle:
            raise StreamError("cycle must be nonempty")

    @classmethod
    def of(cls, prefix: str, cycle: str = "B") -> "UpStream":
        return cls(_colors(prefix), _colors(cycle))

    def __str__(self) -> str:
        return format_stream(self)

    def __getitem__(self, n: int) -> Color:
        return at(self, n)

    def __len__(self) -> int:
        # number of quotient states, not the stream length
        return len(self.prefix) + len(self.cycle)

    def take(self, k: int) -> list[Color]:
        return [at(self, i) for i in range(k)]


@dataclass(frozen=True)
class FunStream:
    """Black-box stream: a total ``position -> Color`` function."""

    lookup: Callable[[int], Color]

    def __call__(self, n: int) -> Color:
        return Color(self.lookup(n))


def at(s: UpStream, n: int) -> Color:
    if n < 0:
        raise StreamError(f"negative position {n}")
    p = len(s.prefix)
    if n < p:
        return s.prefix[n]
    return s.cycle[(n - p) % len(s.cycle)]


def _primitive_root(word: Sequence[Color]) -> tuple[Color, ...]:
    n = len(word)
    for d in range(1, n + 1):
        if n % d == 0 and tuple(word[:d]) * (n // d) == tuple(word):
            return tuple(word[:d])
    return tuple(word)


def canonicalize(s: UpStream) -> UpStream:
    """Minimal cycle (primitive root), then absorb the prefix into rotations."""
    prefix = list(s.prefix)
    cycle = list(_primitive_root(s.cycle))
    while prefix and prefix[-1] == cycle[-1]:
        prefix.pop()
        cycle = [cycle[-1]] + cycle[:-1]
    return UpStream(tuple(prefix), tuple(cycle))


def is_canonical(s: UpStream) -> bool:
    return canonicalize(s) == s


def suffix(s: UpStream, n: int) -> UpStream:
    if n < 0:
        raise StreamError(f"negative position {n}")
    p, c = len(s.prefix), len(s.cycle)
    if n <= p:
        return canonicalize(UpStream(s.prefix[n:], s.cycle))
    k = (n - p) % c
    return canonicalize(UpStream((), s.cycle[k:] + s.cycle[:k]))


def bisimilar(s: UpStream, t: UpStream) -> bool:
    return canonicalize(s) == canonicalize(t)


def agreement_window(s: UpStream, t: UpStream) -> int:
    """Length of a prefix on which pointwise agreement implies bisimilarity."""
    cs, ct = len(s.cycle), len(t.cycle)
    return len(s.prefix) + len(t.prefix) + cs * ct // gcd(cs, ct)


def first_difference(s: UpStream, t: UpStream) -> Optional[int]:
    """Least position where ``s`` and ``t`` differ, or None if bisimilar."""
    for k in range(agreement_window(s, t)):
        if at(s, k) != at(t, k):
            return k
    return None


def s2f(s: UpStream) -> FunStream:
    return FunStream(lambda n: at(s, n))


def f2s_up(lookup: Callable[[int], Color], prefix_len: int, cycle_len: int) -> UpStream:
    """Reify a black-box stream the caller claims has the given shape.

    Only the window ``[0, prefix_len + 2 * cycle_len)`` is inspected.
    """
    if prefix_len < 0:
        raise ShapeMismatch(f"negative prefix length {prefix_len}")
    if cycle_len < 1:
        raise ShapeMismatch(f"cycle length must be >= 1, got {cycle_len}")
    window = [Color(lookup(i)) for i in range(prefix_len + 2 * cycle_len)]
    for i in range(cycle_len):
        if window[prefix_len + i] != window[prefix_len + cycle_len + i]:
            raise ShapeMismatch(
                f"position {prefix_len + i} is {window[prefix_len + i].value} but "
                f"position {prefix_len + cycle_len + i} is "
                f"{window[prefix_len + cycle_len + i].value}"
            )
    return canonicalize(
        UpStream(tuple(window[:prefix_len]), tuple(window[prefix_len:prefix_len + cycle_len]))
    )


def format_stream(s: UpStream) -> str:
    return "".join(c.value for c in s.prefix) + "(" + "".join(c.value for c in s.cycle) + ")"


def parse_stream(text: str, canonical: bool = True) -> UpStream:
    """Parse ``PREFIX(CYCLE)``; a bare ``PREFIX`` means ``PREFIX(B)``.

    Returns the canonical form unless ``canonical`` is false, in which case
    the prefix and cycle are kept exactly as written.
    """
    finish = canonicalize if canonical else (lambda s: s)
    i = 0
    n = len(text)
    prefix: list[Color] = []
    while i < n and text[i] in "RB":
        prefix.append(Color(text[i]))
        i += 1
    if i == n:
        if not prefix:
            raise ParseError(text, i, "'R', 'B' or '('")
        return finish(UpStream(tuple(prefix), (B,)))
    if text[i] != "(":
        raise ParseError(text, i, "'R', 'B' or '('")
    i += 1
    cycle: list[Color] = []
    while i < n and text[i] in "RB":
        cycle.append(Color(text[i]))
        i += 1
    if i == n:
        raise ParseError(text, i, "'R', 'B' or ')'")
    if text[i] != ")":
        raise ParseError(text, i, "'R', 'B' or ')'")
    if not cycle:
        raise ParseError(text, i, "'R' or 'B' (cycle must be nonempty)")
    i += 1
    if i != n:
        raise ParseError(text, i, "end of input")
    return finish(UpStream(tuple(prefix), tuple(cycle)))


def red_count(s: UpStream) -> Optional[int]:
    """Number of red positions, None when infinite."""
    if R in s.cycle:
        return None
    return sum(1 for c in s.prefix if c is R)


def first_red(s: UpStream) -> Optional[int]:
    for i, c in enumerate(s.prefix + s.cycle):
        if c is R:
            return i
    return None


def all_streams(max_prefix: int, max_cycle: int) -> list[UpStream]:
    """Every canonical stream with ``|prefix| <= max_prefix``, ``|cycle| <= max_cycle``.

    Sorted by literal so sweeps are reproducible.
    """
    seen: set[UpStream] = set()
    for p in range(max_prefix + 1):
        for pre in product((R, B), repeat=p):
            for c in range(1, max_cycle + 1):
                for cyc in product((R, B), repeat=c):
                    seen.add(canonicalize(UpStream(pre, cyc)))
    return sorted(seen, key=format_stream)
