"""Pure-Python nested Kleene iterations on quotient state bitmasks.

Every function takes the quotient shape ``(p, n)`` (prefix length, state
count) and the red-state mask.  Mirrors ``_kernels.pyx`` exactly.
"""


def pre(p, n, ys):
    last = n - 1
    return ((ys >> 1) & ((1 << last) - 1)) | ((ys >> p & 1) << last)


def eventually_mask(p, n, xs):
    ys = 0
    while True:
        nxt = xs | pre(p, n, ys)
        if nxt == ys:
            return ys
        ys = nxt


def always_mask(p, n, xs):
    ys = (1 << n) - 1
    while True:
        nxt = xs & pre(p, n, ys)
        if nxt == ys:
            return ys
        ys = nxt


def weak_until_mask(p, n, red, xs):
    blue = ((1 << n) - 1) & ~red
    after = red & pre(p, n, xs)
    ys = (1 << n) - 1
    while True:
        nxt = (blue & pre(p, n, ys)) | after
        if nxt == ys:
            return ys
        ys = nxt


def strong_until_mask(p, n, red, xs):
    blue = ((1 << n) - 1) & ~red
    after = red & pre(p, n, xs)
    ys = 0
    while True:
        nxt = (blue & pre(p, n, ys)) | after
        if nxt == ys:
            return ys
        ys = nxt


def mu_w_mask(p, n, red):
    xs = 0
    while True:
        nxt = weak_until_mask(p, n, red, xs)
        if nxt == xs:
            return xs
        xs = nxt


def nu_u_mask(p, n, red):
    xs = (1 << n) - 1
    while True:
        nxt = strong_until_mask(p, n, red, xs)
        if nxt == xs:
            return xs
        xs = nxt


def atmost_mask(p, n, red, k):
    """Greatest fixpoint on states x {1..k}; level 0 is empty."""
    if k <= 0:
        return 0
    full = (1 << n) - 1
    blue = full & ~red
    levels = [0] + [full] * k
    changed = True
    while changed:
        changed = False
        for j in range(1, k + 1):
            nxt = (blue & pre(p, n, levels[j])) | (red & pre(p, n, levels[j - 1]))
            if nxt != levels[j]:
                levels[j] = nxt
                changed = True
    return levels[k]


def fiter_mask(p, n, red, k):
    xs = 0
    for _ in range(k):
        nxt = weak_until_mask(p, n, red, xs)
        if nxt == xs:
            break
        xs = nxt
    return xs
