"""Backend selection for the nested fixpoint kernels.

The compiled ``_kernels`` extension is used when it imports and the quotient
fits in its 64-bit masks; otherwise the pure-Python twin runs.
"""

from __future__ import annotations

from types import ModuleType

from . import _kernels_py
from .fixpoint import Quotient, StateSet

try:
    from . import _kernels as _compiled
except ImportError:  # extension not built
    _compiled = None

BACKEND = "cython" if _compiled is not None else "python"


def backend(name: str) -> ModuleType:
    if name == "python":
        return _kernels_py
    if name == "cython":
        if _compiled is None:
            raise ImportError("compiled kernels are not built")
        return _compiled
    raise ValueError(f"unknown backend {name!r}")


def _impl(q: Quotient) -> ModuleType:
    if _compiled is not None and q.state_count <= _compiled.MAX_STATES:
        return _compiled
    return _kernels_py


def eventually(q: Quotient, xs: StateSet) -> StateSet:
    return _impl(q).eventually_mask(q.prefix_len, q.state_count, xs)


def always(q: Quotient, xs: StateSet) -> StateSet:
    return _impl(q).always_mask(q.prefix_len, q.state_count, xs)


def weak_until(q: Quotient, xs: StateSet) -> StateSet:
    return _impl(q).weak_until_mask(q.prefix_len, q.state_count, q.red, xs)


def strong_until(q: Quotient, xs: StateSet) -> StateSet:
    return _impl(q).strong_until_mask(q.prefix_len, q.state_count, q.red, xs)


def mu_w(q: Quotient) -> StateSet:
    return _impl(q).mu_w_mask(q.prefix_len, q.state_count, q.red)


def nu_u(q: Quotient) -> StateSet:
    return _impl(q).nu_u_mask(q.prefix_len, q.state_count, q.red)


def atmost_levels(q: Quotient, k: int) -> int:
    # A finite red count ahead of any state is at most prefix_len < state_count,
    # so levels beyond state_count + 1 never change the answer.
    return min(k, q.state_count + 1)


def atmost(q: Quotient, k: int) -> StateSet:
    return _impl(q).atmost_mask(q.prefix_len, q.state_count, q.red, atmost_levels(q, k))


def fiter(q: Quotient, k: int) -> StateSet:
    return _impl(q).fiter_mask(q.prefix_len, q.state_count, q.red, k)
