"""Colons J^(n+1) : I^n and the cancellation / chain checks."""

from __future__ import annotations

from ..ideals import Ideal, cached_power
from ..local import LocalIdeal, local_quotient, localize
from .types import ReductionSample


def power_local(I: Ideal, n: int) -> Ideal:
    localize(I)
    P = cached_power(I, n)
    localize(P)
    return P


def colon_power(J, I: Ideal, n: int) -> LocalIdeal:
    """(J^(n+1) : I^n) R_m.  Accepts a ReductionSample to memoize per sample."""
    if n < 0:
        raise ValueError("n must be >= 0")
    memo = None
    if isinstance(J, ReductionSample):
        memo = J.colons
        if n in memo:
            return memo[n]
        J = J.J
    top = power_local(J, n + 1)
    out = localize(top) if n == 0 else local_quotient(top, power_local(I, n))
    if memo is not None:
        memo[n] = out
    return out


def cancellation_check(J, n: int, i: int) -> bool:
    """J^(n+i) : J^n = J^i locally."""
    if isinstance(J, ReductionSample):
        J = J.J
    lhs = local_quotient(power_local(J, n + i), power_local(J, n))
    return lhs == localize(power_local(J, i))


def decreasing_chain_check(I: Ideal, J, up_to: int) -> bool:
    """J^(i+1) : I^i ⊇ J^(i+2) : I^(i+1) for 0 <= i < up_to."""
    return all(colon_power(J, I, i + 1) <= colon_power(J, I, i) for i in range(up_to))
