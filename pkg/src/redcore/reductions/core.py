"""The core as J^(n+1) : I^n, certified by stabilization and a second reduction."""

from __future__ import annotations

import random

from ..blowup import analytic_spread
from ..errors import CharacteristicTooSmall, HypothesisRefused
from ..ideals import Ideal, height
from ..local import LocalIdeal, local_intersect, localize
from .colon import colon_power, power_local
from .sampling import random_minimal_reduction, sample_reductions
from .types import CoreResult, Options, ReductionSample


def ideal_height(I: Ideal) -> int:
    """Height of I; an m-primary ideal has height dim R even without the CI flag."""
    try:
        return height(I)
    except HypothesisRefused:
        localize(I)
        return I.ring.dim


def characteristic_guard(I: Ideal, r: int, ell: int, g: int) -> bool:
    p = I.ring.characteristic
    return p == 0 or p > r - ell + g


def formula_index(r: int, ell: int, g: int) -> int:
    return max(r - ell + g, 0)


def core(I: Ideal, rng: random.Random | None = None, options: Options = Options(),
         samples: list[ReductionSample] | None = None) -> CoreResult:
    """core(I) = J^(n0+1) : I^n0 with n0 = max(r_J - ell + g, 0)."""
    if samples is None or len(samples) < 2:
        if rng is None:
            samples = sample_reductions(I, options, 2, "core")
        else:
            samples = [random_minimal_reduction(I, rng, options, "core", i) for i in range(2)]
    first, second = samples[0], samples[1]
    ell, g = analytic_spread(I), ideal_height(I)
    if not characteristic_guard(I, first.r_J, ell, g):
        raise CharacteristicTooSmall(
            f"characteristic {I.ring.characteristic} <= r_J - ell + g = {first.r_J - ell + g}"
        )
    n0 = formula_index(first.r_J, ell, g)
    value = colon_power(first, I, n0)
    stabilized = colon_power(first, I, n0 + 1) == value
    n1 = formula_index(second.r_J, ell, g)
    cross = colon_power(second, I, n1) == value
    return CoreResult(value, n0, first, stabilized, cross, True)


def core_oracle_mc(I: Ideal, K: int = 25, rng: random.Random | None = None,
                   options: Options = Options(), samples: list[ReductionSample] | None = None) -> LocalIdeal:
    """Intersection of K sampled minimal reductions, localized."""
    if K < 2:
        raise ValueError("K must be >= 2")
    if samples is None:
        if rng is None:
            samples = sample_reductions(I, options, K, "oracle")
        else:
            samples = [random_minimal_reduction(I, rng, options, "oracle", i) for i in range(K)]
    acc = localize(samples[0].J)
    for s in samples[1:K]:
        acc = local_intersect(acc, localize(s.J))
    return acc


def min_power_in_core(I: Ideal, core_value: LocalIdeal, limit: int = 50) -> int:
    """Least i with I^(i+1) ⊆ core locally."""
    for i in range(limit + 1):
        if localize(power_local(I, i + 1)) <= core_value:
            return i
    raise ValueError(f"no power I^(i+1) with i <= {limit} lies in the core")
