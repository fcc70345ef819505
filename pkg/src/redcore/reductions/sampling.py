"""Random general minimal reductions and reduction numbers."""

from __future__ import annotations

import random

from ..blowup import analytic_spread
from ..errors import NotAReduction, NotMPrimaryLocally, ReductionBoundExceeded
from ..ideals import Ideal, cached_power, product
from ..local import local_subset, localize, truncated_gb
from .types import Options, ReductionSample


def _nakayama_step(I: Ideal, J: Ideal, n: int, degree_cap=None) -> bool:
    """I^(n+1) = J I^n locally, tested as I^(n+1) ⊆ J I^n + m I^(n+1)."""
    P = cached_power(I, n + 1)
    LP = localize(P)
    if LP.is_unit:
        return any(g.constant_coeff() for g in J.generators)
    lower = product(J, cached_power(I, n)) if n else J
    gens = list(lower.generators)
    for x in I.ring.poly_ring.gens:
        gens.extend(x * f for f in P.generators)
    G = truncated_gb(gens, I.ring, LP.N + 1, degree_cap)
    return all(G.contains(f) for f in P.generators)


def reduction_number(I: Ideal, J: Ideal, n_max: int = 50, degree_cap=None) -> int:
    """Least n <= n_max with I^(n+1) = J I^n in R_m."""
    localize(I)
    if not local_subset(J, I):
        raise NotAReduction("J is not contained in I locally")
    for n in range(n_max + 1):
        if _nakayama_step(I, J, n, degree_cap):
            return n
    raise ReductionBoundExceeded(f"I^(n+1) != J I^n for all n <= {n_max}")


def draw_reduction(I: Ideal, rng: random.Random, ell: int, height: int) -> tuple[list[list[int]], Ideal]:
    gens = I.nonzero_generators()
    zero = I.ring.poly_ring.zero
    matrix = [[rng.randint(-height, height) for _ in gens] for _ in range(ell)]
    out = []
    for row in matrix:
        acc = zero
        for c, f in zip(row, gens):
            if c:
                acc = acc + f * c
        out.append(acc)
    return matrix, Ideal(I.ring, out)


def random_minimal_reduction(I: Ideal, rng: random.Random, options: Options = Options(),
                             label: str = "", index: int = 0) -> ReductionSample:
    """Specialize the generic matrix X to random integers and verify the result is a reduction."""
    localize(I)
    ell = analytic_spread(I)
    last: Exception | None = None
    for attempt in range(1, options.retries + 1):
        matrix, J = draw_reduction(I, rng, ell, options.height)
        if any(not a for a in J.generators):
            last = NotAReduction("a combination vanished")
            continue
        try:
            r = reduction_number(I, J, options.n_max, options.degree_cap)
        except ReductionBoundExceeded as exc:
            last = exc
            continue
        # I^(r+1) ⊆ J bounds the local order of J
        J.local_bound = localize(cached_power(I, r + 1)).N
        try:
            localize(J)
        except NotMPrimaryLocally as exc:
            last = exc
            continue
        return ReductionSample(I, matrix, J, r, label, index, attempt)
    if isinstance(last, ReductionBoundExceeded):
        raise ReductionBoundExceeded(f"no sampled J had r_J <= {options.n_max} after {options.retries} draws")
    raise NotAReduction(f"no reduction found after {options.retries} draws: {last}")


def sample_reductions(I: Ideal, options: Options, count: int | None = None, label: str = "reduction") -> list[ReductionSample]:
    count = options.samples if count is None else count
    return [random_minimal_reduction(I, options.rng(label, i), options, label, i) for i in range(count)]


def estimate_r(I: Ideal, samples: int = 8, rng: random.Random | None = None,
               options: Options = Options()) -> tuple[int, list[ReductionSample]]:
    """r̂ = min of r_J over sampled reductions, with the samples themselves."""
    if samples < 1:
        raise ValueError("samples must be >= 1")
    if rng is None:
        drawn = sample_reductions(I, options, samples)
    else:
        drawn = [random_minimal_reduction(I, rng, options, "estimate", i) for i in range(samples)]
    return min(s.r_J for s in drawn), drawn
