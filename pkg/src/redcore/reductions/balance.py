"""Independence of J^(n+1) : I^n from J, scanned against the predicted index."""

from __future__ import annotations

import random

from ..blowup import TriState, analytic_spread, valabrega_valla
from ..ideals import Ideal
from ..local import localize
from .colon import colon_power
from .core import characteristic_guard, formula_index, ideal_height
from .sampling import random_minimal_reduction, sample_reductions
from .types import BalanceReport, BalanceVerdict, Options, ReductionSample

CONSISTENT = "consistent"
INCONSISTENT = "inconsistent"
COUNTEREXAMPLE = "counterexample-to-CM-free-version"
OUT_OF_HYPOTHESIS = "out-of-hypothesis"
SUPPRESSED = "suppressed"


def balanced_test(I: Ideal, n: int, N: int = 8, rng: random.Random | None = None,
                  options: Options = Options(), samples: list[ReductionSample] | None = None):
    """True iff J^(n+1) : I^n agrees for N sampled reductions; otherwise a witness index pair."""
    if samples is None:
        if N < 2:
            raise ValueError("need at least two samples")
        if rng is None:
            samples = sample_reductions(I, options, N, "balanced")
        else:
            samples = [random_minimal_reduction(I, rng, options, "balanced", i) for i in range(N)]
    ref = colon_power(samples[0], I, n)
    for j, s in enumerate(samples[1:], start=1):
        if colon_power(s, I, n) != ref:
            return False, (0, j)
    return True, None


def _classify(verdicts, expected, r_hat, dim, gr_cm) -> str:
    checks = []
    if gr_cm == TriState.YES:
        checks += [v.independent == (v.n >= expected) for v in verdicts]
    if dim == 1:
        checks += [v.independent == (v.n >= r_hat) for v in verdicts if v.n >= 1]
    if not all(checks):
        return INCONSISTENT
    if checks:
        return CONSISTENT
    if gr_cm == TriState.NO and any(v.independent and v.n < expected for v in verdicts):
        return COUNTEREXAMPLE
    return OUT_OF_HYPOTHESIS


def min_balanced_index(I: Ideal, options: Options = Options(), rng: random.Random | None = None,
                       samples: list[ReductionSample] | None = None) -> BalanceReport:
    """Scan n = 0 .. expected + buffer and compare with the predicted threshold."""
    localize(I)
    if samples is None:
        if rng is None:
            samples = sample_reductions(I, options)
        else:
            samples = [random_minimal_reduction(I, rng, options, "scan", i) for i in range(options.samples)]
    ell, g, dim = analytic_spread(I), ideal_height(I), I.ring.dim
    r_samples = [s.r_J for s in samples]
    r_hat = min(r_samples)
    expected = formula_index(r_hat, ell, g)
    guard = characteristic_guard(I, r_hat, ell, g)
    cm = valabrega_valla(I, samples[0].J, samples[0].r_J)
    gr_cm = TriState.YES if cm else TriState.NO
    verdicts = []
    for n in range(0, expected + options.buffer + 1):
        ok, w = balanced_test(I, n, samples=samples)
        verdicts.append(BalanceVerdict(n, ok, w))
    first = next((v.n for v in verdicts if v.independent), None)
    seen = False
    monotone = True
    for v in verdicts:
        if seen and not v.independent:
            monotone = False
        seen = seen or v.independent
    verdict = _classify(verdicts, expected, r_hat, dim, gr_cm) if guard else SUPPRESSED
    notes = []
    if not monotone:
        notes.append("verdicts not monotone in n")
    r_constant = len(set(r_samples)) == 1
    if not r_constant and (cm or dim == 1):
        notes.append("r_J varied across samples although it should be constant")
    return BalanceReport(ell, g, r_hat, r_samples, verdicts, first, expected, str(gr_cm), dim,
                         verdict, monotone, r_constant, guard, notes)
