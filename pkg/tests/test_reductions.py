import random

import pytest

from redcore.errors import CharacteristicTooSmall, NotAReduction, ReductionBoundExceeded
from redcore.ideals import RingDescriptor
from redcore.local import local_subset, localize
from redcore.reductions import (
    CONSISTENT,
    COUNTEREXAMPLE,
    SUPPRESSED,
    Options,
    balanced_test,
    cancellation_check,
    colon_power,
    core,
    core_oracle_mc,
    decreasing_chain_check,
    estimate_r,
    min_balanced_index,
    min_power_in_core,
    random_minimal_reduction,
    reduction_number,
    sample_reductions,
)
from redcore.reductions.colon import power_local

R = RingDescriptor("xy")
CUSP = RingDescriptor("xy", relations=["y^2 - x^3"], complete_intersection=True)
MAIN = ("x^10", "x^4*y^5", "y^9")


@pytest.fixture(scope="module")
def main_example():
    I = R.ideal(*MAIN)
    S = sample_reductions(I, Options(seed=7, samples=4))
    return I, S


def m3():
    return localize(R.ideal("x^3", "x^2*y", "x*y^2", "y^3"))


def test_random_minimal_reduction_examples():
    s = random_minimal_reduction(R.ideal("x", "y"), random.Random(0))
    assert len(s.J.generators) == 2 and s.r_J == 0
    assert len(s.matrix) == 2 and all(abs(c) <= 1000 for row in s.matrix for c in row)
    s = random_minimal_reduction(CUSP.maximal_ideal(), random.Random(0))
    assert len(s.J.generators) == 1 and s.r_J == 1


def test_main_example_reductions(main_example):
    I, S = main_example
    assert all(len(s.J.generators) == 2 and s.r_J == 4 for s in S)
    for s in S:
        assert local_subset(s.J, I)


def test_reduction_number_examples():
    J = R.ideal("x^2", "y^2")
    assert reduction_number(J, J) == 0
    assert reduction_number(R.ideal("x^2", "x*y", "y^2"), J) == 1
    with pytest.raises(ReductionBoundExceeded):
        reduction_number(R.ideal("x^2", "x*y", "y^2"), R.ideal("x^2", "x*y"), n_max=4)
    with pytest.raises(NotAReduction):
        reduction_number(R.ideal("x^2", "y^2"), R.ideal("x", "y^2"))


def test_reduction_sampling_failure_is_reported():
    # H = 0 makes every combination vanish
    with pytest.raises(NotAReduction):
        random_minimal_reduction(R.ideal("x", "y"), random.Random(0), Options(height=0, retries=2))


def test_estimate_r_examples():
    r, S = estimate_r(R.ideal("x", "y"), 3)
    assert r == 0 and len({s.r_J for s in S}) == 1
    r, S = estimate_r(CUSP.maximal_ideal(), 3, random.Random(4))
    assert r == 1 and all(s.r_J == 1 for s in S)
    with pytest.raises(ValueError):
        estimate_r(R.ideal("x"), 0)


def test_colon_power_examples(main_example):
    m = R.ideal("x", "y")
    assert colon_power(m, m, 1) == localize(m)
    assert colon_power(R.ideal("x^2", "y^2"), R.ideal("x^2", "x*y", "y^2"), 1) == m3()
    I, S = main_example
    assert colon_power(S[0], I, 4) == core(I, samples=S).core
    assert colon_power(S[0].J, I, 0) == localize(S[0].J)


def test_cancellation_examples(main_example):
    assert cancellation_check(R.ideal("x", "y"), 1, 1)
    assert cancellation_check(R.ideal("x^2", "y^2"), 2, 1)
    _, S = main_example
    assert cancellation_check(S[0], 3, 2)


def test_chain_examples(main_example):
    m = R.ideal("x", "y")
    assert decreasing_chain_check(m, m, 3)
    I2 = R.ideal("x^2", "x*y", "y^2")
    assert decreasing_chain_check(I2, random_minimal_reduction(I2, random.Random(1)), 3)
    I, S = main_example
    assert decreasing_chain_check(I, S[0], 5)
    c = [colon_power(S[0], I, i) for i in range(6)]
    assert c[3] != c[2] and c[3] <= c[2]
    assert c[3] == c[4]


def test_core_examples(main_example):
    cr = core(R.ideal("x", "y"), random.Random(0))
    assert sorted(cr.core.generator_strings()) == ["x", "y"] and cr.n_used == 0 and cr.certified
    cr = core(R.ideal("x^2", "x*y", "y^2"), options=Options(seed=3))
    assert cr.core == m3() and cr.n_used == 1 and cr.certified
    I, S = main_example
    cr = core(I, samples=S)
    assert cr.n_used == 4 and cr.certified and cr.characteristic_guard
    assert cr.core == colon_power(S[1], I, 4)
    for s in S:
        assert cr.core <= localize(s.J)


def test_core_characteristic_guard():
    R3 = RingDescriptor("xy", characteristic=3)
    I = R3.ideal(*MAIN)
    S = sample_reductions(I, Options(seed=1), 2)
    with pytest.raises(CharacteristicTooSmall):
        core(I, samples=S)
    assert min_balanced_index(I, Options(seed=1), samples=S).theorem_verdict == SUPPRESSED


def test_core_in_positive_characteristic_above_guard():
    R7 = RingDescriptor("xy", characteristic=7)
    cr = core(R7.ideal("x^2", "x*y", "y^2"), options=Options(seed=2))
    assert cr.core == localize(R7.ideal("x^3", "x^2*y", "x*y^2", "y^3"))


def test_oracle_examples(main_example):
    m = R.ideal("x", "y")
    assert core_oracle_mc(m, 3, random.Random(0)) == localize(m)
    I2 = R.ideal("x^2", "x*y", "y^2")
    assert core_oracle_mc(I2, 25, options=Options(seed=5)) == m3()
    I, S = main_example
    formula = core(I, samples=S).core
    oracle = core_oracle_mc(I, 25, options=Options(seed=9))
    assert formula <= oracle
    assert formula == oracle
    with pytest.raises(ValueError):
        core_oracle_mc(m, 1)


def test_balanced_test_examples(main_example):
    I2 = R.ideal("x^2", "x*y", "y^2")
    ok, w = balanced_test(I2, 0, 3, random.Random(0))
    assert not ok and w == (0, 1)
    m = R.ideal("x", "y")
    assert balanced_test(m, 0, 3, random.Random(0)) == (True, None)
    I, S = main_example
    assert balanced_test(I, 3, samples=S)[0]
    assert balanced_test(I, 4, samples=S)[0]
    assert not balanced_test(I, 2, samples=S)[0]


def test_min_balanced_index_examples(main_example):
    rep = min_balanced_index(R.ideal("x^2", "x*y", "y^2"), Options(seed=3))
    assert (rep.expected_index, rep.min_balanced_index, rep.gr_cm, rep.theorem_verdict) == (1, 1, "yes", CONSISTENT)
    rep = min_balanced_index(CUSP.maximal_ideal(), Options(seed=3))
    assert (rep.r_hat, rep.min_balanced_index, rep.theorem_verdict) == (1, 1, CONSISTENT)
    assert rep.verdict_at(0) is False and rep.verdict_at(1) is True
    I, S = main_example
    rep = min_balanced_index(I, Options(seed=7, samples=4, buffer=0), samples=S)
    assert rep.expected_index == 4 and rep.min_balanced_index == 3
    assert rep.gr_cm == "no" and rep.theorem_verdict == COUNTEREXAMPLE
    assert rep.monotone and rep.r_constant


def test_min_power_in_core_examples(main_example):
    m = R.ideal("x", "y")
    assert min_power_in_core(m, localize(m)) == 0
    assert min_power_in_core(R.ideal("x^2", "x*y", "y^2"), m3()) == 1
    I, S = main_example
    i = min_power_in_core(I, core(I, samples=S).core)
    assert local_subset(power_local(I, i + 1), core(I, samples=S).core.as_ideal())


def test_substreams_are_independent_of_order():
    I = R.ideal("x^3", "x*y", "y^3")
    opts = Options(seed=11)
    forward = [random_minimal_reduction(I, opts.rng("reduction", i)).matrix for i in range(3)]
    backward = [random_minimal_reduction(I, opts.rng("reduction", i)).matrix for i in reversed(range(3))]
    assert forward == list(reversed(backward))
    assert [s.matrix for s in sample_reductions(I, opts, 3)] == forward
