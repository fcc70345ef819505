import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from redcore.errors import NotMPrimaryLocally
from redcore.ideals import Ideal, RingDescriptor, intersect, quotient
from redcore.local import (
    colength,
    local_contains,
    local_equal,
    local_intersect,
    local_quotient,
    local_subset,
    localize,
)

from .strategies import in_monomial_ideal, m_primary_monomial

R = RingDescriptor("xy")
R3 = RingDescriptor("xyz")
CUSP = RingDescriptor("xy", relations=["y^2 - x^3"], complete_intersection=True)


def mono(ring, exps):
    return Ideal(ring, [ring.poly_ring.monomial(e) for e in exps])


def test_local_contains_examples():
    assert local_contains(R.ideal("x*(1+y)"), "x")
    assert not local_contains(R.ideal("x^2", "x*y"), "x")
    assert not local_contains(R.ideal("x^4", "x^2*y^2", "y^4"), "x^3*y")
    # away from the origin the component (x - 1) does not count
    assert local_contains(R.ideal("x*(x - 1)", "y"), "x")


def test_localize_examples():
    L = localize(R.ideal("x^2", "y^3"))
    assert L.N == 4
    assert sorted(L.generator_strings()) == ["x^2", "y^3"]
    L = localize(R.ideal("x", "y"))
    assert L.N == 1 and sorted(L.generator_strings()) == ["x", "y"]
    assert localize(R.ideal("1 + x")).is_unit


def test_localize_discards_components_away_from_origin():
    A = R.ideal("x^2*(x - 1)", "y*(y + 2)")
    assert local_equal(A, R.ideal("x^2", "y"))


def test_local_equal_subset_examples():
    assert local_equal(R.ideal("x", "y"), R.ideal("x + y^5", "y"))
    assert local_subset(R.ideal("x^2", "x*y", "y^2"), R.ideal("x", "y"))
    m = CUSP.maximal_ideal()
    assert local_equal(CUSP.ideal("x^2", "x*y"), m * m)


def test_colength_examples():
    assert colength(R.ideal("x", "y")) == 1
    assert colength(R.ideal("x^2", "y^3")) == 6
    assert colength(R.ideal("x^2", "x*y", "y^2")) == 3
    assert colength(R.ideal("1 - y")) == 0


def test_not_m_primary():
    with pytest.raises(NotMPrimaryLocally):
        localize(R.ideal("x"), bound=16)


def _check_minimal_N(A):
    L = localize(A)
    pr = A.ring.poly_ring
    inside = lambda d: all(L.canonical.contains(pr.monomial(e)) for e in pr.monomials_of_degree(d))
    assert inside(L.N)
    if L.N > 0:
        assert not inside(L.N - 1)
    return L


def test_N_minimal_for_inhomogeneous():
    # a^3 with a of valuation 2 in k[t^2, t^3]: colength 6, and t^6 (degree 3) is not inside
    L = _check_minimal_N(CUSP.ideal("(x + 2*y)^3"))
    assert L.colength == 6 and L.N == 4
    rng = random.Random(5)
    for _ in range(10):
        gens = ["x^%d + %d*y^%d" % (rng.randint(2, 5), rng.randint(-3, 3), rng.randint(1, 4)),
                "y^%d - %d*x*y" % (rng.randint(3, 6), rng.randint(-3, 3))]
        _check_minimal_N(R.ideal(*gens))


@settings(max_examples=25)
@given(m_primary_monomial(2, 6), m_primary_monomial(2, 4))
def test_monomial_colon_against_brute_force(ea, eb):
    LA = local_quotient(mono(R, ea), mono(R, eb))
    for a in range(12):
        for b in range(12):
            want = all(in_monomial_ideal((a + c, b + d), ea) for c, d in eb)
            assert LA.contains(R.poly_ring.monomial((a, b))) == want


@settings(max_examples=10)
@given(m_primary_monomial(3, 4, extra=2), m_primary_monomial(3, 3, extra=1))
def test_monomial_colon_three_variables(ea, eb):
    LA = local_quotient(mono(R3, ea), mono(R3, eb))
    assert LA == localize(quotient(mono(R3, ea), mono(R3, eb)))


def _random_m_primary(rng):
    a, b = rng.randint(2, 4), rng.randint(2, 4)
    return R.ideal(f"x^{a} + {rng.randint(-2, 2)}*x*y^{rng.randint(1, 2)}",
                   f"y^{b} + {rng.randint(-2, 2)}*x^{rng.randint(1, 3)}*y")


def test_local_colon_matches_global_route():
    rng = random.Random(17)
    for _ in range(8):
        A, B = _random_m_primary(rng), _random_m_primary(rng)
        assert local_quotient(A, B) == localize(quotient(A, B))


def test_local_intersect_matches_global_route():
    rng = random.Random(19)
    for _ in range(8):
        A, B = _random_m_primary(rng), _random_m_primary(rng)
        L = local_intersect(A, B)
        assert L == localize(intersect(A, B))
        assert L <= localize(A) and L <= localize(B)
    assert sorted(local_intersect(R.ideal("x^2", "y", "x^3"), R.ideal("x", "y^2")).generator_strings()) == ["x*y", "x^2", "y^2"]


def test_colon_in_cusp():
    m = CUSP.maximal_ideal()
    a = CUSP.ideal("x + 2*y")
    # (a^3) : m^2 = m^2 by valuations
    assert local_quotient(a * a * a, m * m) == localize(m * m)


@settings(max_examples=20)
@given(m_primary_monomial(2, 6))
def test_idempotent_and_strict(exps):
    A = mono(R, exps)
    L = localize(A)
    assert localize(L.as_ideal()) == L
    again = Ideal(R, L.generators)
    assert localize(again) == L
    if L.colength > 1:
        bigger = Ideal(R, L.generators + [R.poly_ring.monomial(L.staircase[-1])])
        assert colength(bigger) < L.colength


def test_monomial_complete_intersections():
    rng = random.Random(23)
    for _ in range(20):
        n = rng.choice([2, 3])
        ring = R if n == 2 else R3
        degs = [rng.randint(1, 5) for _ in range(n)]
        exps = []
        for i, d in enumerate(degs):
            e = [0] * n
            e[i] = d
            exps.append(tuple(e))
        prod = 1
        for d in degs:
            prod *= d
        assert colength(mono(ring, exps)) == prod


def test_monotone_under_inclusion():
    A = R.ideal("x^3", "y^3", "x*y^2")
    B = R.ideal("x^2", "y^3", "x*y")
    assert local_subset(A, B)
    assert colength(A) > colength(B)
