import random

import pytest
from hypothesis import given, settings

from redcore.blowup import (
    TriState,
    a_invariant_cm,
    analytic_spread,
    depth_positive,
    fiber_cone_relations,
    graded_hilbert,
    h_vector,
    is_linear_type,
    rees_ideal,
    valabrega_valla,
)
from redcore.errors import HypothesisRefused
from redcore.ideals import Ideal, RingDescriptor, equal
from redcore.polyring import PolyRing
from redcore.reductions import Options, sample_reductions

from .strategies import m_primary_monomial

R = RingDescriptor("xy")
CUSP = RingDescriptor("xy", relations=["y^2 - x^3"], complete_intersection=True)
MAIN = ("x^10", "x^4*y^5", "y^9")


def _vanishes(P, g):
    """Substitute T_i -> f_i * t and check the result is zero modulo Q."""
    ring = P.ideal.ring
    n = P.tvars
    S = PolyRing(["_t"] + list(ring.names), ring.domain)
    t = S.gen(0)
    images = [f.change_ring(S, list(range(1, ring.nvars + 1))) * t for f in P.generators]
    images += [S.gen(1 + i) for i in range(ring.nvars)]
    val = g.evaluate(images, S)
    if not ring.relations:
        return not val
    # coefficients of each power of t must lie in Q
    from redcore.groebner import buchberger

    Qt = buchberger([q.change_ring(S, list(range(1, ring.nvars + 1))) for q in ring.relations], ring=S)
    return not Qt.reduce(val)


def test_rees_examples():
    P = rees_ideal(R.ideal("x", "y"))
    T = P.ring
    assert len(P.kernel) == 1
    g = P.kernel[0]
    assert g == T("x*T2 - y*T1") or g == T("y*T1 - x*T2")
    assert rees_ideal(R.ideal("x")).kernel == []
    P = rees_ideal(R.ideal("x^2", "x*y", "y^2"))
    from redcore.groebner import buchberger

    K = buchberger(P.kernel, ring=P.ring)
    for rel in ("T1*T3 - T2^2", "x*T2 - y*T1", "x*T3 - y*T2"):
        assert K.contains(P.ring(rel))


@pytest.mark.parametrize("gens", [("x", "y"), ("x^2", "x*y", "y^2"), MAIN, ("x^3", "x*y", "y^2 + x^2")])
def test_rees_kernel_vanishes(gens):
    P = rees_ideal(R.ideal(*gens))
    for g in P.kernel:
        assert _vanishes(P, g)


def test_rees_kernel_vanishes_in_cusp():
    P = rees_ideal(CUSP.maximal_ideal())
    assert P.kernel
    for g in P.kernel:
        assert _vanishes(P, g)


def test_linear_type_examples():
    assert is_linear_type(rees_ideal(R.ideal("x", "y")))
    assert is_linear_type(rees_ideal(R.ideal("x")))
    assert not is_linear_type(rees_ideal(R.ideal("x^2", "x*y", "y^2")))


def test_analytic_spread_examples():
    assert analytic_spread(R.ideal("x", "y")) == 2
    assert analytic_spread(R.ideal("x")) == 1
    assert analytic_spread(CUSP.maximal_ideal()) == 1
    assert analytic_spread(R.ideal(*MAIN)) == 2
    # height-one ideal with two generators: fiber cone k[T1, T2]
    assert analytic_spread(R.ideal("x^2", "x*y")) == 2
    assert fiber_cone_relations(rees_ideal(R.ideal("x^2", "x*y", "y^2")))


@settings(max_examples=8)
@given(m_primary_monomial(2, 5, extra=2))
def test_analytic_spread_of_m_primary_is_dim(exps):
    I = Ideal(R, [R.poly_ring.monomial(e) for e in exps])
    assert analytic_spread(I) == 2


def test_graded_hilbert_examples():
    assert graded_hilbert(R.ideal("x", "y"), 4).hilbert == [1, 2, 3, 4, 5]
    assert graded_hilbert(R.ideal("x^2", "x*y", "y^2"), 5).hilbert == [4 * i + 3 for i in range(6)]
    assert graded_hilbert(R.ideal("x^2", "y^3"), 0).hilbert == [6]


@pytest.mark.parametrize("gens", [("x^2", "y^3"), ("x^3", "x*y", "y^4"), ("x^4", "x^3*y", "x*y^3", "y^4")])
def test_hilbert_eventually_linear(gens):
    I = R.ideal(*gens)
    (s,) = sample_reductions(I, Options(seed=1), 1)
    hf = graded_hilbert(I, s.r_J + 5).hilbert
    assert all(h >= 0 for h in hf)
    second = [hf[i + 2] - 2 * hf[i + 1] + hf[i] for i in range(len(hf) - 2)]
    assert all(v == 0 for v in second[s.r_J + 2:])


def test_h_vector():
    assert h_vector([3, 7, 11, 15], 2) == [3, 1, 0, 0]
    assert h_vector([1, 2, 3], 2) == [1, 0, 0]


def _sample(I, seed=0):
    (s,) = sample_reductions(I, Options(seed=seed), 1)
    return s


def test_valabrega_valla_examples():
    m = R.maximal_ideal()
    assert valabrega_valla(m, m, 0)
    I = R.ideal("x^2", "x*y", "y^2")
    assert valabrega_valla(I, R.ideal("x^2", "y^2"), 1)
    P = R.ideal(*MAIN)
    s = _sample(P)
    assert s.r_J == 4
    assert not valabrega_valla(P, s.J, s.r_J)


@pytest.mark.parametrize("gens", [("x", "y"), ("x^2", "x*y", "y^2"), ("x^3", "y^2"), MAIN])
def test_valabrega_valla_vacuous_range(gens):
    I = R.ideal(*gens)
    assert valabrega_valla(I, _sample(I).J, 0)


def test_depth_positive_examples():
    rng = random.Random(1)
    for gens in (("x", "y"), ("x^2", "x*y", "y^2")):
        I = R.ideal(*gens)
        s = _sample(I)
        assert depth_positive(I, s.J, 3, rng, s.r_J) == TriState.YES


def test_depth_probe_detects_depth_zero():
    # x^2 y^2 lies in I^2 : I but not in I, so depth gr = 0
    I = R.ideal("x^4", "x^3*y", "x*y^3", "y^4")
    s = _sample(I)
    assert depth_positive(I, s.J, 4, random.Random(2), s.r_J) == TriState.NO_STATISTICAL


def test_a_invariant_examples():
    m = R.maximal_ideal()
    assert a_invariant_cm(m, m, 0, 2) == -2
    I = R.ideal("x^2", "x*y", "y^2")
    assert a_invariant_cm(I, R.ideal("x^2", "y^2"), 1, 2) == -1
    P = R.ideal(*MAIN)
    s = _sample(P)
    with pytest.raises(HypothesisRefused):
        a_invariant_cm(P, s.J, s.r_J, 2)


def test_a_invariant_cusp():
    m = CUSP.maximal_ideal()
    s = _sample(m)
    assert a_invariant_cm(m, s.J, s.r_J, 1) == 0
