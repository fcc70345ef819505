"""Rees algebra, fiber cone and associated graded ring of an ideal."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from enum import Enum
from math import comb

from .errors import HypothesisRefused
from .groebner import buchberger
from .ideals import Ideal, RingDescriptor, _krull_dim_of_gb, cached_power, ideal_sum, product
from .local import localize
from .polyring import BlockOrder, DegRevLex, PolyRing, Polynomial, elimination_order


class TriState(str, Enum):
    YES = "yes"
    NO = "no"
    NO_STATISTICAL = "no(statistical)"
    UNKNOWN = "unknown"

    def __str__(self):
        return self.value


@dataclass
class ReesPresentation:
    """Defining ideal K of R[It] inside R[T_1..T_n] (T-block first, T-degree compatible)."""

    ideal: Ideal
    generators: tuple[Polynomial, ...]
    ring: PolyRing
    kernel: list[Polynomial]
    tvars: int

    def t_degree(self, f: Polynomial) -> int:
        return max(sum(e[: self.tvars]) for e in f.monomials())


@dataclass
class GradedProfile:
    hilbert: list[int]
    ell: int | None = None
    gr_cm: TriState = TriState.UNKNOWN
    depth_positive: TriState = TriState.UNKNOWN
    a_invariant: int | None = None
    h_vector: list[int] = field(default_factory=list)


def _fresh(names, taken):
    out = list(names)
    while any(n in taken for n in out):
        out = ["_" + n for n in out]
    return out


def rees_ideal(I: Ideal) -> ReesPresentation:
    """Eliminate t from (T_i - t f_i) + Q in R[t, T]."""
    cached = getattr(I, "_rees", None)
    if cached is not None:
        return cached
    ring = I.ring
    gens = tuple(I.nonzero_generators())
    n, d = len(gens), ring.nvars
    tnames = _fresh([f"T{i + 1}" for i in range(n)], ring.names)
    (aux,) = _fresh(["t"], set(ring.names) | set(tnames))
    inner = BlockOrder(DegRevLex(n), DegRevLex(d))
    target = PolyRing(tnames + list(ring.names), ring.domain, inner)
    big = PolyRing([aux] + tnames + list(ring.names), ring.domain, elimination_order(1, inner))
    t = big.gen(0)
    xmap = list(range(1 + n, 1 + n + d))
    polys = [big.gen(1 + i) - t * f.change_ring(big, xmap) for i, f in enumerate(gens)]
    polys += [q.change_ring(big, xmap) for q in ring.relations]
    G = buchberger(polys, ring=big)
    kernel = []
    for g in G:
        if all(e[0] == 0 for e in g.monomials()):
            kernel.append(g.change_ring(target, [None] + list(range(n + d))))
    P = ReesPresentation(I, gens, target, kernel, n)
    I._rees = P
    return P


def is_linear_type(P: ReesPresentation) -> bool:
    """True iff K is generated by its elements of T-degree one."""
    linear = [g for g in P.kernel if P.t_degree(g) <= 1]
    rest = [g for g in P.kernel if P.t_degree(g) > 1]
    if not rest:
        return True
    if not linear:
        return False
    L = buchberger(linear, ring=P.ring)
    return all(L.contains(g) for g in rest)


def fiber_cone_relations(P: ReesPresentation) -> list[Polynomial]:
    """Generators of K + m restricted to k[T] (set every x to zero)."""
    n = P.tvars
    fr = PolyRing(P.ring.names[:n], P.ring.domain)
    out = []
    for g in P.kernel:
        terms = {e[:n]: c for e, c in g.to_dict().items() if not any(e[n:])}
        if terms:
            out.append(fr.from_dict(terms))
    return out


def analytic_spread(I: Ideal) -> int:
    """Krull dimension of the special fiber ring R[It]/m R[It]."""
    cached = getattr(I, "_ell", None)
    if cached is not None:
        return cached
    P = rees_ideal(I)
    rels = fiber_cone_relations(P)
    if not rels:
        ell = P.tvars
    else:
        ell = _krull_dim_of_gb(buchberger(rels))
    I._ell = ell
    return ell


def graded_hilbert(I: Ideal, n_max: int) -> GradedProfile:
    """HF(i) = length(I^i / I^(i+1)) for 0 <= i <= n_max (from local colengths)."""
    localize(I)
    col = [0]
    for i in range(1, n_max + 2):
        col.append(localize(cached_power(I, i)).colength)
    return GradedProfile(hilbert=[col[i + 1] - col[i] for i in range(n_max + 1)])


def h_vector(hilbert: list[int], dim: int) -> list[int]:
    """Coefficients of (1 - t)^dim * sum HF(i) t^i, valid up to len(hilbert) - 1."""
    out = []
    for k in range(len(hilbert)):
        s = 0
        for i in range(0, min(dim, k) + 1):
            s += (-1) ** i * comb(dim, i) * hilbert[k - i]
        out.append(s)
    return out


def _intersection_colength(A: Ideal, B: Ideal) -> int:
    # 0 -> R/(A∩B) -> R/A ⊕ R/B -> R/(A+B) -> 0
    return localize(A).colength + localize(B).colength - localize(ideal_sum(A, B)).colength


def valabrega_valla(I: Ideal, J: Ideal, rJ: int) -> bool:
    """gr_I(R) is Cohen-Macaulay iff I^n ∩ J = J I^(n-1) for 2 <= n <= rJ.

    J I^(n-1) ⊆ I^n ∩ J always, so equality is decided by colengths.
    """
    localize(I), localize(J)
    for n in range(2, rJ + 1):
        In = cached_power(I, n)
        localize(In)
        JI = product(J, localize_power(I, n - 1))
        if localize(JI).colength != _intersection_colength(In, J):
            return False
    return True


def localize_power(I: Ideal, n: int) -> Ideal:
    P = cached_power(I, n)
    localize(P)
    return P


def general_element(I: Ideal, rng: random.Random, height: int = 1000) -> Polynomial:
    gens = I.nonzero_generators()
    acc = I.ring.poly_ring.zero
    for g in gens:
        acc = acc + g * rng.randint(-height, height)
    return acc


def depth_positive(I: Ideal, J: Ideal | None, samples: int, rng: random.Random, rJ: int | None = None,
                   height: int = 1000) -> TriState:
    """Probe depth gr_I(R) >= 1 with general elements a of I.

    ``yes`` if some a has I^(n+1) : a = I^n for 0 <= n <= rJ + 2 (its initial form
    is then regular on gr in that range); ``no(statistical)`` if every sample fails.
    """
    if rJ is None:
        from .reductions import reduction_number

        rJ = reduction_number(I, J)
    localize(I)
    for _ in range(samples):
        a = general_element(I, rng, height)
        if not a:
            continue
        ok = True
        for n in range(0, rJ + 3):
            P1 = localize_power(I, n + 1)
            Pn = localize_power(I, n) if n else None
            with_a = ideal_sum(P1, Ideal(I.ring, [a]))
            colon_len = localize(P1).colength - localize(with_a).colength
            base_len = localize(Pn).colength if Pn is not None else 0
            # I^n ⊆ I^(n+1) : a, so equal colengths mean equality
            if colon_len != base_len:
                ok = False
                break
        if ok:
            return TriState.YES
    return TriState.NO_STATISTICAL


def a_invariant_cm(I: Ideal, J: Ideal, rJ: int, ell: int, cm: bool | None = None) -> int:
    """a(gr_I(R)) = rJ - ell, valid only when gr_I(R) is Cohen-Macaulay.

    Cross-checked against the Hilbert series: deg h(t) - dim must agree.
    """
    if cm is None:
        cm = valabrega_valla(I, J, rJ)
    if not cm:
        raise HypothesisRefused("a-invariant formula needs gr_I(R) Cohen-Macaulay")
    a = rJ - ell
    d = I.ring.dim
    prof = graded_hilbert(I, rJ + d + 1)
    h = h_vector(prof.hilbert, d)
    deg = max((k for k, v in enumerate(h) if v), default=0)
    if deg - d != a:
        raise AssertionError(f"Hilbert series a-invariant {deg - d} disagrees with rJ - ell = {a}")
    return a
