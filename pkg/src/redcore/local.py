"""Localization at the origin.

An ideal A whose localization A R_m is m-primary is represented by
A + Q + m^N with N minimal such that m^N lies in A R_m.  Once m^N is
inside, A + m^N is exactly the m-primary component of A, so its reduced
Groebner basis is a canonical form that can be compared verbatim.

Stability test used by :func:`localize`: m^K ⊆ A + Q + m^(K+1) forces
m^K ⊆ A R_m (Nakayama), so no primary decomposition is ever needed.
"""

from __future__ import annotations

from functools import cached_property

from .errors import NotMPrimaryLocally
from .groebner import GroebnerBasis, Truncation, buchberger
from .ideals import Ideal, RingDescriptor, _known_bound, ideal_sum, quotient
from .linalg import sparse_kernel
from .polyring import PolyRing, Polynomial, elimination_order, DegRevLex

DEFAULT_SEARCH_BOUND = 200


class LocalIdeal:
    """Canonical local form ``base + Q + m^N`` of an m-primary (or unit) localization."""

    def __init__(self, ring: RingDescriptor, canonical: GroebnerBasis, N: int, base: Ideal | None = None):
        self.ring = ring
        self.canonical = canonical
        self.N = N
        self.base = base

    @property
    def is_unit(self) -> bool:
        return self.N == 0

    @property
    def generators(self) -> list[Polynomial]:
        return list(self.canonical.polys)

    @cached_property
    def staircase(self) -> list[tuple[int, ...]]:
        """Standard monomials: a k-basis of R_m / L."""
        if self.is_unit:
            return []
        return self.canonical.standard_monomials()

    @property
    def colength(self) -> int:
        return len(self.staircase)

    def contains(self, f) -> bool:
        return self.canonical.contains(self.ring.poly(f))

    def reduce(self, f: Polynomial) -> Polynomial:
        return self.canonical.reduce(f)

    def issubset(self, other: "LocalIdeal") -> bool:
        return all(other.contains(g) for g in self.generators)

    def __le__(self, other):
        return self.issubset(other)

    def __eq__(self, other):
        return isinstance(other, LocalIdeal) and self.ring == other.ring and self.canonical == other.canonical

    def __hash__(self):
        return hash(self.canonical)

    def __repr__(self):
        return f"LocalIdeal(N={self.N}, ({', '.join(self.generator_strings())}))"

    def generator_strings(self) -> list[str]:
        return [str(g) for g in self.generators]

    def is_monomial(self) -> bool:
        return all(len(g) == 1 for g in self.generators)

    def as_ideal(self) -> Ideal:
        A = Ideal(self.ring, self.generators, local_bound=self.N)
        A._local = self
        return A


def _unit(ring: RingDescriptor, base=None) -> LocalIdeal:
    G = GroebnerBasis(ring.poly_ring, [ring.poly_ring.one])
    return LocalIdeal(ring, G, 0, base)


def _allvars(ring: RingDescriptor) -> tuple[int, ...]:
    return tuple(range(ring.nvars))


def truncated_gb(gens, ring: RingDescriptor, T: int, degree_cap=None) -> GroebnerBasis:
    """Reduced Groebner basis of (gens) + Q + m^T."""
    polys = [g for g in list(gens) + list(ring.relations) if g]
    return buchberger(polys, ring=ring.poly_ring, truncation=Truncation(T, _allvars(ring)), degree_cap=degree_cap)


def _layer_inside(G: GroebnerBasis, K: int) -> bool:
    """Every monomial of degree K reduces to zero modulo G."""
    pr = G.ring
    return all(not G.reduce(pr.monomial(e)) for e in pr.monomials_of_degree(K))


def _exact_N(G: GroebnerBasis, T: int) -> int:
    """Least N with m^N inside (G), given m^T is.  Leading terms alone only bound it below."""
    if G.is_unit():
        return 0
    K = 1 + max(sum(e) for e in G.standard_monomials())
    while K < T and not _layer_inside(G, K):
        K += 1
    return K


def _finish(ring, G, base, T) -> LocalIdeal:
    N = _exact_N(G, T)
    if N == 0:
        return _unit(ring, base)
    G.trunc = Truncation(N, _allvars(ring))
    return LocalIdeal(ring, G, N, base)


def is_local_unit(A: Ideal) -> bool:
    """A R_m = R_m iff some generator does not vanish at the origin."""
    return any(g.constant_coeff() for g in A.generators)


def localize(A: Ideal, bound: int = DEFAULT_SEARCH_BOUND, degree_cap=None) -> LocalIdeal:
    """Canonical local form of A; raises NotMPrimaryLocally if none exists below ``bound``."""
    if A._local is not None:
        return A._local
    ring = A.ring
    if is_local_unit(A):
        A._local = _unit(ring, A)
        return A._local
    T = A.local_bound
    if T is not None:
        if T == 0:
            A._local = _unit(ring, A)
            return A._local
        A._local = _finish(ring, truncated_gb(A.generators, ring, T, degree_cap), A, T)
        return A._local
    orders = [g.order_at_origin() for g in A.generators if g]
    K = max(1, min(orders)) if orders else 1
    while True:
        K = min(K, bound)
        G = truncated_gb(A.generators, ring, K + 1, degree_cap)
        if G.is_unit() or _layer_inside(G, K):
            A._local = _finish(ring, G, A, K + 1)
            return A._local
        if K >= bound:
            raise NotMPrimaryLocally(
                f"no m^N with N <= {bound} lies in the localization of {A!r}"
            )
        K *= 2


def local_contains(A: Ideal, f) -> bool:
    """f ∈ A R_m.  Uses the canonical form when A is known m-primary, the colon test otherwise."""
    f = A.ring.poly(f)
    if A._local is not None or A.local_bound is not None:
        return localize(A).contains(f)
    if not f:
        return True
    C = quotient(A, Ideal(A.ring, [f]))
    return any(g.constant_coeff() for g in C.generators)


def local_equal(A: Ideal, B: Ideal) -> bool:
    return localize(A) == localize(B)


def local_subset(A: Ideal, B: Ideal) -> bool:
    if B._local is None:
        localize(B)
    return all(local_contains(B, a) for a in A.generators)


def colength(L) -> int:
    if isinstance(L, Ideal):
        L = localize(L)
    return L.colength


def local_sum(A: Ideal, B: Ideal) -> LocalIdeal:
    localize(A), localize(B)
    return localize(ideal_sum(A, B))


def local_quotient(A, B: Ideal | list) -> LocalIdeal:
    """(A : B) R_m, computed by linear algebra on the finite quotient.

    With m^N ⊆ A R_m and o the least order of a generator of B,
    m^(N-o) ⊆ A : B, so only standard monomials of A + m^(N-o) can carry new
    colon elements; those are found as the kernel of f -> (NF_A(f b_j))_j.
    """
    LA = A if isinstance(A, LocalIdeal) else localize(A)
    ring = LA.ring
    bgens = B.nonzero_generators() if isinstance(B, Ideal) else [ring.poly(b) for b in B if b]
    if not bgens:
        raise ValueError("colon by the zero ideal")
    if LA.is_unit:
        return _unit(ring)
    if any(b.constant_coeff() for b in bgens):
        return LA
    o = min(b.order_at_origin() for b in bgens)
    Tp = LA.N - o
    if Tp <= 0:
        return _unit(ring)
    small = truncated_gb(LA.generators, ring, Tp)
    if small.is_unit():
        return _unit(ring)
    stair = small.standard_monomials()
    pr = ring.poly_ring
    enc = pr.order.encode
    nf_cache: dict[int, dict] = {}

    def nf_monomial(key: int) -> dict:
        r = nf_cache.get(key)
        if r is None:
            r = LA.canonical.reduce(Polynomial(pr, {key: pr.domain.one})).raw
            nf_cache[key] = r
        return r

    mod = pr.domain.characteristic
    columns = []
    for s in stair:
        sk = enc(s)
        col: dict = {}
        for j, b in enumerate(bgens):
            for bk, bc in b.raw.items():
                for k, c in nf_monomial(sk + bk).items():
                    row = (j, k)
                    v = col.get(row, 0) + bc * c
                    if mod:
                        v %= mod
                    if v:
                        col[row] = v
                    else:
                        col.pop(row, None)
        columns.append(col)
    kernel = sparse_kernel(columns, pr.domain)
    extra = []
    for comb in kernel:
        extra.append(Polynomial(pr, {enc(stair[i]): c for i, c in comb.items()}))
    out = Ideal(ring, small.polys + extra, local_bound=Tp)
    return localize(out)


def local_intersect(A, B) -> LocalIdeal:
    """(A ∩ B) R_m via t*A + (1-t)*B, eliminating t modulo m^T (T = max N)."""
    LA = A if isinstance(A, LocalIdeal) else localize(A)
    LB = B if isinstance(B, LocalIdeal) else localize(B)
    ring = LA.ring
    if LA.is_unit:
        return LB
    if LB.is_unit:
        return LA
    T = max(LA.N, LB.N)
    d = ring.nvars
    big = PolyRing(["_t"] + list(ring.names), ring.domain, elimination_order(1, DegRevLex(d)))
    emb = list(range(1, d + 1))
    t = big.gen(0)
    polys = [t * g.change_ring(big, emb) for g in LA.generators]
    polys += [(big.one - t) * g.change_ring(big, emb) for g in LB.generators]
    G = buchberger(polys, ring=big, truncation=Truncation(T, tuple(emb)))
    out = []
    for g in G:
        if all(e[0] == 0 for e in g.monomials()):
            out.append(g.change_ring(ring.poly_ring, [None] + list(range(d))))
    return localize(Ideal(ring, out, local_bound=T))


def local_power(A: Ideal, n: int) -> LocalIdeal:
    from .ideals import power

    localize(A)
    return localize(power(A, n))


def local_product(A: Ideal, B: Ideal) -> LocalIdeal:
    from .ideals import product

    localize(A), localize(B)
    return localize(product(A, B))
