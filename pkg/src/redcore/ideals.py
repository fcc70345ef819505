"""Ideals of R = k[x_1..x_d]/(Q) and their global arithmetic.

Every ideal is handled through its preimage in k[x]: predicates on an ideal
``A`` are evaluated on ``A + Q``.
"""

from __future__ import annotations

from functools import cached_property
from itertools import combinations, combinations_with_replacement

from .errors import HypothesisRefused
from .groebner import GroebnerBasis, buchberger
from .polyring import (
    AmbientMismatch,
    DegRevLex,
    PolyRing,
    Polynomial,
    domain_for_characteristic,
    elimination_order,
)


class RingDescriptor:
    """The coefficient ring ``k[names]/(relations)`` localized (later) at the origin.

    ``complete_intersection`` asserts that the relations form a regular
    sequence; it is checked by the dimension count ``len(Q) = d - dim R``.
    With no relations the flag defaults to true.
    """

    def __init__(self, names, characteristic: int = 0, relations=(), complete_intersection: bool | None = None):
        if isinstance(names, str):
            names = tuple(names.replace(",", " ").split()) if ("," in names or " " in names) else tuple(names)
        self.names = tuple(names)
        self.characteristic = int(characteristic)
        self.domain = domain_for_characteristic(self.characteristic)
        self.poly_ring = PolyRing(self.names, self.domain)
        rels = []
        for r in relations:
            p = self.poly(r)
            if p.constant_coeff():
                raise ValueError(f"relation {p} has a nonzero constant term; the origin must lie on V(Q)")
            if p:
                rels.append(p)
        self.relations = tuple(rels)
        if complete_intersection is None:
            complete_intersection = not self.relations
        self.complete_intersection = bool(complete_intersection)
        if self.complete_intersection and self.relations:
            dim = _krull_dim_of_gb(self._relations_gb)
            if len(self.relations) != len(self.names) - dim:
                raise ValueError(
                    f"relations are not a regular sequence: {len(self.relations)} relations "
                    f"but codimension {len(self.names) - dim}"
                )

    @cached_property
    def _relations_gb(self) -> GroebnerBasis:
        return buchberger(list(self.relations), ring=self.poly_ring)

    def __eq__(self, other):
        return (
            isinstance(other, RingDescriptor)
            and self.names == other.names
            and self.characteristic == other.characteristic
            and self._relations_gb == other._relations_gb
        )

    def __hash__(self):
        return hash((self.names, self.characteristic, len(self.relations)))

    def __repr__(self):
        rel = f" / ({', '.join(map(str, self.relations))})" if self.relations else ""
        k = "QQ" if self.characteristic == 0 else f"GF({self.characteristic})"
        return f"{k}[{', '.join(self.names)}]{rel}"

    @property
    def nvars(self) -> int:
        return len(self.names)

    def poly(self, value) -> Polynomial:
        return self.poly_ring(value)

    @cached_property
    def dim(self) -> int:
        """Krull dimension of R (equal to dim R_m for complete intersections)."""
        return _krull_dim_of_gb(self._relations_gb) if self.relations else self.nvars

    def ideal(self, *generators) -> "Ideal":
        if len(generators) == 1 and isinstance(generators[0], (list, tuple)):
            generators = generators[0]
        return Ideal(self, generators)

    def maximal_ideal(self) -> "Ideal":
        return Ideal(self, self.poly_ring.gens)


class Ideal:
    """A finitely generated ideal; the generator list is kept verbatim.

    ``local_bound`` (optional) records a known T with m^T contained in the
    localization at the origin; local routines use it to truncate.
    """

    def __init__(self, ring: RingDescriptor, generators=(), *, local_bound: int | None = None):
        self.ring = ring
        self.generators = tuple(ring.poly(g) for g in generators)
        self.local_bound = local_bound
        self._local = None
        self._powers: dict[int, Ideal] = {1: self}

    def __repr__(self):
        return f"Ideal({', '.join(str(g) for g in self.generators)})"

    def __len__(self):
        return len(self.generators)

    @cached_property
    def gb(self) -> GroebnerBasis:
        """Reduced Groebner basis of generators + Q in k[x] (degrevlex)."""
        return buchberger(list(self.generators) + list(self.ring.relations), ring=self.ring.poly_ring)

    def nonzero_generators(self) -> list[Polynomial]:
        return [g for g in self.generators if g]

    def is_monomial(self) -> bool:
        return not self.ring.relations and all(len(g) == 1 for g in self.generators)

    def __add__(self, other):
        return ideal_sum(self, other)

    def __mul__(self, other):
        return product(self, other)

    def __pow__(self, n):
        return power(self, n)

    def __contains__(self, f):
        return contains(self, self.ring.poly(f))


def _same_ring(A: Ideal, B: Ideal):
    if A.ring is not B.ring and A.ring != B.ring:
        raise AmbientMismatch("ideals live in different rings")


def _known_bound(A: Ideal) -> int | None:
    if A._local is not None:
        return A._local.N
    return A.local_bound


def interreduce_monomials(polys: list[Polynomial]) -> list[Polynomial]:
    """Minimal monic monomial generators (drop those divisible by another)."""
    ring = polys[0].ring if polys else None
    mons = sorted({p.lm for p in polys if p}, key=sum)
    keep: list[tuple] = []
    for e in mons:
        if not any(all(a <= b for a, b in zip(u, e)) for u in keep):
            keep.append(e)
    return [ring.monomial(e) for e in sorted(keep, reverse=True)]


def ideal_sum(A: Ideal, B: Ideal) -> Ideal:
    _same_ring(A, B)
    ba, bb = _known_bound(A), _known_bound(B)
    bound = min(x for x in (ba, bb) if x is not None) if (ba is not None or bb is not None) else None
    return Ideal(A.ring, A.generators + B.generators, local_bound=bound)


def product(A: Ideal, B: Ideal) -> Ideal:
    _same_ring(A, B)
    gens = []
    seen = set()
    for a in A.generators:
        for b in B.generators:
            p = a * b
            if p and p not in seen:
                seen.add(p)
                gens.append(p)
    if A.is_monomial() and B.is_monomial() and gens:
        gens = interreduce_monomials(gens)
    ba, bb = _known_bound(A), _known_bound(B)
    bound = ba + bb if ba is not None and bb is not None else None
    return Ideal(A.ring, gens, local_bound=bound)


def power(I: Ideal, n: int) -> Ideal:
    """I^n generated by all degree-n products of the generators."""
    if n < 0:
        raise ValueError("negative power")
    if n == 0:
        return Ideal(I.ring, [I.ring.poly_ring.one], local_bound=0)
    gens = I.nonzero_generators()
    out = []
    seen = set()
    cache: dict[tuple[int, int], Polynomial] = {}

    def pw(i, e):
        if (i, e) not in cache:
            cache[(i, e)] = gens[i] ** e
        return cache[(i, e)]

    for combo in combinations_with_replacement(range(len(gens)), n):
        p = I.ring.poly_ring.one
        counts: dict[int, int] = {}
        for i in combo:
            counts[i] = counts.get(i, 0) + 1
        for i, e in counts.items():
            p = p * pw(i, e)
        if p and p not in seen:
            seen.add(p)
            out.append(p)
    if I.is_monomial() and out:
        out = interreduce_monomials(out)
    b = _known_bound(I)
    return Ideal(I.ring, out, local_bound=None if b is None else n * b)


def cached_power(I: Ideal, n: int) -> Ideal:
    """I^n memoized on I, built as I^(n-1) * I so that local bounds propagate.

    The generating set coincides with the combinatorial expansion of :func:`power`.
    """
    if n == 0:
        return Ideal(I.ring, [I.ring.poly_ring.one], local_bound=0)
    P = I._powers.get(n)
    if P is None:
        prev = cached_power(I, n - 1)
        if I._local is not None and prev._local is None and n - 1 > 1:
            from .local import localize

            localize(prev)
        P = product(prev, I) if n > 1 else I
        I._powers[n] = P
    return P


def _aux_ring(ring: RingDescriptor, aux: list[str]) -> PolyRing:
    names = [a for a in aux]
    while any(a in ring.names for a in names):
        names = ["_" + a for a in names]
    return PolyRing(names + list(ring.names), ring.domain, elimination_order(len(names), DegRevLex(ring.nvars)))


def eliminate_polys(polys: list[Polynomial], variables, truncation=None) -> list[Polynomial]:
    """Generators of (polys) intersected with the subring without ``variables``.

    Returns polynomials in a degrevlex ring on the remaining variables.
    """
    from .groebner import Truncation

    ring = polys[0].ring
    elim = [ring.names.index(v) if isinstance(v, str) else v for v in variables]
    rest = [i for i in range(ring.nvars) if i not in elim]
    if not elim:
        return list(polys)
    names = [ring.names[i] for i in elim] + [ring.names[i] for i in rest]
    big = PolyRing(names, ring.domain, elimination_order(len(elim), DegRevLex(len(rest))))
    perm = {old: new for new, old in enumerate(elim + rest)}
    moved = [p.change_ring(big, [perm[i] for i in range(ring.nvars)]) for p in polys]
    G = buchberger(moved, ring=big, truncation=truncation)
    target = PolyRing([ring.names[i] for i in rest], ring.domain)
    keep = []
    for g in G:
        if all(e[j] == 0 for e in g.monomials() for j in range(len(elim))):
            keep.append(g.change_ring(target, [None] * len(elim) + list(range(len(rest)))))
    return keep


def eliminate(A: Ideal, variables) -> Ideal:
    """A (with Q) intersected with the subring free of ``variables``."""
    names = [v if isinstance(v, str) else A.ring.names[v] for v in variables]
    rest = [n for n in A.ring.names if n not in names]
    gens = list(A.generators) + list(A.ring.relations)
    gens = [g for g in gens if g]
    sub = RingDescriptor(rest, A.ring.characteristic)
    if not names:
        return Ideal(sub, [g.change_ring(sub.poly_ring) for g in gens])
    if not gens:
        return Ideal(sub, [])
    out = eliminate_polys(gens, names)
    return Ideal(sub, [g.change_ring(sub.poly_ring) for g in out])


def _intersect_polys(ring: RingDescriptor, ga: list[Polynomial], gb: list[Polynomial]) -> list[Polynomial]:
    """(ga) ∩ (gb) in k[x]; t*(ga) + (1-t)*(gb) with t eliminated."""
    big = _aux_ring(ring, ["t"])
    emb = list(range(1, big.nvars))
    t = big.gen(0)
    polys = [t * g.change_ring(big, emb) for g in ga] + [(big.one - t) * g.change_ring(big, emb) for g in gb]
    G = buchberger(polys, ring=big)
    out = []
    for g in G:
        if all(e[0] == 0 for e in g.monomials()):
            out.append(g.change_ring(ring.poly_ring, [None] + list(range(ring.nvars))))
    return out


def intersect(A: Ideal, B: Ideal) -> Ideal:
    """A ∩ B in R, computed on the preimages A + Q and B + Q."""
    _same_ring(A, B)
    ring = A.ring
    ga = [g for g in A.generators + ring.relations if g]
    gb = [g for g in B.generators + ring.relations if g]
    if not ga or not gb:
        return Ideal(ring, list(ring.relations))
    return Ideal(ring, _intersect_polys(ring, ga, gb))


def exact_divide(h: Polynomial, b: Polynomial) -> Polynomial:
    """h / b when b divides h exactly in k[x]."""
    ring = h.ring
    q = ring.zero
    r = h
    inv = ring.domain.inv(b.lc)
    while r:
        if not all(a <= c for a, c in zip(b.lm, r.lm)):
            raise ValueError("division is not exact")
        k = r.lm_key - b.lm_key
        coeff = r.lc * inv
        q = q + Polynomial(ring, {k: coeff})
        r = r - b.mul_term(k, coeff)
    return q


def quotient(A: Ideal, B: Ideal) -> Ideal:
    """A : B = ∩_i (A : b_i); in k[x], (A + Q) : b = ((A + Q) ∩ (b)) / b."""
    _same_ring(A, B)
    gens = B.nonzero_generators()
    if not gens:
        raise ValueError("colon by the zero ideal")
    ring = A.ring
    ga = [g for g in A.generators + ring.relations if g]
    result = None
    for b in gens:
        if not ga:
            part = Ideal(ring, list(ring.relations))
        else:
            part = Ideal(ring, [exact_divide(h, b) for h in _intersect_polys(ring, ga, [b])])
        result = part if result is None else intersect(result, part)
    return result


def saturate(A: Ideal, B: Ideal, max_steps: int = 1000) -> Ideal:
    """A : B^infinity, detected as a stable colon chain."""
    cur = A
    for _ in range(max_steps):
        nxt = quotient(cur, B)
        if nxt.gb == cur.gb:
            return nxt
        cur = nxt
    raise RuntimeError("saturation did not stabilize")


def contains(A: Ideal, f: Polynomial) -> bool:
    if f.ring != A.ring.poly_ring:
        raise AmbientMismatch("polynomial not in the ideal's ring")
    return A.gb.contains(f)


def equal(A: Ideal, B: Ideal) -> bool:
    _same_ring(A, B)
    return A.gb == B.gb


def subset(A: Ideal, B: Ideal) -> bool:
    _same_ring(A, B)
    return all(B.gb.contains(g) for g in A.generators)


def _krull_dim_of_gb(G: GroebnerBasis) -> int:
    if G.is_unit():
        return -1
    n = G.ring.nvars
    supports = [frozenset(i for i, e in enumerate(u) if e) for u in G.leading_monomials]
    for size in range(n, -1, -1):
        for S in combinations(range(n), size):
            s = frozenset(S)
            if not any(sup <= s for sup in supports):
                return size
    return 0


def krull_dim(A: Ideal) -> int:
    """dim R/(A + Q) from maximal independent sets of the leading ideal; -1 for the unit ideal."""
    return _krull_dim_of_gb(A.gb)


def height(A: Ideal) -> int:
    if not A.ring.complete_intersection:
        raise HypothesisRefused(
            "height needs R to be a complete intersection (set the regular-sequence flag)"
        )
    d = krull_dim(A)
    if d < 0:
        raise HypothesisRefused("height of the unit ideal is undefined")
    return A.ring.dim - d
