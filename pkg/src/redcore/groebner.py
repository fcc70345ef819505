"""Buchberger's algorithm with Gebauer-Moeller pair elimination.

The engine optionally works modulo a truncation ideal ``m^T`` (all monomials of
total degree ``T`` in a block of variables).  Terms inside that monomial ideal
are dropped as soon as they appear, so Groebner bases of ``A + m^T`` are
computed without ever materialising the degree-``T`` monomials until the end.
This is what keeps m-primary (local) computations bounded.
"""

from __future__ import annotations

import heapq
import itertools
import math
from contextlib import contextmanager
from contextvars import ContextVar
from dataclasses import dataclass, field

import flint
from gmpy2 import mpq

from .errors import DegreeCapExceeded, NotZeroDimensional
from .polyring import BlockOrder, DegRevLex, PolyRing, Polynomial
from .polyring.orders import FIELD_BITS, FIELD_MASK


_DEGREE_CAP: ContextVar[int | None] = ContextVar("degree_cap", default=None)


@contextmanager
def degree_cap_scope(cap: int | None):
    """Apply ``cap`` to every Groebner computation in the block that does not set its own."""
    token = _DEGREE_CAP.set(cap)
    try:
        yield
    finally:
        _DEGREE_CAP.reset(token)


@dataclass(frozen=True)
class Truncation:
    """The monomial ideal generated by degree-``degree`` monomials in ``variables``."""

    degree: int
    variables: tuple[int, ...]

    def subdegree(self, exps) -> int:
        return sum(exps[i] for i in self.variables)


def _dead_test(order, trunc: Truncation | None):
    """Return ``(off, bound, fn)``; a key k is dead iff the test fires.

    When the truncated degree is a packed field, ``(k >> off) & FIELD_MASK >= bound``
    is used inline; otherwise ``fn(k)`` decides.
    """
    if trunc is None:
        return None, None, None
    T = trunc.degree
    n = order.nvars
    allvars = tuple(range(n))
    if isinstance(order, DegRevLex) and trunc.variables == allvars:
        return FIELD_BITS * (order.nfields - 1), T, None
    if (
        isinstance(order, BlockOrder)
        and isinstance(order.second, DegRevLex)
        and trunc.variables == tuple(range(order.split, n))
    ):
        return FIELD_BITS * (order.second.nfields - 1), T, None
    dec = order.decode
    vs = trunc.variables
    cache: dict[int, bool] = {}

    def fn(k):
        r = cache.get(k)
        if r is None:
            e = dec(k)
            r = cache[k] = sum(e[i] for i in vs) >= T
        return r

    return None, None, fn


class _Engine:
    """Mutable Buchberger state over raw ``{key: coeff}`` dictionaries."""

    def __init__(self, ring: PolyRing, trunc: Truncation | None, degree_cap: int | None):
        self.ring = ring
        self.order = ring.order
        self.dec = ring.order.decode
        self.mod = ring.domain.characteristic
        self.dom = ring.domain
        self.trunc = trunc
        self.off, self.bound, self.deadfn = _dead_test(ring.order, trunc)
        self.degree_cap = degree_cap
        self.polys: list[dict] = []      # monic, leading key first in ``lms``
        self.tails: list[list] = []      # (key, coeff) tail terms, descending
        self.lms: list[int] = []
        self.lm_exps: list[tuple] = []
        self.active: list[int] = []
        self._divisor_cache: dict[int, int] = {}
        self._miss_cache: dict[int, int] = {}
        self._version = 0

    # helpers ------------------------------------------------------------

    def is_dead(self, k: int) -> bool:
        if self.off is not None:
            return ((k >> self.off) & FIELD_MASK) >= self.bound
        if self.deadfn is not None:
            return self.deadfn(k)
        return False

    def truncate(self, f: dict) -> dict:
        if self.off is None and self.deadfn is None:
            return f
        return {k: c for k, c in f.items() if not self.is_dead(k)}

    def find_divisor(self, k: int):
        j = self._divisor_cache.get(k)
        if j is not None:
            return j
        if self._miss_cache.get(k) == self._version:
            return None
        e = self.dec(k)
        for idx in self.active:
            u = self.lm_exps[idx]
            for a, b in zip(u, e):
                if a > b:
                    break
            else:
                self._divisor_cache[k] = idx
                return idx
        self._miss_cache[k] = self._version
        return None

    def reduce(self, f: dict) -> dict:
        """Normal form of ``f`` (consumed) modulo the current basis and truncation."""
        mod = self.mod
        off, bound, deadfn = self.off, self.bound, self.deadfn
        heap = [-k for k in f]
        heapq.heapify(heap)
        result = {}
        pop, push = heapq.heappop, heapq.heappush
        find = self.find_divisor
        lms, tails = self.lms, self.tails
        while heap:
            k = -pop(heap)
            c = f.pop(k, None)
            if c is None:
                continue
            j = find(k)
            if j is None:
                result[k] = c
                continue
            shift = k - lms[j]
            for kg, cg in tails[j]:
                kk = kg + shift
                if off is not None:
                    if ((kk >> off) & FIELD_MASK) >= bound:
                        continue
                elif deadfn is not None and deadfn(kk):
                    continue
                v = f.get(kk)
                if v is None:
                    v = -c * cg
                    if mod:
                        v %= mod
                    f[kk] = v
                    push(heap, -kk)
                else:
                    v = v - c * cg
                    if mod:
                        v %= mod
                    if v:
                        f[kk] = v
                    else:
                        del f[kk]
        return result

    def make_monic(self, f: dict) -> dict:
        lm = max(f)
        c = f[lm]
        if c == 1:
            return f
        inv = self.dom.inv(c)
        if self.mod:
            return {k: v * inv % self.mod for k, v in f.items()}
        return {k: v * inv for k, v in f.items()}

    def add(self, f: dict) -> int:
        f = self.make_monic(f)
        lm = max(f)
        idx = len(self.polys)
        self.polys.append(f)
        self.lms.append(lm)
        self.lm_exps.append(self.dec(lm))
        self.tails.append(sorted(((k, c) for k, c in f.items() if k != lm), reverse=True))
        return idx

    def multipliers(self, idx: int):
        """Monomials w of minimal degree with w * LM in the truncation ideal.

        Only needed when some tail term survives multiplication by w.
        """
        tr = self.trunc
        if tr is None:
            return []
        u = self.lm_exps[idx]
        du = tr.subdegree(u)
        low = [tr.subdegree(self.dec(k)) for k, _ in self.tails[idx]]
        if not low or min(low) >= du:
            return []
        n = self.order.nvars
        ws = []
        for combo in itertools.combinations_with_replacement(tr.variables, tr.degree - du):
            e = [0] * n
            for i in combo:
                e[i] += 1
            ws.append(self.order.encode(tuple(e)))
        return ws


def _lcm_exps(a, b):
    return tuple(x if x > y else y for x, y in zip(a, b))


def _disjoint(a, b):
    for x, y in zip(a, b):
        if x and y:
            return False
    return True


def _divides(a, b):
    for x, y in zip(a, b):
        if x > y:
            return False
    return True


class _CoefficientGrowth(Exception):
    """Raised inside the engine when a new element exceeds the coefficient budget."""


def _check_growth(h: dict, budget: int) -> None:
    for c in h.values():
        if c.numerator.bit_length() > budget or c.denominator.bit_length() > budget:
            raise _CoefficientGrowth


def _buchberger_raw(ring: PolyRing, gens: list[dict], trunc: Truncation | None = None,
                    degree_cap: int | None = None, budget: int | None = None) -> _Engine:
    eng = _Engine(ring, trunc, degree_cap)
    enc = ring.order.encode
    # pair heap entries: (lcm key, tiebreak, degree of lcm, i, j_or_None, w_key); normal strategy
    heap: list = []
    counter = itertools.count()
    pending: list[tuple] = []   # (i, j, lcm_exps) ordinary pairs

    work = [eng.truncate(dict(g)) for g in gens]
    work = [g for g in work if g]
    # seed in increasing leading monomial order: fewer redundant S-pairs
    work.sort(key=lambda g: max(g))

    def update(t: int):
        u = eng.lm_exps[t]
        # new ordinary pairs with Gebauer-Moeller criteria
        cand = []
        for i in eng.active:
            lij = _lcm_exps(eng.lm_exps[i], u)
            cand.append((i, lij, _disjoint(eng.lm_exps[i], u)))
        # M criterion: drop (i,t) if some (j,t) has lcm properly dividing lcm(i,t)
        keep = []
        for a, (i, lij, cop) in enumerate(cand):
            ok = True
            for b, (j, ljt, _) in enumerate(cand):
                if b != a and ljt != lij and _divides(ljt, lij):
                    ok = False
                    break
            if ok:
                keep.append((i, lij, cop))
        # F criterion: one pair per lcm; if any pair in the class is coprime, drop the class
        by_lcm: dict[tuple, list] = {}
        for i, lij, cop in keep:
            by_lcm.setdefault(lij, []).append((i, cop))
        new_pairs = []
        for lij, lst in by_lcm.items():
            if any(cop for _, cop in lst):
                continue
            new_pairs.append((lst[0][0], t, lij))
        # B criterion on the old pairs
        survivors = []
        for entry in heap:
            _, _, _, i, j, w = entry
            if j is None:
                survivors.append(entry)
                continue
            lij = _lcm_exps(eng.lm_exps[i], eng.lm_exps[j])
            if _divides(u, lij) and _lcm_exps(eng.lm_exps[i], u) != lij and _lcm_exps(eng.lm_exps[j], u) != lij:
                continue
            survivors.append(entry)
        if len(survivors) != len(heap):
            heap[:] = survivors
            heapq.heapify(heap)
        for i, j, lij in new_pairs:
            heapq.heappush(heap, (enc(lij), next(counter), sum(lij), i, j, None))
        for w in eng.multipliers(t):
            lk = eng.lms[t] + w
            heapq.heappush(heap, (lk, next(counter), sum(eng.dec(lk)), t, None, w))
        # drop basis elements made redundant by the new leading monomial
        eng.active = [i for i in eng.active if not _divides(u, eng.lm_exps[i])]
        eng.active.append(t)
        eng._version += 1

    for g in work:
        h = eng.reduce(g)
        if h:
            t = eng.add(h)
            update(t)

    cap = degree_cap
    mod = eng.mod
    while heap:
        lk, _, deg, i, j, w = heapq.heappop(heap)
        if cap is not None and deg > cap:
            raise DegreeCapExceeded(f"S-pair of degree {deg} exceeds the degree cap {cap}")
        if j is None:
            s = {}
            for k, c in eng.polys[i].items():
                kk = k + w
                if not eng.is_dead(kk):
                    s[kk] = c
        else:
            si = lk - eng.lms[i]
            sj = lk - eng.lms[j]
            s = {}
            for k, c in eng.tails[i]:
                kk = k + si
                if not eng.is_dead(kk):
                    s[kk] = c
            for k, c in eng.tails[j]:
                kk = k + sj
                if eng.is_dead(kk):
                    continue
                v = s.get(kk)
                if v is None:
                    s[kk] = (-c) % mod if mod else -c
                else:
                    v = v - c
                    if mod:
                        v %= mod
                    if v:
                        s[kk] = v
                    else:
                        del s[kk]
        if not s:
            continue
        h = eng.reduce(s)
        if h:
            if budget is not None:
                _check_growth(h, budget)
            t = eng.add(h)
            update(t)
    return eng


def _interreduce(eng: _Engine) -> list[dict]:
    """Reduced Groebner basis (monic) from the minimal active set."""
    active = sorted(eng.active, key=lambda i: eng.lms[i])
    out = []
    for idx in active:
        others = [i for i in active if i != idx]
        saved = eng.active
        eng.active = others
        eng._divisor_cache = {}
        eng._version += 1
        lm = eng.lms[idx]
        tail = {k: c for k, c in eng.tails[idx]}
        red = eng.reduce(tail)
        red[lm] = eng.dom.one
        out.append(red)
        eng.active = saved
    eng._divisor_cache = {}
    eng._version += 1
    return out


class GroebnerBasis:
    """A reduced Groebner basis: monic elements sorted by increasing leading monomial."""

    def __init__(self, ring: PolyRing, polys: list[Polynomial], trunc: Truncation | None = None):
        self.ring = ring
        self.order = ring.order
        self.polys = sorted(polys, key=lambda p: p.lm_key)
        self.trunc = trunc
        self._nf_engine = None

    def __len__(self):
        return len(self.polys)

    def __iter__(self):
        return iter(self.polys)

    def __getitem__(self, i):
        return self.polys[i]

    def __eq__(self, other):
        return (
            isinstance(other, GroebnerBasis)
            and self.ring == other.ring
            and [p.raw for p in self.polys] == [p.raw for p in other.polys]
        )

    def __hash__(self):
        return hash(tuple(hash(p) for p in self.polys))

    def __repr__(self):
        return f"GroebnerBasis([{', '.join(str(p) for p in self.polys)}])"

    @property
    def leading_monomials(self) -> list[tuple[int, ...]]:
        return [p.lm for p in self.polys]

    def is_unit(self) -> bool:
        return any(p.lm_key == self.ring.one.lm_key for p in self.polys)

    def _engine(self) -> _Engine:
        if self._nf_engine is None:
            eng = _Engine(self.ring, None, None)
            for p in self.polys:
                eng.add(dict(p.raw))
            eng.active = list(range(len(self.polys)))
            self._nf_engine = eng
        return self._nf_engine

    def reduce(self, f: Polynomial) -> Polynomial:
        if f.ring != self.ring:
            from .polyring import AmbientMismatch

            raise AmbientMismatch("polynomial and basis live in different rings")
        return Polynomial(self.ring, self._engine().reduce(dict(f.raw)))

    def contains(self, f: Polynomial) -> bool:
        return not self.reduce(f)

    def is_standard(self, exps) -> bool:
        return not any(all(a <= b for a, b in zip(u, exps)) for u in self.leading_monomials)

    def standard_monomials(self, limit: int | None = None):
        """Exponents outside the leading ideal (finite only for zero-dimensional bases)."""
        lms = self.leading_monomials
        n = self.ring.nvars
        for i in range(n):
            if not any(u[i] > 0 and sum(u) == u[i] for u in lms):
                raise NotZeroDimensional("leading ideal has no pure power of variable %d" % i)
        bounds = [min(u[i] for u in lms if u[i] > 0 and sum(u) == u[i]) for i in range(n)]
        out = []

        def rec(i, prefix):
            if i == n:
                if self.is_standard(prefix):
                    out.append(tuple(prefix))
                return
            for e in range(bounds[i]):
                cand = prefix + [e]
                padded = cand + [0] * (n - i - 1)
                if not self.is_standard(padded):
                    break
                rec(i + 1, cand)

        rec(0, [])
        if limit is not None and len(out) > limit:
            raise ValueError("too many standard monomials")
        return out


MACAULAY_MAX_ENTRIES = 1_500_000
COEFFICIENT_BUDGET = 2048


def _macaulay_applies(ring: PolyRing, trunc: Truncation | None) -> bool:
    if trunc is None or ring.domain.characteristic or not isinstance(ring.order, DegRevLex):
        return False
    return trunc.variables == tuple(range(ring.nvars))


def _macaulay_basis(ring: PolyRing, gens: list[dict], T: int) -> list[Polynomial] | None:
    """Reduced GB of (gens) + m^T over Q by exact row reduction in k[x]/m^T.

    Rows are the multiples u*g of degree < T; with columns in decreasing
    monomial order the pivots of the reduced echelon form are the leading
    monomials below degree T, and the pivot rows are the basis elements.
    Buchberger over Q on these inputs can carry huge intermediate
    coefficients (other points of the global variety) that this avoids.
    Returns None when the matrix would exceed MACAULAY_MAX_ENTRIES.
    """
    order = ring.order
    off = FIELD_BITS * (order.nfields - 1)

    def deg(k):
        return (k >> off) & FIELD_MASK

    gens = [{k: c for k, c in g.items() if deg(k) < T} for g in gens]
    gens = [g for g in gens if g]
    if not gens:
        return [ring.monomial(e) for e in ring.monomials_of_degree(T)] if T > 0 else [ring.one]
    lows = [min(deg(k) for k in g) for g in gens]
    base = min(lows)
    ncols = math.comb(T + ring.nvars - 1, ring.nvars) - math.comb(base + ring.nvars - 1, ring.nvars)
    nrows = sum(math.comb(T - low + ring.nvars - 1, ring.nvars) for low in lows)
    if ncols * nrows > MACAULAY_MAX_ENTRIES:
        return None
    # columns: monomials of degree base..T-1; lower ones are standard and never touched
    colkeys = sorted((order.encode(e) for d in range(base, T) for e in ring.monomials_of_degree(d)), reverse=True)
    col = {k: i for i, k in enumerate(colkeys)}
    rows: list[dict] = []
    seen: set = set()
    for g, low in zip(gens, lows):
        den = 1
        for c in g.values():
            den = math.lcm(den, int(c.denominator))
        gi = {k: int(c * den) for k, c in g.items()}
        for d in range(T - low):
            for u in ring.monomials_of_degree(d):
                uk = order.encode(u)
                row = tuple(sorted((col[k + uk], c) for k, c in gi.items() if deg(k) + d < T))
                if row and row not in seen:
                    seen.add(row)
                    rows.append(row)
    M = flint.fmpz_mat(len(rows), len(colkeys))
    for i, row in enumerate(rows):
        for j, c in row:
            M[i, j] = c
    E, den, rank = M.rref()
    width = len(colkeys)
    entries = E.entries()
    dec = order.decode
    lead: dict[int, tuple] = {}
    prow: dict[int, list] = {}
    for i in range(rank):
        r = entries[i * width:(i + 1) * width]
        p = next(j for j, v in enumerate(r) if v != 0)
        lead[p] = dec(colkeys[p])
        prow[p] = r
    lms = list(lead.values())

    def properly_divisible(u):
        return any(v != u and all(a <= b for a, b in zip(v, u)) for v in lms)

    out = []
    for p, r in prow.items():
        if properly_divisible(lead[p]):
            continue
        piv = int(r[p])
        out.append(Polynomial(ring, {colkeys[j]: mpq(int(v), piv) for j, v in enumerate(r) if v != 0}))
    for e in ring.monomials_of_degree(T):
        if not any(all(a <= b for a, b in zip(v, e)) for v in lms):
            out.append(ring.monomial(e))
    return out


def buchberger(generators, order=None, *, ring: PolyRing | None = None, truncation: Truncation | None = None,
               degree_cap: int | None = None) -> GroebnerBasis:
    """Reduced Groebner basis of the ideal generated by ``generators`` (plus ``truncation``).

    ``order`` re-encodes the generators in the same variables under another
    monomial order; by default the generators' own ring is used.
    """
    gens = list(generators)
    if ring is None:
        if not gens:
            raise ValueError("need a ring for an empty generator list")
        ring = gens[0].ring
    for g in gens:
        if g.ring.names != ring.names or g.ring.domain != ring.domain:
            from .polyring import AmbientMismatch

            raise AmbientMismatch("generators live in different rings")
    if order is not None:
        ring = ring.with_order(order)
    gens = [g if g.ring == ring else g.change_ring(ring) for g in gens]
    if degree_cap is None:
        degree_cap = _DEGREE_CAP.get()
    raw = [g.raw for g in gens if g]
    if degree_cap is None and _macaulay_applies(ring, truncation):
        # Buchberger is much faster unless coefficients swell; then switch to row reduction
        try:
            eng = _buchberger_raw(ring, raw, truncation, None, COEFFICIENT_BUDGET)
        except _CoefficientGrowth:
            eng = None
            polys = _macaulay_basis(ring, raw, truncation.degree)
            if polys is not None:
                return GroebnerBasis(ring, polys, truncation)
        if eng is None:
            eng = _buchberger_raw(ring, raw, truncation, degree_cap)
    else:
        eng = _buchberger_raw(ring, raw, truncation, degree_cap)
    polys = [Polynomial(ring, d) for d in _interreduce(eng)]
    if truncation is not None:
        lms = [p.lm for p in polys]
        for e in ring.monomials_of_degree(truncation.degree, truncation.variables):
            if not any(all(a <= b for a, b in zip(u, e)) for u in lms):
                polys.append(ring.monomial(e))
    return GroebnerBasis(ring, polys, truncation)


def normal_form(f: Polynomial, G: GroebnerBasis) -> Polynomial:
    return G.reduce(f)


def s_polynomial(f: Polynomial, g: Polynomial) -> Polynomial:
    """S-polynomial of two nonzero polynomials (for oracles and tests)."""
    ring = f.ring
    lcm = _lcm_exps(f.lm, g.lm)
    lk = ring.order.encode(lcm)
    a = f.mul_term(lk - f.lm_key, ring.domain.inv(f.lc))
    b = g.mul_term(lk - g.lm_key, ring.domain.inv(g.lc))
    return a - b
