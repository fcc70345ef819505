"""Sparse multivariate polynomials with exact coefficients."""

from __future__ import annotations

from itertools import combinations_with_replacement

from .domains import QQ, RationalField, PrimeField
from .orders import MonomialOrder, make_order


class AmbientMismatch(ValueError):
    """Raised when polynomials from different rings are combined."""


class PolyRing:
    """k[x_0, ..., x_{n-1}] with a fixed monomial order.

    Polynomials store their terms keyed by the order's packed monomial key, so a
    ring is identified by (variable names, domain, order).
    """

    def __init__(self, names, domain=QQ, order="degrevlex"):
        names = tuple(names)
        if len(set(names)) != len(names):
            raise ValueError("duplicate variable names")
        self.names = names
        self.nvars = len(names)
        self.domain = domain
        self.order: MonomialOrder = make_order(order, self.nvars)
        self.zero = Polynomial(self, {})
        self.one = Polynomial(self, {self.order.encode((0,) * self.nvars): domain.one})

    def __eq__(self, other):
        return (
            isinstance(other, PolyRing)
            and self.names == other.names
            and self.domain == other.domain
            and self.order == other.order
        )

    def __hash__(self):
        return hash((self.names, self.domain, self.order))

    def __repr__(self):
        return f"PolyRing({list(self.names)}, {self.domain!r}, {self.order!r})"

    @property
    def characteristic(self) -> int:
        return self.domain.characteristic

    # construction -----------------------------------------------------------

    def gen(self, i) -> "Polynomial":
        if isinstance(i, str):
            i = self.names.index(i)
        exps = [0] * self.nvars
        exps[i] = 1
        return self.monomial(exps)

    @property
    def gens(self) -> list["Polynomial"]:
        return [self.gen(i) for i in range(self.nvars)]

    def monomial(self, exps, coeff=None) -> "Polynomial":
        c = self.domain.one if coeff is None else self.domain.convert(coeff)
        if not c:
            return self.zero
        return Polynomial(self, {self.order.encode(tuple(exps)): c})

    def constant(self, c) -> "Polynomial":
        return self.monomial((0,) * self.nvars, c)

    def from_dict(self, d) -> "Polynomial":
        """Build from ``{exponent tuple: coefficient}``."""
        enc = self.order.encode
        conv = self.domain.convert
        terms = {}
        for exps, c in d.items():
            c = conv(c)
            if c:
                k = enc(tuple(exps))
                c = terms.get(k, 0) + c
                if self.domain.characteristic:
                    c %= self.domain.characteristic
                if c:
                    terms[k] = c
                else:
                    terms.pop(k, None)
        return Polynomial(self, terms)

    def __call__(self, value) -> "Polynomial":
        if isinstance(value, Polynomial):
            if value.ring != self:
                raise AmbientMismatch("polynomial belongs to a different ring")
            return value
        if isinstance(value, str):
            from .parser import parse_poly

            return parse_poly(value, self)
        return self.constant(value)

    def parse(self, text: str) -> "Polynomial":
        from .parser import parse_poly

        return parse_poly(text, self)

    def monomials_of_degree(self, d: int, variables=None) -> list[tuple[int, ...]]:
        """All exponent vectors of total degree ``d`` in ``variables`` (default all)."""
        idx = list(range(self.nvars)) if variables is None else list(variables)
        out = []
        for combo in combinations_with_replacement(idx, d):
            e = [0] * self.nvars
            for i in combo:
                e[i] += 1
            out.append(tuple(e))
        return out

    def with_order(self, order) -> "PolyRing":
        return PolyRing(self.names, self.domain, order)

    def extend(self, new_names, order=None, front=True) -> "PolyRing":
        """A ring with extra variables, in front (default) or at the back."""
        names = tuple(new_names) + self.names if front else self.names + tuple(new_names)
        return PolyRing(names, self.domain, order if order is not None else "degrevlex")


class Polynomial:
    """Immutable sparse polynomial: ``{packed monomial key: nonzero coefficient}``."""

    __slots__ = ("ring", "_terms", "_lm")

    def __init__(self, ring: PolyRing, terms: dict):
        self.ring = ring
        self._terms = terms
        self._lm = None

    # views ----------------------------------------------------------------

    @property
    def raw(self) -> dict:
        """The internal term dictionary.  Do not mutate."""
        return self._terms

    def terms(self) -> list[tuple[tuple[int, ...], object]]:
        """(exponents, coefficient) pairs in strictly descending order."""
        dec = self.ring.order.decode
        return [(dec(k), self._terms[k]) for k in sorted(self._terms, reverse=True)]

    def monomials(self) -> list[tuple[int, ...]]:
        return [e for e, _ in self.terms()]

    def to_dict(self) -> dict:
        dec = self.ring.order.decode
        return {dec(k): c for k, c in self._terms.items()}

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    @property
    def lm_key(self) -> int:
        if self._lm is None:
            if not self._terms:
                raise ValueError("zero polynomial has no leading monomial")
            self._lm = max(self._terms)
        return self._lm

    @property
    def lm(self) -> tuple[int, ...]:
        return self.ring.order.decode(self.lm_key)

    @property
    def lc(self):
        return self._terms[self.lm_key]

    def degree(self) -> int:
        if not self._terms:
            return -1
        dec = self.ring.order.decode
        return max(sum(dec(k)) for k in self._terms)

    def order_at_origin(self) -> int:
        """Lowest total degree of a term (the m-adic order); -1 for zero."""
        if not self._terms:
            return -1
        dec = self.ring.order.decode
        return min(sum(dec(k)) for k in self._terms)

    def constant_coeff(self):
        k0 = self.ring.order.encode((0,) * self.ring.nvars)
        return self._terms.get(k0, self.ring.domain.zero)

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def is_homogeneous(self) -> bool:
        dec = self.ring.order.decode
        return len({sum(dec(k)) for k in self._terms}) <= 1

    # arithmetic -----------------------------------------------------------

    def _check(self, other):
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise AmbientMismatch("polynomials live in different rings")
            return other
        return self.ring.constant(other)

    def __add__(self, other):
        other = self._check(other)
        p = self.ring.domain.characteristic
        a, b = (self._terms, other._terms) if len(self._terms) >= len(other._terms) else (other._terms, self._terms)
        out = dict(a)
        for k, c in b.items():
            v = out.get(k)
            if v is None:
                out[k] = c
            else:
                v = v + c
                if p:
                    v %= p
                if v:
                    out[k] = v
                else:
                    del out[k]
        return Polynomial(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        p = self.ring.domain.characteristic
        if p:
            return Polynomial(self.ring, {k: (-c) % p for k, c in self._terms.items()})
        return Polynomial(self.ring, {k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-self._check(other))

    def __rsub__(self, other):
        return self._check(other) + (-self)

    def scale(self, c) -> "Polynomial":
        c = self.ring.domain.convert(c)
        if not c:
            return self.ring.zero
        p = self.ring.domain.characteristic
        if p:
            return Polynomial(self.ring, {k: v * c % p for k, v in self._terms.items()})
        return Polynomial(self.ring, {k: v * c for k, v in self._terms.items()})

    def mul_term(self, key: int, c) -> "Polynomial":
        """Multiply by the single term ``c * monomial(key)``."""
        p = self.ring.domain.characteristic
        if p:
            return Polynomial(self.ring, {k + key: v * c % p for k, v in self._terms.items()})
        return Polynomial(self.ring, {k + key: v * c for k, v in self._terms.items()})

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            return self.scale(other)
        other = self._check(other)
        p = self.ring.domain.characteristic
        a, b = self._terms, other._terms
        if len(a) < len(b):
            a, b = b, a
        out: dict = {}
        get = out.get
        for kb, cb in b.items():
            for ka, ca in a.items():
                k = ka + kb
                out[k] = get(k, 0) + ca * cb
        if p:
            out = {k: v % p for k, v in out.items() if v % p}
        else:
            out = {k: v for k, v in out.items() if v}
        return Polynomial(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        result = self.ring.one
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def monic(self) -> "Polynomial":
        if not self._terms:
            return self
        return self.scale(self.ring.domain.inv(self.lc))

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.ring == other.ring and self._terms == other._terms
        if isinstance(other, (int,)):
            return self == self.ring.constant(other)
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    # ring maps ------------------------------------------------------------

    def evaluate(self, images: list["Polynomial"], target: PolyRing | None = None) -> "Polynomial":
        """Substitute ``x_i -> images[i]`` (a ring homomorphism)."""
        if len(images) != self.ring.nvars:
            raise ValueError("need one image per variable")
        target = target if target is not None else (images[0].ring if images else self.ring)
        dec = self.ring.order.decode
        powers: dict[tuple[int, int], Polynomial] = {}

        def pw(i, e):
            key = (i, e)
            if key not in powers:
                powers[key] = images[i] ** e
            return powers[key]

        acc = target.zero
        for k, c in self._terms.items():
            t = target.constant(c)
            for i, e in enumerate(dec(k)):
                if e:
                    t = t * pw(i, e)
            acc = acc + t
        return acc

    def change_ring(self, target: PolyRing, var_map=None) -> "Polynomial":
        """Re-encode in ``target``; ``var_map[i]`` gives the target index of variable i.

        By default variables are matched by name; a variable mapped to None
        must not occur.  Coefficients are converted when the domains differ.
        """
        if var_map is None:
            var_map = [target.names.index(nm) if nm in target.names else None for nm in self.ring.names]
        dec = self.ring.order.decode
        enc = target.order.encode
        n = target.nvars
        conv = None if target.domain == self.ring.domain else target.domain.convert
        p = target.domain.characteristic
        out = {}
        for k, c in self._terms.items():
            if conv is not None:
                c = conv(c)
                if not c:
                    continue
            e = [0] * n
            for i, x in enumerate(dec(k)):
                if x:
                    j = var_map[i]
                    if j is None:
                        raise ValueError(f"variable {self.ring.names[i]} has no image in {target!r}")
                    e[j] += x
            key = enc(tuple(e))
            if key in out:
                c = out[key] + c
                if p:
                    c %= p
            out[key] = c
        return Polynomial(target, {k: c for k, c in out.items() if c})

    # printing -------------------------------------------------------------

    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"Polynomial({format_poly(self)!r})"


def _format_monomial(exps, names) -> str:
    parts = []
    for nm, e in zip(names, exps):
        if e == 1:
            parts.append(nm)
        elif e > 1:
            parts.append(f"{nm}^{e}")
    return "*".join(parts)


def format_poly(f: Polynomial) -> str:
    """Render in the input grammar, descending order, e.g. ``3*x*y - 1/2*y^3``."""
    if not f._terms:
        return "0"
    dom = f.ring.domain
    names = f.ring.names
    chunks = []
    for exps, c in f.terms():
        neg = False
        if isinstance(dom, RationalField) and c < 0:
            neg, c = True, -c
        cs = dom.to_str(c)
        mono = _format_monomial(exps, names)
        if not mono:
            body = cs
        elif cs == "1":
            body = mono
        else:
            body = f"{cs}*{mono}"
        chunks.append((neg, body))
    out = ("-" if chunks[0][0] else "") + chunks[0][1]
    for neg, body in chunks[1:]:
        out += (" - " if neg else " + ") + body
    return out


__all__ = ["PolyRing", "Polynomial", "AmbientMismatch", "format_poly", "PrimeField", "RationalField"]
