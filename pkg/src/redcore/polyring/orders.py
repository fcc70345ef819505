"""Monomial orders over packed integer monomial keys.

A monomial with exponent vector ``e`` is stored as a single integer built by
concatenating fixed width, non-negative fields that are linear in ``e``.
With that encoding

* comparing two keys as integers compares the monomials in the order,
* adding two keys multiplies the monomials,

so the polynomial and Groebner layers never touch exponent tuples on their hot
paths.  Exponent vectors are recovered by :meth:`MonomialOrder.decode`.
"""

from __future__ import annotations

FIELD_BITS = 20
FIELD_MASK = (1 << FIELD_BITS) - 1
MAX_FIELD = FIELD_MASK


class MonomialOrder:
    """Base class.  Subclasses define ``fields(exps)`` and ``_decode(key)``."""

    kind = "abstract"

    def __init__(self, nvars: int):
        if nvars < 0:
            raise ValueError("nvars must be non-negative")
        self.nvars = nvars
        self._decode_cache: dict[int, tuple[int, ...]] = {}

    @property
    def nfields(self) -> int:
        raise NotImplementedError

    @property
    def width(self) -> int:
        return FIELD_BITS * self.nfields

    def fields(self, exps) -> list[int]:
        raise NotImplementedError

    def encode(self, exps) -> int:
        if len(exps) != self.nvars:
            raise ValueError(f"expected {self.nvars} exponents, got {len(exps)}")
        key = 0
        for f in self.fields(exps):
            if f < 0 or f > MAX_FIELD:
                raise OverflowError("monomial exponents exceed the packed range")
            key = (key << FIELD_BITS) | f
        return key

    def decode(self, key: int) -> tuple[int, ...]:
        exps = self._decode_cache.get(key)
        if exps is None:
            exps = self._decode(key)
            self._decode_cache[key] = exps
        return exps

    def _decode(self, key: int) -> tuple[int, ...]:
        raise NotImplementedError

    def _split_fields(self, key: int) -> list[int]:
        out = [0] * self.nfields
        for i in range(self.nfields - 1, -1, -1):
            out[i] = key & FIELD_MASK
            key >>= FIELD_BITS
        return out

    def _signature(self):
        return (self.kind, self.nvars)

    def __eq__(self, other):
        return isinstance(other, MonomialOrder) and self._signature() == other._signature()

    def __hash__(self):
        return hash(self._signature())

    def __repr__(self):
        return f"{type(self).__name__}({self.nvars})"


class DegRevLex(MonomialOrder):
    """Graded reverse lexicographic order with x_0 > x_1 > ... ."""

    kind = "degrevlex"

    @property
    def nfields(self):
        return max(self.nvars, 1)

    def fields(self, exps):
        d = sum(exps)
        # equal degree: the smaller exponent in the last variable wins
        return [d] + [d - exps[i] for i in range(self.nvars - 1, 0, -1)]

    def _decode(self, key):
        n = self.nvars
        if n == 0:
            return ()
        f = self._split_fields(key)
        d = f[0]
        exps = [0] * n
        for j in range(1, n):
            exps[n - j] = d - f[j]
        exps[0] = d - sum(exps[1:])
        return tuple(exps)

    def degree_of_key(self, key: int) -> int:
        return key >> (FIELD_BITS * (self.nfields - 1))


class Lex(MonomialOrder):
    """Pure lexicographic order with x_0 > x_1 > ... ."""

    kind = "lex"

    @property
    def nfields(self):
        return max(self.nvars, 1)

    def fields(self, exps):
        return list(exps) if self.nvars else [0]

    def _decode(self, key):
        if self.nvars == 0:
            return ()
        return tuple(self._split_fields(key))


class WeightedDegRevLex(MonomialOrder):
    """Positive weighted degree first, ties broken by degrevlex."""

    kind = "wdegrevlex"

    def __init__(self, weights):
        weights = tuple(int(w) for w in weights)
        if any(w <= 0 for w in weights):
            raise ValueError("weights must be positive")
        super().__init__(len(weights))
        self.weights = weights
        self._inner = DegRevLex(len(weights))

    @property
    def nfields(self):
        return self._inner.nfields + 1

    def fields(self, exps):
        return [sum(w * e for w, e in zip(self.weights, exps))] + self._inner.fields(exps)

    def _decode(self, key):
        return self._inner._decode(key & ((1 << self._inner.width) - 1))

    def _signature(self):
        return (self.kind, self.weights)

    def __repr__(self):
        return f"WeightedDegRevLex({list(self.weights)})"


class BlockOrder(MonomialOrder):
    """Compare the first ``split`` variables by ``first``; break ties by ``second``.

    A block order whose leading block holds auxiliary variables is an
    elimination order for them.
    """

    kind = "block"

    def __init__(self, first: MonomialOrder, second: MonomialOrder):
        super().__init__(first.nvars + second.nvars)
        self.first = first
        self.second = second
        self.split = first.nvars

    @property
    def nfields(self):
        return self.first.nfields + self.second.nfields

    def fields(self, exps):
        return self.first.fields(exps[: self.split]) + self.second.fields(exps[self.split:])

    def _decode(self, key):
        lo = key & ((1 << self.second.width) - 1)
        hi = key >> self.second.width
        return self.first.decode(hi) + self.second.decode(lo)

    def _signature(self):
        return (self.kind, self.first._signature(), self.second._signature())

    def __repr__(self):
        return f"BlockOrder({self.first!r}, {self.second!r})"


def make_order(spec, nvars: int) -> MonomialOrder:
    """Build an order from a name (``"degrevlex"``, ``"lex"``) or pass one through."""
    if isinstance(spec, MonomialOrder):
        if spec.nvars != nvars:
            raise ValueError("order has the wrong number of variables")
        return spec
    if spec in (None, "degrevlex", "grevlex"):
        return DegRevLex(nvars)
    if spec == "lex":
        return Lex(nvars)
    raise ValueError(f"unknown monomial order {spec!r}")


def elimination_order(n_aux: int, base: MonomialOrder) -> BlockOrder:
    """Block order eliminating ``n_aux`` leading auxiliary variables."""
    return BlockOrder(DegRevLex(n_aux), base)
