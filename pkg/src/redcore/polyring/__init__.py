"""Exact coefficients, monomial orders and sparse polynomials."""

from .domains import GF, QQ, PrimeField, RationalField, domain_for_characteristic
from .orders import BlockOrder, DegRevLex, Lex, MonomialOrder, WeightedDegRevLex, elimination_order, make_order
from .parser import PolySyntaxError, UnknownVariable, parse_poly
from .polynomial import AmbientMismatch, PolyRing, Polynomial, format_poly


def poly_add(f: Polynomial, g: Polynomial) -> Polynomial:
    return f + g


def poly_mul(f: Polynomial, g: Polynomial) -> Polynomial:
    return f * g


def divides(u, v) -> bool:
    """Exponent-vector divisibility u | v."""
    return all(a <= b for a, b in zip(u, v))


def monomial_lcm(u, v) -> tuple[int, ...]:
    return tuple(max(a, b) for a, b in zip(u, v))


__all__ = [
    "GF", "QQ", "PrimeField", "RationalField", "domain_for_characteristic",
    "BlockOrder", "DegRevLex", "Lex", "MonomialOrder", "WeightedDegRevLex", "elimination_order", "make_order",
    "PolySyntaxError", "UnknownVariable", "parse_poly",
    "AmbientMismatch", "PolyRing", "Polynomial", "format_poly",
    "poly_add", "poly_mul", "divides", "monomial_lcm",
]
