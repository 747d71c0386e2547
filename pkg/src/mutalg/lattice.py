"""Integer lattice vectors, the standard pairing, and monomial valuations.

Vectors are plain int tuples; N and M are dual copies of Z^rank paired by
the standard scalar product.
"""

from __future__ import annotations

from math import gcd

from .laurent import LaurentPolynomial

Vector = tuple


def pairing(u: Vector, m: Vector) -> int:
    """Standard scalar product; ranks must agree."""
    if len(u) != len(m):
        raise ValueError(f"rank mismatch: {len(u)} vs {len(m)}")
    return sum(a * b for a, b in zip(u, m))


def is_primitive(u: Vector) -> bool:
    """True iff the entry gcd is 1; the zero vector is rejected."""
    if not any(u):
        raise ValueError("the zero vector is neither primitive nor imprimitive")
    g = 0
    for e in u:
        g = gcd(g, e)
    return g == 1


def primitive_part(u: Vector) -> Vector:
    """u divided by the gcd of its entries (u must be nonzero)."""
    if not any(u):
        raise ValueError("the zero vector has no primitive part")
    g = 0
    for e in u:
        g = gcd(g, e)
    return tuple(e // g for e in u)


def monomial_valuation(w: Vector, f: LaurentPolynomial) -> int:
    """min over the support of f of <w, m>; rejects f = 0 (valuation infinite)."""
    if f.is_zero:
        raise ValueError("the zero polynomial has infinite valuation")
    return min(pairing(w, exp) for exp in f.terms)
