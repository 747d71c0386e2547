"""Mutation data (u, h = g^k) and irreducibility certification.

Irreducibility is certified only when the support of g lies on a lattice
segment, which reduces the question to a univariate polynomial over Q;
other inputs stay Unknown unless declared irreducible by the data source.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .cones import Cone
from .lattice import Vector, is_primitive, pairing
from .laurent import LaurentPolynomial
from .reports import DECLARED, FAIL, PASS, UNCHECKED, ValidationReport

_SMALL_PRIMES = (
    2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47,
    53, 59, 61, 67, 71, 73, 79, 83, 89, 97,
)


class Irreducibility(enum.Enum):
    CERTIFIED_IRREDUCIBLE = "certified-irreducible"
    DECLARED_IRREDUCIBLE = "declared-irreducible"
    UNKNOWN = "unknown"
    CERTIFIED_REDUCIBLE = "certified-reducible"


@dataclass(frozen=True)
class MutationDatum:
    """u primitive in N, g irreducible supported on u-perp, h = g^k."""

    u: Vector
    g: LaurentPolynomial
    k: int
    h: LaurentPolynomial
    irreducibility: Irreducibility

    @classmethod
    def create(
        cls, u: Vector, g: LaurentPolynomial, k: int = 1, declared_irreducible: bool = False
    ) -> "MutationDatum":
        u = tuple(u)
        if k < 1:
            raise ValueError("the exponent k must be a positive integer")
        if g.is_zero or g.is_monomial:
            status = Irreducibility.UNKNOWN
        else:
            status = certify_irreducible(g)
        if status is Irreducibility.UNKNOWN and declared_irreducible:
            status = Irreducibility.DECLARED_IRREDUCIBLE
        return cls(u=u, g=g, k=k, h=g**k, irreducibility=status)


def datum_validate(d: MutationDatum, target_cone: Cone) -> ValidationReport:
    """Check the defining constraints plus admissibility for the target cone."""
    report = ValidationReport("mutation datum")
    if not any(d.u):
        report.add("u_primitive", FAIL, "u is the zero vector")
    elif is_primitive(d.u):
        report.add("u_primitive", PASS)
    else:
        report.add("u_primitive", FAIL, f"entry gcd of {d.u} exceeds 1")

    if d.g.is_zero or d.g.is_monomial:
        report.add("g_not_unit", FAIL, "g must not be zero or a single monomial")
    else:
        report.add("g_not_unit", PASS)

    bad = [exp for exp in d.g.terms if any(d.u) and pairing(d.u, exp) != 0]
    if bad:
        report.add("support_orthogonal", FAIL, f"exponent {bad[0]} pairs nonzero with u")
    else:
        report.add("support_orthogonal", PASS)

    if d.h == d.g**d.k:
        report.add("h_equals_g_power", PASS, f"k = {d.k}")
    else:
        report.add("h_equals_g_power", FAIL, "cached h differs from g^k")

    if len(d.u) != target_cone.rank:
        report.add("admissible", FAIL, "rank mismatch with the target cone")
    elif target_cone.contains(d.u):
        report.add("admissible", FAIL, "u lies in the target cone")
    else:
        report.add("admissible", PASS, "u lies outside the target cone")

    if d.irreducibility is Irreducibility.CERTIFIED_IRREDUCIBLE:
        report.add("irreducible", PASS, "certified (segment case)")
    elif d.irreducibility is Irreducibility.DECLARED_IRREDUCIBLE:
        report.add("irreducible", DECLARED, "declared by input data, not certified")
    elif d.irreducibility is Irreducibility.CERTIFIED_REDUCIBLE:
        report.add("irreducible", FAIL, "a proper factor exists")
    else:
        report.add("irreducible", UNCHECKED, "no certificate available")
    return report


# -- irreducibility certification -------------------------------------------


def certify_irreducible(g: LaurentPolynomial) -> Irreducibility:
    """Certify over Q via the lattice-segment reduction, else Unknown."""
    if g.is_zero:
        raise ValueError("the zero polynomial has no irreducibility status")
    if g.is_monomial:
        raise ValueError("monomials are units of the Laurent ring")
    poly = _segment_univariate(g)
    if poly is None:
        return Irreducibility.UNKNOWN
    return _univariate_irreducible_q(poly)


def _segment_univariate(g: LaurentPolynomial):
    """Coefficients of g along its support segment, or None if not collinear."""
    support = list(g.terms)
    base = support[0]
    diffs = [tuple(a - b for a, b in zip(exp, base)) for exp in support]
    direction = None
    for d in diffs:
        if any(d):
            direction = d
            break
    if direction is None:
        return None
    gg = 0
    for e in direction:
        gg = gcd(gg, e)
    direction = tuple(e // gg for e in direction)
    steps = []
    for d in diffs:
        t = None
        for dd, ee in zip(d, direction):
            if ee:
                if dd % ee:
                    return None
                q = dd // ee
                if t is None:
                    t = q
                elif t != q:
                    return None
            elif dd:
                return None
        steps.append(t if t is not None else 0)
    low = min(steps)
    degree = max(steps) - low
    coeffs = [Fraction(0)] * (degree + 1)
    for exp, step in zip(support, steps):
        coeffs[step - low] = g.terms[exp]
    return coeffs


def _univariate_irreducible_q(coeffs: list) -> Irreducibility:
    """coeffs ascending over Q, nonzero constant term, degree >= 1."""
    degree = len(coeffs) - 1
    if degree == 1:
        return Irreducibility.CERTIFIED_IRREDUCIBLE
    ints = _clear_denominators(coeffs)
    if _has_rational_root(ints):
        return Irreducibility.CERTIFIED_REDUCIBLE
    if degree <= 3:
        # any factorization of a degree-2/3 polynomial has a linear factor
        return Irreducibility.CERTIFIED_IRREDUCIBLE
    for p in _SMALL_PRIMES:
        if ints[-1] % p == 0 or ints[0] % p == 0:
            continue
        if _fp_irreducible([c % p for c in ints], p):
            return Irreducibility.CERTIFIED_IRREDUCIBLE
    return Irreducibility.UNKNOWN


def _clear_denominators(coeffs: list) -> list:
    from math import lcm

    denom = 1
    for c in coeffs:
        denom = lcm(denom, c.denominator)
    ints = [int(c * denom) for c in coeffs]
    g = 0
    for c in ints:
        g = gcd(g, c)
    return [c // g for c in ints]


def _divisors(n: int) -> list:
    n = abs(n)
    out = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            if d != n // d:
                out.append(n // d)
        d += 1
    return sorted(out)


def _has_rational_root(ints: list) -> bool:
    a0, an = ints[0], ints[-1]
    if a0 == 0:
        return True
    for p in _divisors(a0):
        for q in _divisors(an):
            for sign in (1, -1):
                root = Fraction(sign * p, q)
                acc = Fraction(0)
                for c in reversed(ints):
                    acc = acc * root + c
                if acc == 0:
                    return True
    return False


# -- dense univariate arithmetic over F_p ------------------------------------


def _fp_trim(a: list) -> list:
    while a and a[-1] == 0:
        a.pop()
    return a


def _fp_mul(a: list, b: list, p: int) -> list:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _fp_trim(out)


def _fp_mod(a: list, m: list, p: int) -> list:
    a = list(a)
    dm = len(m) - 1
    inv_lead = pow(m[-1], p - 2, p)
    while len(a) - 1 >= dm and a:
        k = len(a) - 1 - dm
        factor = a[-1] * inv_lead % p
        for i, mi in enumerate(m):
            a[i + k] = (a[i + k] - factor * mi) % p
        _fp_trim(a)
    return a


def _fp_gcd(a: list, b: list, p: int) -> list:
    a, b = _fp_trim(list(a)), _fp_trim(list(b))
    while b:
        a, b = b, _fp_mod(a, b, p)
    return a


def _fp_frobenius(x: list, m: list, p: int) -> list:
    """x(t) -> x(t)^p mod m via square and multiply."""
    result = [1]
    base = list(x)
    e = p
    while e:
        if e & 1:
            result = _fp_mod(_fp_mul(result, base, p), m, p)
        base = _fp_mod(_fp_mul(base, base, p), m, p)
        e >>= 1
    return result


def _fp_irreducible(coeffs: list, p: int) -> bool:
    """Rabin's test for a dense polynomial of degree >= 1 over F_p."""
    f = _fp_trim(list(coeffs))
    n = len(f) - 1
    if n < 1:
        return False
    t = [0, 1]
    # h_i = t^(p^i) mod f, computed by iterating the Frobenius
    frob = {0: _fp_mod(t, f, p)}
    cur = frob[0]
    for i in range(1, n + 1):
        cur = _fp_frobenius(cur, f, p)
        frob[i] = cur
    top = [(a - b) % p for a, b in _zip_pad(frob[n], _fp_mod(t, f, p))]
    if _fp_trim(top):
        return False
    for q in _prime_divisors(n):
        mid = [(a - b) % p for a, b in _zip_pad(frob[n // q], _fp_mod(t, f, p))]
        mid = _fp_trim(mid)
        if not mid:
            return False
        g = _fp_gcd(f, mid, p)
        if len(g) - 1 >= 1:
            return False
    return True


def _zip_pad(a: list, b: list):
    n = max(len(a), len(b))
    a = a + [0] * (n - len(a))
    b = b + [0] * (n - len(b))
    return zip(a, b)


def _prime_divisors(n: int) -> list:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out
