"""Exact division and GCD for ordinary (nonnegative-exponent) polynomials.

GCDs are computed by a recursive primitive-PRS method, one variable at a
time, and normalized monic under the fixed graded-lexicographic order.
Inputs are LaurentPolynomial values whose support must be polynomial.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Optional

from .laurent import LaurentPolynomial, VariableContext, grlex_key, leading_term


class NotDivisibleError(ArithmeticError):
    """Exact polynomial division failed: the divisor does not divide."""


def _require_polynomial(p: LaurentPolynomial, what: str) -> None:
    if not p.is_polynomial:
        raise ValueError(f"{what} must have nonnegative exponents")


def monic(p: LaurentPolynomial) -> LaurentPolynomial:
    """Scale so the grlex-leading coefficient is 1; zero stays zero."""
    if p.is_zero:
        return p
    _, lc = leading_term(p)
    if lc == 1:
        return p
    return p * (Fraction(1) / lc)


def try_exact_div(f: LaurentPolynomial, g: LaurentPolynomial) -> Optional[LaurentPolynomial]:
    """Quotient q with f = q*g exactly, or None when g does not divide f."""
    if g.is_zero:
        raise ZeroDivisionError("division by the zero polynomial")
    _require_polynomial(f, "dividend")
    _require_polynomial(g, "divisor")
    if f.is_zero:
        return f
    eg, cg = leading_term(g)
    rem = dict(f.terms)
    quot: dict = {}
    while rem:
        ef = max(rem, key=grlex_key)
        diff = tuple(a - b for a, b in zip(ef, eg))
        if any(d < 0 for d in diff):
            return None
        ratio = rem[ef] / cg
        quot[diff] = ratio
        for exp, coeff in g.terms.items():
            target = tuple(a + b for a, b in zip(diff, exp))
            acc = rem.get(target, Fraction(0)) - ratio * coeff
            if acc:
                rem[target] = acc
            else:
                rem.pop(target, None)
    return LaurentPolynomial._raw(f.ctx, quot)


def exact_div(f: LaurentPolynomial, g: LaurentPolynomial) -> LaurentPolynomial:
    q = try_exact_div(f, g)
    if q is None:
        raise NotDivisibleError(f"{g} does not divide {f}")
    return q


# -- primitive PRS gcd -----------------------------------------------------


def _split_univar(p: LaurentPolynomial, j: int) -> list:
    """Coefficient list c_0..c_d of p viewed in variable j (c_i over same ctx)."""
    deg = max((exp[j] for exp in p.terms), default=0)
    coeffs = [dict() for _ in range(deg + 1)]
    for exp, coeff in p.terms.items():
        stripped = exp[:j] + (0,) + exp[j + 1 :]
        coeffs[exp[j]][stripped] = coeff
    return [LaurentPolynomial._raw(p.ctx, c) for c in coeffs]


def _join_univar(coeffs: list, j: int, ctx: VariableContext) -> LaurentPolynomial:
    terms: dict = {}
    for i, c in enumerate(coeffs):
        for exp, coeff in c.terms.items():
            terms[exp[:j] + (i,) + exp[j + 1 :]] = coeff
    return LaurentPolynomial._raw(ctx, terms)


def _trim(coeffs: list) -> list:
    while coeffs and coeffs[-1].is_zero:
        coeffs.pop()
    return coeffs


def _list_content(coeffs: list, ctx: VariableContext) -> LaurentPolynomial:
    acc = LaurentPolynomial.zero(ctx)
    for c in coeffs:
        if c.is_zero:
            continue
        acc = poly_gcd(acc, c) if not acc.is_zero else monic(c)
        if acc.is_one:
            break
    return acc


def _list_div(coeffs: list, d: LaurentPolynomial) -> list:
    return [exact_div(c, d) if not c.is_zero else c for c in coeffs]


def _prem(a: list, b: list, ctx: VariableContext) -> list:
    """Remainder of a by b up to content factors (deg a >= deg b >= 0).

    Uses an exact-quotient step whenever the leading coefficient divides, and
    strips content after every scaled step; the result is only ever used up
    to content, so this keeps coefficient growth linear at desk scale.
    """
    r = list(a)
    lb = b[-1]
    db = len(b) - 1
    lb_const = lb.constant_value() if lb.is_constant else None
    while True:
        _trim(r)
        if len(r) - 1 < db or not r:
            return r
        lr = r[-1]
        k = len(r) - 1 - db
        if lb_const is not None:
            factor = lr * (Fraction(1) / lb_const)
            for i, bc in enumerate(b):
                r[i + k] = r[i + k] - factor * bc
            continue
        quotient = try_exact_div(lr, lb)
        if quotient is not None:
            for i, bc in enumerate(b):
                r[i + k] = r[i + k] - quotient * bc
            continue
        r = [c * lb for c in r]
        for i, bc in enumerate(b):
            r[i + k] = r[i + k] - lr * bc
        _trim(r)
        if r:
            cont = _list_content(r, ctx)
            if not cont.is_one:
                r = _list_div(r, cont)


def poly_gcd(f: LaurentPolynomial, g: LaurentPolynomial) -> LaurentPolynomial:
    """Monic gcd; fast paths for zero, constants, and monomial arguments."""
    _require_polynomial(f, "gcd argument")
    _require_polynomial(g, "gcd argument")
    if f.is_zero and g.is_zero:
        raise ValueError("gcd(0, 0) is undefined")
    if f.is_zero:
        return monic(g)
    if g.is_zero:
        return monic(f)
    if f.is_constant or g.is_constant:
        return LaurentPolynomial.one(f.ctx)
    if f.is_monomial or g.is_monomial:
        exp = tuple(min(a, b) for a, b in zip(f.min_exponents(), g.min_exponents()))
        return LaurentPolynomial.monomial(f.ctx, exp)
    ctx = f.ctx
    # common monomial factor out front (cheap, then both have a variable-free term pattern)
    shift = tuple(min(a, b) for a, b in zip(f.min_exponents(), g.min_exponents()))
    if any(shift):
        neg = tuple(-s for s in shift)
        inner = poly_gcd(f.shift(neg), g.shift(neg))
        return inner.shift(shift)
    main = _pick_main_variable(f, g)
    if main is None:
        return LaurentPolynomial.one(ctx)
    F = _trim(_split_univar(f, main))
    G = _trim(_split_univar(g, main))
    cf = _list_content(F, ctx)
    cg = _list_content(G, ctx)
    cont = poly_gcd(cf, cg)
    a = _list_div(F, cf)
    b = _list_div(G, cg)
    if len(a) < len(b):
        a, b = b, a
    if _coprime_by_specialization(a, b, main, ctx):
        return monic(cont)
    while True:
        if len(b) == 1:
            prim = [LaurentPolynomial.one(ctx)]
            break
        r = _prem(a, b, ctx)
        if not r:
            prim = _list_div(b, _list_content(b, ctx))
            break
        a, b = b, _list_div(r, _list_content(r, ctx))
    gcd_main = _join_univar(prim, main, ctx)
    return monic(gcd_main * cont)


def _eval_at(p: LaurentPolynomial, point: dict) -> Fraction:
    """Evaluate at integer values for every variable except those set to None."""
    total = Fraction(0)
    for exp, coeff in p.terms.items():
        value = coeff
        for j, e in enumerate(exp):
            if e:
                value = value * Fraction(point[j]) ** e
        total += value
    return total


_SPECIALIZATION_POINTS = ((2, 3, 5, 7, 11, 13), (3, 5, 7, 11, 13, 17), (5, 7, 11, 13, 17, 19))


def _coprime_by_specialization(a: list, b: list, main: int, ctx: VariableContext) -> bool:
    """Sound fast path: if a univariate specialization (preserving both main
    degrees) has gcd 1, the primitive parts are coprime."""
    nvars = ctx.arity
    if nvars == 1:
        return False
    for base in _SPECIALIZATION_POINTS:
        point = {}
        idx = 0
        for j in range(nvars):
            if j == main:
                continue
            point[j] = base[idx % len(base)] + idx
            idx += 1
        if _eval_at(a[-1], point) == 0 or _eval_at(b[-1], point) == 0:
            continue
        fa = [_eval_at(c, point) for c in a]
        fb = [_eval_at(c, point) for c in b]
        return _univar_gcd_degree(fa, fb) == 0
    return False


def _univar_gcd_degree(fa: list, fb: list) -> int:
    """Degree of the gcd of dense rational coefficient lists (both nonzero)."""

    def trim(c):
        while c and c[-1] == 0:
            c.pop()
        return c

    fa, fb = trim(list(fa)), trim(list(fb))
    while fb:
        # remainder of fa by fb with monic normalization
        inv = Fraction(1) / fb[-1]
        fb = [c * inv for c in fb]
        while len(fa) >= len(fb):
            lead = fa[-1]
            k = len(fa) - len(fb)
            for i, c in enumerate(fb):
                fa[i + k] = fa[i + k] - lead * c
            trim(fa)
            if not fa:
                break
        fa, fb = fb, fa
    return len(fa) - 1


def _pick_main_variable(f: LaurentPolynomial, g: LaurentPolynomial) -> Optional[int]:
    best = None
    best_deg = None
    for j in range(f.ctx.arity):
        dj = 0
        for p in (f, g):
            for exp in p.terms:
                if exp[j] > dj:
                    dj = exp[j]
        if dj > 0 and (best_deg is None or dj < best_deg):
            best, best_deg = j, dj
    return best


def content(p: LaurentPolynomial) -> Fraction:
    """Rational content: gcd of numerators over lcm of denominators (positive)."""
    if p.is_zero:
        raise ValueError("the zero polynomial has no content")
    from math import gcd, lcm

    nums = [abs(c.numerator) for c in p.terms.values()]
    dens = [c.denominator for c in p.terms.values()]
    g = 0
    for n in nums:
        g = gcd(g, n)
    return Fraction(g, lcm(*dens) if len(dens) > 1 else dens[0])
