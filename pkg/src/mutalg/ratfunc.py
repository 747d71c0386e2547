"""Normalized quotients of polynomials: the common function-field elements.

Invariants: denominator nonzero, gcd(numerator, denominator) = 1, and the
denominator monic under the fixed graded-lexicographic order.  Laurent
polynomials with negative exponents convert by clearing a single monomial
denominator.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Mapping, Union

from .laurent import ContextMismatchError, LaurentPolynomial, VariableContext, leading_term
from .polyops import exact_div, monic, poly_gcd

Operand = Union["RationalFunction", LaurentPolynomial, int, Fraction]


class RationalFunction:
    """num/den in canonical form; arithmetic keeps the form canonical."""

    __slots__ = ("num", "den")

    def __init__(self, num: LaurentPolynomial, den: LaurentPolynomial):
        if num.ctx != den.ctx:
            raise ContextMismatchError("numerator and denominator contexts differ")
        if den.is_zero:
            raise ZeroDivisionError("zero denominator")
        if not (num.is_polynomial and den.is_polynomial):
            raise ValueError("numerator and denominator must be ordinary polynomials")
        if num.is_zero:
            self.num = num
            self.den = LaurentPolynomial.one(den.ctx)
            return
        g = poly_gcd(num, den)
        if not g.is_one:
            num = exact_div(num, g)
            den = exact_div(den, g)
        _, lc = leading_term(den)
        if lc != 1:
            scale = Fraction(1) / lc
            num = num * scale
            den = den * scale
        self.num = num
        self.den = den

    # -- constructors ------------------------------------------------------

    @classmethod
    def from_laurent(cls, p: LaurentPolynomial) -> "RationalFunction":
        """Clear negative exponents with a single monomial denominator."""
        mins = p.min_exponents()
        clear = tuple(max(0, -m) for m in mins)
        if any(clear):
            num = p.shift(clear)
            den = LaurentPolynomial.monomial(p.ctx, clear)
        else:
            num = p
            den = LaurentPolynomial.one(p.ctx)
        return cls(num, den)

    @classmethod
    def constant(cls, ctx: VariableContext, value) -> "RationalFunction":
        return cls(LaurentPolynomial.constant(ctx, value), LaurentPolynomial.one(ctx))

    @classmethod
    def variable(cls, ctx: VariableContext, name: str) -> "RationalFunction":
        return cls(LaurentPolynomial.variable(ctx, name), LaurentPolynomial.one(ctx))

    @property
    def ctx(self) -> VariableContext:
        return self.num.ctx

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    @property
    def is_one(self) -> bool:
        return self.num.is_one and self.den.is_one

    # -- arithmetic --------------------------------------------------------

    def _coerce(self, other: Operand):
        if isinstance(other, RationalFunction):
            return other
        if isinstance(other, LaurentPolynomial):
            return RationalFunction.from_laurent(other)
        if isinstance(other, (int, Fraction)):
            return RationalFunction.constant(self.ctx, other)
        return NotImplemented

    def __add__(self, other: Operand) -> "RationalFunction":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return RationalFunction(
            self.num * other.den + other.num * self.den, self.den * other.den
        )

    __radd__ = __add__

    def __neg__(self) -> "RationalFunction":
        out = object.__new__(RationalFunction)
        out.num = -self.num
        out.den = self.den
        return out

    def __sub__(self, other: Operand) -> "RationalFunction":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Operand) -> "RationalFunction":
        return (-self) + other

    def __mul__(self, other: Operand) -> "RationalFunction":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return RationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other: Operand) -> "RationalFunction":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if other.is_zero:
            raise ZeroDivisionError("division by the zero rational function")
        return RationalFunction(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other: Operand) -> "RationalFunction":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other / self

    def __pow__(self, n: int) -> "RationalFunction":
        if not isinstance(n, int):
            return NotImplemented
        if n == 0:
            return RationalFunction.constant(self.ctx, 1)
        num, den = self.num, self.den
        if n < 0:
            if self.is_zero:
                raise ZeroDivisionError("inverting the zero rational function")
            num, den = den, num
            n = -n
        # coprime stays coprime under powers, so skip re-normalization
        out_num, out_den = num**n, den**n
        _, lc = leading_term(out_den)
        out = object.__new__(RationalFunction)
        if lc != 1:
            scale = Fraction(1) / lc
            out.num = out_num * scale
            out.den = out_den * scale
        else:
            out.num = out_num
            out.den = out_den
        return out

    # -- structure ---------------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction, LaurentPolynomial)):
            other = self._coerce(other)
        if not isinstance(other, RationalFunction):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def __bool__(self) -> bool:
        return not self.is_zero

    def __repr__(self) -> str:
        from .parsing import format_rational

        return format_rational(self)

    __str__ = __repr__

    def as_laurent(self) -> LaurentPolynomial:
        """Laurent expansion; requires a monomial denominator (see is_laurent)."""
        p = self.try_laurent()
        if p is None:
            raise ValueError(f"not a Laurent polynomial: denominator {self.den}")
        return p

    def try_laurent(self):
        """Laurent polynomial equal to self, or None if the denominator
        is not a single monomial."""
        if self.den.is_one:
            return self.num
        if not self.den.is_monomial:
            return None
        ((exp, coeff),) = self.den.terms.items()
        return self.num.shift(tuple(-e for e in exp), Fraction(1) / coeff)

    @property
    def is_laurent(self) -> bool:
        return self.den.is_monomial

    def substitute(self, images: Mapping[str, "RationalFunction"]) -> "RationalFunction":
        """Ring-homomorphic substitution; every context variable needs an image."""
        num = substitute_laurent(self.num, images)
        den = substitute_laurent(self.den, images)
        if den.is_zero:
            raise ZeroDivisionError("substitution sends the denominator to zero")
        return num / den


def substitute_laurent(
    p: LaurentPolynomial, images: Mapping[str, RationalFunction]
) -> RationalFunction:
    """Evaluate a Laurent polynomial on RationalFunction images of its variables."""
    target_ctx = None
    for name in p.ctx.names:
        if name not in images:
            raise KeyError(f"no image provided for variable {name!r}")
        img = images[name]
        if target_ctx is None:
            target_ctx = img.ctx
        elif img.ctx != target_ctx:
            raise ContextMismatchError("substitution images live over different contexts")
    if target_ctx is None:
        raise ValueError("cannot substitute over an empty context")
    imgs = [images[name] for name in p.ctx.names]
    total = RationalFunction.constant(target_ctx, 0)
    for exp, coeff in p.terms.items():
        term = RationalFunction.constant(target_ctx, coeff)
        for img, e in zip(imgs, exp):
            if e:
                term = term * img**e
        total = total + term
    return total
