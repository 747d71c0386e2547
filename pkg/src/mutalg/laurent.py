"""Sparse multivariate Laurent polynomials with exact rational coefficients.

Every value is immutable after construction and in canonical form: the term
map never stores a zero coefficient, so structural equality is semantic
equality.  Exponents may be negative; the subring of ordinary polynomials
(all exponents >= 0) is what `polyops` and `ratfunc` operate on.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Mapping, Union

from . import _kernel

_NAME_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")

Scalar = Union[int, Fraction]


class ContextMismatchError(ValueError):
    """Raised when operands live over different variable contexts."""


class VariableContext:
    """An ordered list of distinct variable names, fixed for its lifetime."""

    __slots__ = ("names", "_index")

    def __init__(self, names: Iterable[str]):
        names = tuple(names)
        for name in names:
            if not _NAME_RE.match(name):
                raise ValueError(f"invalid variable name: {name!r}")
        if len(set(names)) != len(names):
            raise ValueError(f"variable names are not distinct: {names}")
        self.names = names
        self._index = {name: i for i, name in enumerate(names)}

    @property
    def arity(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise KeyError(f"unknown variable {name!r} (context has {self.names})") from None

    def __contains__(self, name: str) -> bool:
        return name in self._index

    def __eq__(self, other) -> bool:
        return isinstance(other, VariableContext) and self.names == other.names

    def __hash__(self) -> int:
        return hash(self.names)

    def __repr__(self) -> str:
        return f"VariableContext({list(self.names)!r})"

    def zero_exponent(self) -> tuple:
        return (0,) * len(self.names)


def _as_fraction(value: Scalar) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"coefficients must be exact rationals, got {type(value).__name__}")


def _check_same_context(a: "LaurentPolynomial", b: "LaurentPolynomial") -> None:
    if a.ctx != b.ctx:
        raise ContextMismatchError(
            f"operands live over different contexts: {a.ctx.names} vs {b.ctx.names}"
        )


class LaurentPolynomial:
    """A finite map from exponent vectors to nonzero rational coefficients."""

    __slots__ = ("ctx", "terms", "_hash")

    def __init__(self, ctx: VariableContext, terms: Mapping[tuple, Scalar]):
        canon = {}
        arity = ctx.arity
        for exp, coeff in terms.items():
            exp = tuple(exp)
            if len(exp) != arity:
                raise ValueError(f"exponent {exp} has length {len(exp)}, context arity {arity}")
            if not all(isinstance(e, int) for e in exp):
                raise ValueError(f"exponent entries must be integers: {exp}")
            coeff = _as_fraction(coeff)
            if coeff:
                canon[exp] = canon.get(exp, Fraction(0)) + coeff
        self.ctx = ctx
        self.terms = {e: c for e, c in canon.items() if c}
        self._hash = None

    # -- constructors ------------------------------------------------------

    @classmethod
    def _raw(cls, ctx: VariableContext, terms: dict) -> "LaurentPolynomial":
        """Internal constructor for term maps already in canonical form."""
        self = object.__new__(cls)
        self.ctx = ctx
        self.terms = terms
        self._hash = None
        return self

    @classmethod
    def zero(cls, ctx: VariableContext) -> "LaurentPolynomial":
        return cls._raw(ctx, {})

    @classmethod
    def constant(cls, ctx: VariableContext, value: Scalar) -> "LaurentPolynomial":
        value = _as_fraction(value)
        if not value:
            return cls.zero(ctx)
        return cls._raw(ctx, {ctx.zero_exponent(): value})

    @classmethod
    def one(cls, ctx: VariableContext) -> "LaurentPolynomial":
        return cls.constant(ctx, 1)

    @classmethod
    def variable(cls, ctx: VariableContext, name: str) -> "LaurentPolynomial":
        exp = [0] * ctx.arity
        exp[ctx.index(name)] = 1
        return cls._raw(ctx, {tuple(exp): Fraction(1)})

    @classmethod
    def monomial(cls, ctx: VariableContext, exp: Iterable[int], coeff: Scalar = 1) -> "LaurentPolynomial":
        return cls(ctx, {tuple(exp): coeff})

    # -- structure ---------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def is_one(self) -> bool:
        return self.terms == {self.ctx.zero_exponent(): Fraction(1)}

    @property
    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and self.ctx.zero_exponent() in self.terms)

    @property
    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    @property
    def is_polynomial(self) -> bool:
        """True iff every exponent is componentwise nonnegative."""
        return all(e >= 0 for exp in self.terms for e in exp)

    def support(self) -> list:
        return list(self.terms.keys())

    def constant_value(self) -> Fraction:
        if not self.is_constant:
            raise ValueError("not a constant")
        return self.terms.get(self.ctx.zero_exponent(), Fraction(0))

    def total_degree(self) -> int:
        """Maximum term degree; rejects the zero polynomial (degree -inf)."""
        if not self.terms:
            raise ValueError("the zero polynomial has no degree")
        return max(sum(exp) for exp in self.terms)

    def min_total_degree(self) -> int:
        if not self.terms:
            raise ValueError("the zero polynomial has no degree")
        return min(sum(exp) for exp in self.terms)

    def min_exponents(self) -> tuple:
        """Componentwise minimum of the support (zero vector for 0)."""
        if not self.terms:
            return self.ctx.zero_exponent()
        return tuple(min(col) for col in zip(*self.terms.keys()))

    def degree_in(self, index: int) -> int:
        if not self.terms:
            raise ValueError("the zero polynomial has no degree")
        return max(exp[index] for exp in self.terms)

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other) -> "LaurentPolynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        _check_same_context(self, other)
        return LaurentPolynomial._raw(self.ctx, _kernel.kadd(self.terms, other.terms))

    __radd__ = __add__

    def __neg__(self) -> "LaurentPolynomial":
        return LaurentPolynomial._raw(self.ctx, _kernel.kneg(self.terms))

    def __sub__(self, other) -> "LaurentPolynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "LaurentPolynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other) -> "LaurentPolynomial":
        if isinstance(other, (int, Fraction)):
            return LaurentPolynomial._raw(self.ctx, _kernel.kscale(self.terms, _as_fraction(other)))
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        _check_same_context(self, other)
        return LaurentPolynomial._raw(self.ctx, _kernel.kmul(self.terms, other.terms))

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentPolynomial":
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            if not self.is_monomial:
                raise ValueError("negative powers exist only for monomials in the Laurent ring")
            ((exp, coeff),) = self.terms.items()
            return LaurentPolynomial._raw(self.ctx, {tuple(e * n for e in exp): coeff**n})
        result = LaurentPolynomial.one(self.ctx)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def shift(self, exponent: Iterable[int], factor: Scalar = 1) -> "LaurentPolynomial":
        """Multiply by the single term factor * x^exponent."""
        exponent = tuple(exponent)
        if len(exponent) != self.ctx.arity:
            raise ValueError("shift exponent has wrong arity")
        return LaurentPolynomial._raw(
            self.ctx, _kernel.kshift(self.terms, exponent, _as_fraction(factor))
        )

    def _coerce(self, other):
        if isinstance(other, LaurentPolynomial):
            return other
        if isinstance(other, (int, Fraction)):
            return LaurentPolynomial.constant(self.ctx, other)
        return NotImplemented

    # -- comparison --------------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = LaurentPolynomial.constant(self.ctx, other)
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return self.ctx == other.ctx and self.terms == other.terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.ctx, frozenset(self.terms.items())))
        return self._hash

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __repr__(self) -> str:
        from .parsing import format_laurent

        return format_laurent(self)

    __str__ = __repr__


def grlex_key(exp: tuple):
    """Sort key for the fixed graded-lexicographic order (context order)."""
    return (sum(exp), exp)


def leading_term(p: LaurentPolynomial) -> tuple:
    """(exponent, coefficient) of the grlex-largest term; p must be nonzero."""
    if p.is_zero:
        raise ValueError("the zero polynomial has no leading term")
    exp = max(p.terms, key=grlex_key)
    return exp, p.terms[exp]
