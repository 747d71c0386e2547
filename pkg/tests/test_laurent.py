import random
from fractions import Fraction

import pytest

from mutalg import ContextMismatchError, LaurentPolynomial, VariableContext
from conftest import PRNG_SEED, random_laurent


def test_context_rejects_duplicates_and_bad_names():
    with pytest.raises(ValueError):
        VariableContext(["x", "x"])
    with pytest.raises(ValueError):
        VariableContext(["2x"])
    with pytest.raises(ValueError):
        VariableContext(["x-y"])


def test_canonical_form_drops_zero_coefficients(xy_ctx):
    p = LaurentPolynomial(xy_ctx, {(1, 0): 1, (0, 1): Fraction(0)})
    assert list(p.terms) == [(1, 0)]


def test_add_cancellation(xy_ctx):
    x = LaurentPolynomial.variable(xy_ctx, "x")
    y = LaurentPolynomial.variable(xy_ctx, "y")
    assert (x + y) + (-x) == y
    assert x + LaurentPolynomial.zero(xy_ctx) == x
    one = LaurentPolynomial.one(xy_ctx)
    left = one + x**-1
    right = one + x
    assert left + right == 2 + x + x**-1


def test_mul_examples(xy_ctx):
    x = LaurentPolynomial.variable(xy_ctx, "x")
    y = LaurentPolynomial.variable(xy_ctx, "y")
    assert (x - y) * (x + y) == x**2 - y**2
    assert x**-1 * x == LaurentPolynomial.one(xy_ctx)
    v = LaurentPolynomial.monomial(xy_ctx, (2, -1))
    assert (1 + v) * LaurentPolynomial.one(xy_ctx) == 1 + v


def test_context_mismatch_raises(xy_ctx, abc_ctx):
    x = LaurentPolynomial.variable(xy_ctx, "x")
    a = LaurentPolynomial.variable(abc_ctx, "a")
    with pytest.raises(ContextMismatchError):
        x + a
    with pytest.raises(ContextMismatchError):
        x * a


def test_negative_power_needs_monomial(xy_ctx):
    x = LaurentPolynomial.variable(xy_ctx, "x")
    y = LaurentPolynomial.variable(xy_ctx, "y")
    assert (x * y**-2) ** -3 == LaurentPolynomial.monomial(xy_ctx, (-3, 6))
    with pytest.raises(ValueError):
        (x + y) ** -1


def test_zero_degree_rejected(xy_ctx):
    with pytest.raises(ValueError):
        LaurentPolynomial.zero(xy_ctx).total_degree()


def test_equality_is_semantic(xy_ctx):
    x = LaurentPolynomial.variable(xy_ctx, "x")
    p = (x + 1) * (x - 1)
    q = x**2 - 1
    assert p == q
    assert hash(p) == hash(q)


def test_ring_axioms_on_random_triples(xy_ctx):
    rng = random.Random(PRNG_SEED)
    zero = LaurentPolynomial.zero(xy_ctx)
    one = LaurentPolynomial.one(xy_ctx)
    for _ in range(1000):
        f = random_laurent(rng, xy_ctx, allow_zero=True)
        g = random_laurent(rng, xy_ctx, allow_zero=True)
        h = random_laurent(rng, xy_ctx, allow_zero=True)
        assert (f + g) + h == f + (g + h)
        assert f + g == g + f
        assert (f * g) * h == f * (g * h)
        assert f * g == g * f
        assert f * (g + h) == f * g + f * h
        assert f + zero == f
        assert f * one == f
        assert f + (-f) == zero
