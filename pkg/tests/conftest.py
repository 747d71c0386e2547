"""Shared fixtures and seeded random generators for the property suites."""

from __future__ import annotations

import random
from fractions import Fraction

import pytest

from mutalg import LaurentPolynomial, RationalFunction, Seed, VariableContext

PRNG_SEED = 902210


@pytest.fixture
def rng():
    return random.Random(PRNG_SEED)


@pytest.fixture
def xy_ctx():
    return VariableContext(["x", "y"])


@pytest.fixture
def abc_ctx():
    return VariableContext(["a", "b", "c"])


def random_laurent(rng, ctx, terms=3, exp_range=(-3, 3), allow_zero=False):
    out = {}
    for _ in range(rng.randint(1, terms)):
        exp = tuple(rng.randint(*exp_range) for _ in ctx.names)
        out[exp] = Fraction(rng.choice([-3, -2, -1, 1, 2, 3]), rng.choice([1, 1, 2]))
    p = LaurentPolynomial(ctx, out)
    if p.is_zero and not allow_zero:
        return LaurentPolynomial.one(ctx)
    return p


def random_polynomial(rng, ctx, terms=3, max_exp=3, nonzero=True):
    out = {}
    for _ in range(rng.randint(1, terms)):
        exp = tuple(rng.randint(0, max_exp) for _ in ctx.names)
        out[exp] = Fraction(rng.choice([-3, -2, -1, 1, 2, 3]))
    p = LaurentPolynomial(ctx, out)
    if p.is_zero and nonzero:
        return LaurentPolynomial.one(ctx)
    return p


def random_skew_symmetric_seed(rng, max_size=5, entry_bound=2, min_mutable=1):
    """A seed with random skew-symmetric principal part, random frozen rows,
    and identity ledger."""
    n = rng.randint(2, max_size)
    names = [f"v{i}" for i in range(1, n + 1)]
    n_mut = rng.randint(min_mutable, n)
    mutable = sorted(rng.sample(range(n), n_mut))
    principal = [[0] * n_mut for _ in range(n_mut)]
    for a in range(n_mut):
        for b in range(a + 1, n_mut):
            v = rng.randint(-entry_bound, entry_bound)
            principal[a][b] = v
            principal[b][a] = -v
    columns = {}
    for col_pos, k in enumerate(mutable):
        col = [0] * n
        for row_pos, i in enumerate(mutable):
            col[i] = principal[row_pos][col_pos]
        for i in range(n):
            if i not in mutable:
                col[i] = rng.randint(-entry_bound, entry_bound)
        columns[k] = tuple(col)
    frozen = [names[i] for i in range(n) if i not in mutable]
    return Seed.create(names, frozen, columns)


def random_primitive_seed(rng, max_size=5, entry_bound=2, tries=50):
    """A random skew-symmetric seed whose every exchange column is primitive."""
    from math import gcd

    for _ in range(tries):
        seed = random_skew_symmetric_seed(rng, max_size=max_size, entry_bound=entry_bound)
        ok = True
        for _, col in seed.columns:
            g = 0
            for b in col:
                g = gcd(g, b)
            if g != 1:
                ok = False
                break
        if ok:
            return seed
    raise RuntimeError("could not sample a primitive seed")


def sympy_ratfunc(f: RationalFunction):
    """Bridge to sympy for oracle comparisons in tests only."""
    import sympy

    syms = {name: sympy.Symbol(name) for name in f.ctx.names}

    def to_expr(p: LaurentPolynomial):
        total = sympy.Integer(0)
        for exp, coeff in p.terms.items():
            term = sympy.Rational(coeff.numerator, coeff.denominator)
            for name, e in zip(p.ctx.names, exp):
                if e:
                    term *= syms[name] ** e
            total += term
        return total

    return to_expr(f.num) / to_expr(f.den)
