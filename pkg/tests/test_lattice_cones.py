import random
from fractions import Fraction
from itertools import combinations

import pytest

from mutalg import Cone, LaurentPolynomial, is_primitive, monomial_valuation, pairing
from mutalg.cones import frozen_quadrant
from conftest import PRNG_SEED, random_laurent


def test_pairing_examples():
    assert pairing((1, 0), (0, 5)) == 0
    assert pairing((0, 1, 0), (0, 1, 0)) == 1
    assert pairing((2, -1), (3, 4)) == 2
    with pytest.raises(ValueError):
        pairing((1, 0), (1, 0, 0))


def test_is_primitive_examples():
    assert is_primitive((1, 0, 0))
    assert not is_primitive((2, 4))
    assert is_primitive((3, 5))
    with pytest.raises(ValueError):
        is_primitive((0, 0))


def test_cone_contains_examples():
    quadrant = Cone(2, [(1, 0), (0, 1)])
    assert quadrant.contains((3, 2))
    assert Cone.zero(2).contains((0, 0))
    assert not Cone.zero(2).contains((1, 0))
    wedge = Cone(2, [(1, 1), (1, -1)])
    # solving the 2x2 system gives coefficients (1/2, -1/2)
    assert not wedge.contains((0, 1))
    assert wedge.contains((2, 0))


def test_strongly_convex_examples():
    assert Cone(2, [(1, 0), (0, 1)]).is_strongly_convex()
    assert not Cone(2, [(1, 0), (-1, 0)]).is_strongly_convex()
    assert Cone(2, [(1, 0), (1, 1), (1, -1)]).is_strongly_convex()
    assert Cone.zero(3).is_strongly_convex()


def test_strongly_convex_fails_with_opposite_generators():
    rng = random.Random(PRNG_SEED)
    for _ in range(50):
        v = tuple(rng.randint(-3, 3) for _ in range(3))
        if not any(v):
            continue
        others = [tuple(rng.randint(-2, 2) for _ in range(3)) for _ in range(2)]
        gens = [v, tuple(-e for e in v)] + [o for o in others if any(o)]
        assert not Cone(3, gens).is_strongly_convex()


def test_dual_contains_examples():
    assert Cone.zero(2).dual_contains((5, -7))
    frozen = frozen_quadrant(3, [0, 2])
    assert not frozen.dual_contains((1, 4, -1))
    assert frozen.dual_contains((0, -9, 2))
    ray = Cone(2, [(1, 2)])
    assert ray.dual_contains((2, -1))


def test_dual_semigroup_closure():
    rng = random.Random(PRNG_SEED)
    for _ in range(100):
        gens = [tuple(rng.randint(-2, 2) for _ in range(3)) for _ in range(3)]
        gens = [g for g in gens if any(g)]
        if not gens:
            continue
        cone = Cone(3, gens)
        m1 = tuple(rng.randint(-3, 3) for _ in range(3))
        m2 = tuple(rng.randint(-3, 3) for _ in range(3))
        if cone.dual_contains(m1) and cone.dual_contains(m2):
            assert cone.dual_contains(tuple(a + b for a, b in zip(m1, m2)))


def _solve_exact(columns, target):
    """Unique solution of the full-column-rank system, or None."""
    rows = len(target)
    cols = len(columns)
    matrix = [[Fraction(columns[j][i]) for j in range(cols)] + [Fraction(target[i])] for i in range(rows)]
    pivot_row = 0
    pivots = []
    for col in range(cols):
        pr = None
        for r in range(pivot_row, rows):
            if matrix[r][col]:
                pr = r
                break
        if pr is None:
            return None  # dependent columns: skip this subset
        matrix[pivot_row], matrix[pr] = matrix[pr], matrix[pivot_row]
        pv = matrix[pivot_row][col]
        matrix[pivot_row] = [v / pv for v in matrix[pivot_row]]
        for r in range(rows):
            if r != pivot_row and matrix[r][col]:
                factor = matrix[r][col]
                matrix[r] = [a - factor * b for a, b in zip(matrix[r], matrix[pivot_row])]
        pivots.append(col)
        pivot_row += 1
    for r in range(pivot_row, rows):
        if matrix[r][cols]:
            return None  # inconsistent
    return [matrix[i][cols] for i in range(len(pivots))]


def _cone_contains_bruteforce(generators, v):
    """Independent oracle: search a nonnegative solution over every linearly
    independent generator subset (small-denominator solutions via elimination)."""
    if not any(v):
        return True
    dim = len(v)
    for size in range(1, min(len(generators), dim) + 1):
        for subset in combinations(generators, size):
            sol = _solve_exact(subset, v)
            if sol is not None and all(x >= 0 for x in sol):
                return True
    return False


def test_cone_contains_matches_bruteforce():
    rng = random.Random(PRNG_SEED)
    checked = 0
    for _ in range(250):
        dim = rng.choice([2, 3])
        gens = []
        for _ in range(rng.randint(1, 4)):
            g = tuple(rng.randint(-3, 3) for _ in range(dim))
            if any(g):
                gens.append(g)
        if not gens:
            continue
        cone = Cone(dim, gens)
        v = tuple(rng.randint(-4, 4) for _ in range(dim))
        assert cone.contains(v) == _cone_contains_bruteforce(gens, v), (gens, v)
        checked += 1
    assert checked >= 200


def test_monomial_valuation_examples(xy_ctx):
    x = LaurentPolynomial.variable(xy_ctx, "x")
    y = LaurentPolynomial.variable(xy_ctx, "y")
    assert monomial_valuation((1, 0), x + y) == 0
    assert monomial_valuation((1, 0), x**3) == 3
    assert monomial_valuation((1, 1), x**-1 * y + x * y**-2) == -1
    with pytest.raises(ValueError):
        monomial_valuation((1, 0), LaurentPolynomial.zero(xy_ctx))


def test_valuation_additivity(xy_ctx):
    rng = random.Random(PRNG_SEED)
    for _ in range(200):
        w = tuple(rng.randint(-2, 2) for _ in range(2))
        f = random_laurent(rng, xy_ctx)
        g = random_laurent(rng, xy_ctx)
        assert monomial_valuation(w, f * g) == monomial_valuation(w, f) + monomial_valuation(w, g)
        s = f + g
        if not s.is_zero:
            assert monomial_valuation(w, s) >= min(
                monomial_valuation(w, f), monomial_valuation(w, g)
            )


def test_cone_rejects_zero_generator():
    with pytest.raises(ValueError):
        Cone(2, [(0, 0)])
