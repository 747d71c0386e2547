"""Minimal monomial lifting for the blow-up of projective n-space at n+2 points.

The base seed is a linear quiver on n vertices whose cluster variables are
built by the three-term recursion x_{k+1} = z_{k+1} x_k - x_{k-1}.  Orders of
vanishing along the n+3 distinguished divisors assemble the valuation matrix,
the lifted exchange matrix (B stacked over -nu*B), and a free multigrading
of rank n+3 under which every lifted exchange relation is homogeneous.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import List, Tuple

from .grading import Grading, grading_is_compatible
from .laurent import LaurentPolynomial, VariableContext
from .ratfunc import RationalFunction
from .seeds import Quiver, Seed


@dataclass(frozen=True)
class BlowupConfig:
    """Dimension n >= 2 and the n+2 blown-up points in affine coordinates:
    the n standard basis points, (-1, ..., -1), and the origin."""

    n: int

    def __post_init__(self):
        if self.n < 2:
            raise ValueError("the construction needs dimension n >= 2")

    @property
    def points(self) -> Tuple[Tuple[int, ...], ...]:
        n = self.n
        pts: List[Tuple[int, ...]] = []
        for i in range(n):
            pts.append(tuple(1 if j == i else 0 for j in range(n)))
        pts.append((-1,) * n)
        pts.append((0,) * n)
        return tuple(pts)


def affine_context(n: int) -> VariableContext:
    return VariableContext([f"z{i}" for i in range(1, n + 1)])


def base_cluster(n: int) -> List[LaurentPolynomial]:
    """x_1 = z_1 and x_{k+1} = z_{k+1} x_k - x_{k-1} (with x_0 = 1, x_-1 = 0)."""
    ctx = affine_context(n)
    prev = LaurentPolynomial.zero(ctx)
    cur = LaurentPolynomial.one(ctx)
    out = []
    for k in range(1, n + 1):
        z = LaurentPolynomial.variable(ctx, f"z{k}")
        prev, cur = cur, z * cur - prev
        out.append(cur)
    return out


def build_base_seed(n: int) -> Seed:
    """Linear quiver with arrows (i+1) -> i, the last vertex frozen."""
    if n < 2:
        raise ValueError("the construction needs dimension n >= 2")
    names = [f"x{i}" for i in range(1, n + 1)]
    arrows = [(i + 1, i, 1) for i in range(n - 1)]
    quiver = Quiver(names, [names[-1]], arrows)
    ctx = affine_context(n)
    cluster = base_cluster(n)
    ledger = {
        name: RationalFunction(poly, LaurentPolynomial.one(ctx))
        for name, poly in zip(names, cluster)
    }
    return Seed.from_quiver(quiver, ledger, ctx)


def taylor_shift(p: LaurentPolynomial, point: Tuple) -> LaurentPolynomial:
    """p(z + q) computed one variable at a time via binomial expansion."""
    if not p.is_polynomial:
        raise ValueError("taylor shift is defined for ordinary polynomials")
    for j, q in enumerate(point):
        if not q:
            continue
        q = Fraction(q)
        terms: dict = {}
        for exp, coeff in p.terms.items():
            e = exp[j]
            for i in range(e + 1):
                new_exp = exp[:j] + (i,) + exp[j + 1 :]
                add = coeff * comb(e, i) * q ** (e - i)
                acc = terms.get(new_exp, Fraction(0)) + add
                if acc:
                    terms[new_exp] = acc
                else:
                    terms.pop(new_exp, None)
        p = LaurentPolynomial._raw(p.ctx, terms)
    return p


def multiplicity_at_point(p: LaurentPolynomial, point: Tuple) -> int:
    """Order of vanishing at a rational point: least total degree after
    shifting the point to the origin."""
    if p.is_zero:
        raise ValueError("the zero polynomial vanishes to infinite order")
    return taylor_shift(p, tuple(point)).min_total_degree()


def valuation_at_infinity(p: LaurentPolynomial) -> int:
    """Order along the hyperplane at infinity: minus the total degree."""
    if p.is_zero:
        raise ValueError("the zero polynomial has no degree")
    return -p.total_degree()


def nu_matrix(cfg: BlowupConfig) -> List[List[int]]:
    """(n+3) x n matrix of negated divisorial valuations of the base cluster:
    first row from the hyperplane at infinity, then one row per blown-up point."""
    cluster = base_cluster(cfg.n)
    rows: List[List[int]] = []
    rows.append([-valuation_at_infinity(x) for x in cluster])
    for q in cfg.points:
        rows.append([-multiplicity_at_point(x, q) for x in cluster])
    return rows


@dataclass(frozen=True)
class LiftedSeed:
    base: Seed
    nu: Tuple[Tuple[int, ...], ...]
    seed: Seed
    grading: Grading

    @property
    def matrix_rows(self) -> List[List[int]]:
        """The lifted exchange matrix as dense rows (vertices x mutable)."""
        cols = self.seed.column_map
        return [[cols[k][i] for k in self.seed.mutable] for i in range(self.seed.size)]


def lifted_seed(cfg: BlowupConfig) -> LiftedSeed:
    """Assemble the lifted graded seed and check exchange homogeneity."""
    n = cfg.n
    base = build_base_seed(n)
    nu = [list(row) for row in nu_matrix(cfg)]
    base_cols = base.column_map
    names = [f"x{i}" for i in range(1, n + 1)] + [f"e{j}" for j in range(n + 3)]
    frozen = names[n - 1 : n] + names[n:]
    columns = {}
    for k in base.mutable:
        top = list(base_cols[k])
        bottom = []
        for j in range(n + 3):
            bottom.append(-sum(nu[j][i] * base_cols[k][i] for i in range(n)))
        columns[k] = tuple(top + bottom)
    seed = Seed.create(names, frozen, columns)
    degrees = {}
    for i in range(n):
        degrees[names[i]] = tuple(nu[j][i] for j in range(n + 3))
    for j in range(n + 3):
        degrees[names[n + j]] = tuple(1 if t == j else 0 for t in range(n + 3))
    grading = Grading.create(n + 3, degrees)
    ok, report = grading_is_compatible(seed, grading)
    if not ok:
        raise ValueError("lifted exchange relations are not homogeneous:\n" + report.render())
    return LiftedSeed(base=base, nu=tuple(tuple(r) for r in nu), seed=seed, grading=grading)
