"""Rational polyhedral cones with exact membership decisions.

Feasibility questions reduce to Fourier-Motzkin elimination over Fractions;
instance sizes are small (ranks <= 12, <= 16 generators), so no LP library
is involved.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .lattice import Vector, pairing, primitive_part

# A constraint is (coeffs, const) encoding coeffs . t + const >= 0.
_Row = tuple


def _normalize_row(coeffs, const) -> _Row:
    for c in coeffs:
        if c:
            scale = abs(c)
            return (tuple(x / scale for x in coeffs), const / scale)
    if const:
        scale = abs(const)
        return (coeffs, const / scale)
    return (coeffs, const)


def _fm_feasible(rows: list, nvars: int) -> bool:
    """Decide whether {t : coeffs.t + const >= 0 for all rows} is nonempty."""
    rows = {_normalize_row(tuple(c), k) for c, k in rows}
    remaining = list(range(nvars))
    while remaining:
        # cheapest variable first (fewest pairwise combinations)
        def cost(j):
            pos = sum(1 for c, _ in rows if c[j] > 0)
            neg = sum(1 for c, _ in rows if c[j] < 0)
            return pos * neg - pos - neg

        j = min(remaining, key=cost)
        remaining.remove(j)
        pos, neg, zero = [], [], []
        for coeffs, const in rows:
            if coeffs[j] > 0:
                pos.append((coeffs, const))
            elif coeffs[j] < 0:
                neg.append((coeffs, const))
            else:
                zero.append((coeffs, const))
        new_rows = set()
        for coeffs, const in zero:
            row = _normalize_row(coeffs, const)
            if not any(row[0][i] for i in remaining):
                if row[1] < 0:
                    return False
                continue
            new_rows.add(row)
        for cp, kp in pos:
            for cn, kn in neg:
                a, b = cp[j], -cn[j]
                coeffs = tuple(b * x + a * y for x, y in zip(cp, cn))
                const = b * kp + a * kn
                row = _normalize_row(coeffs, const)
                if not any(row[0][i] for i in remaining):
                    if row[1] < 0:
                        return False
                    continue
                new_rows.add(row)
        rows = new_rows
    return all(const >= 0 for _, const in rows)


@dataclass(frozen=True)
class Cone:
    """cone(generators) = all nonnegative rational combinations; {0} if empty."""

    rank: int
    generators: tuple

    def __init__(self, rank: int, generators: Iterable[Vector] = ()):
        gens = tuple(tuple(g) for g in generators)
        for g in gens:
            if len(g) != rank:
                raise ValueError(f"generator {g} does not have rank {rank}")
            if not any(g):
                raise ValueError("cone generators must be nonzero")
        object.__setattr__(self, "rank", rank)
        object.__setattr__(self, "generators", gens)

    @classmethod
    def zero(cls, rank: int) -> "Cone":
        return cls(rank, ())

    @property
    def is_zero(self) -> bool:
        return not self.generators

    def rays(self) -> frozenset:
        """Generators normalized to primitive vectors, as a set."""
        return frozenset(primitive_part(g) for g in self.generators)

    def contains(self, v: Vector) -> bool:
        """Exact membership: v is a nonnegative rational combination."""
        v = tuple(v)
        if len(v) != self.rank:
            raise ValueError(f"rank mismatch: {len(v)} vs {self.rank}")
        if not self.generators:
            return not any(v)
        n = len(self.generators)
        rows = []
        zero = Fraction(0)
        for i in range(n):
            coeffs = tuple(Fraction(1) if t == i else zero for t in range(n))
            rows.append((coeffs, zero))
        for d in range(self.rank):
            coeffs = tuple(Fraction(g[d]) for g in self.generators)
            const = Fraction(-v[d])
            rows.append((coeffs, const))
            rows.append((tuple(-c for c in coeffs), -const))
        return _fm_feasible(rows, n)

    def is_strongly_convex(self) -> bool:
        """True iff the cone contains no line (sigma cap -sigma = {0})."""
        if not self.generators:
            return True
        n = len(self.generators)
        zero = Fraction(0)
        base_rows = []
        for i in range(n):
            coeffs = tuple(Fraction(1) if t == i else zero for t in range(n))
            base_rows.append((coeffs, zero))
        for d in range(self.rank):
            coeffs = tuple(Fraction(g[d]) for g in self.generators)
            base_rows.append((coeffs, zero))
            base_rows.append((tuple(-c for c in coeffs), zero))
        for i in range(n):
            coeffs = tuple(Fraction(1) if t == i else zero for t in range(n))
            rows = base_rows + [(coeffs, Fraction(-1))]
            if _fm_feasible(rows, n):
                return False
        return True

    def dual_contains(self, m: Vector) -> bool:
        """True iff <g, m> >= 0 for every generator g (m lies in the dual cone)."""
        m = tuple(m)
        if len(m) != self.rank:
            raise ValueError(f"rank mismatch: {len(m)} vs {self.rank}")
        return all(pairing(g, m) >= 0 for g in self.generators)


def frozen_quadrant(rank: int, indices: Sequence[int]) -> Cone:
    """cone{e_j : j in indices} inside Z^rank."""
    gens = []
    for j in indices:
        e = [0] * rank
        e[j] = 1
        gens.append(tuple(e))
    return Cone(rank, gens)
