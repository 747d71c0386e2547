"""Free multigradings on seeds and Laurent polynomials.

Grading groups are Z^rank; the homogeneity of both exchange monomials at a
vertex is what makes a grading compatible with mutation, and it forces the
degree of the mutated variable.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Mapping, Tuple

from .laurent import LaurentPolynomial
from .ratfunc import RationalFunction
from .reports import FAIL, PASS, ValidationReport
from .seeds import Seed

Degree = Tuple[int, ...]


class NotHomogeneousError(ValueError):
    """Two support monomials disagree; carries both witnesses."""

    def __init__(self, witness_a, witness_b, degree_a, degree_b):
        super().__init__(
            f"not homogeneous: exponent {witness_a} has degree {degree_a}, "
            f"exponent {witness_b} has degree {degree_b}"
        )
        self.witnesses = (witness_a, witness_b)
        self.degrees = (degree_a, degree_b)


@dataclass(frozen=True)
class Grading:
    rank: int
    degrees: Tuple[Tuple[str, Degree], ...]

    @classmethod
    def create(cls, rank: int, degrees: Mapping[str, Degree]) -> "Grading":
        if rank < 0:
            raise ValueError("grading rank must be nonnegative")
        canon = []
        for name, deg in degrees.items():
            deg = tuple(int(d) for d in deg)
            if len(deg) != rank:
                raise ValueError(f"degree of {name} has length {len(deg)}, grading rank {rank}")
            canon.append((name, deg))
        return cls(rank=rank, degrees=tuple(sorted(canon)))

    @property
    def degree_map(self) -> Dict[str, Degree]:
        return dict(self.degrees)

    def degree(self, name: str) -> Degree:
        for nm, deg in self.degrees:
            if nm == name:
                return deg
        raise KeyError(f"no degree assigned to variable {name!r}")

    def with_degree(self, name: str, deg: Degree) -> "Grading":
        degrees = self.degree_map
        degrees[name] = tuple(deg)
        return Grading.create(self.rank, degrees)


def _vadd(a: Degree, b: Degree) -> Degree:
    return tuple(x + y for x, y in zip(a, b))


def _vscale(a: Degree, s: int) -> Degree:
    return tuple(s * x for x in a)


def _vsub(a: Degree, b: Degree) -> Degree:
    return tuple(x - y for x, y in zip(a, b))


def degree_of(f: LaurentPolynomial, grading: Grading) -> Degree:
    """Common weighted degree of all support monomials; raises on zero or
    inhomogeneous input."""
    if f.is_zero:
        raise ValueError("the zero polynomial has no degree")
    degs = [grading.degree(name) for name in f.ctx.names]
    result = None
    witness = None
    for exp in f.terms:
        d = (0,) * grading.rank
        for e, vardeg in zip(exp, degs):
            if e:
                d = _vadd(d, _vscale(vardeg, e))
        if result is None:
            result, witness = d, exp
        elif d != result:
            raise NotHomogeneousError(witness, exp, result, d)
    return result


def degree_of_rational(f: RationalFunction, grading: Grading) -> Degree:
    """Degree of a quotient of homogeneous polynomials."""
    return _vsub(degree_of(f.num, grading), degree_of(f.den, grading))


def exchange_degrees(seed: Seed, grading: Grading, k: int) -> Tuple[Degree, Degree]:
    col = seed.column(k)
    plus = (0,) * grading.rank
    minus = (0,) * grading.rank
    for name, b in zip(seed.names, col):
        if b > 0:
            plus = _vadd(plus, _vscale(grading.degree(name), b))
        elif b < 0:
            minus = _vadd(minus, _vscale(grading.degree(name), -b))
    return plus, minus


def grading_is_compatible(seed: Seed, grading: Grading) -> Tuple[bool, ValidationReport]:
    """Both exchange monomials must have equal degree at every mutable vertex."""
    report = ValidationReport("grading compatibility")
    ok = True
    for k in seed.mutable:
        plus, minus = exchange_degrees(seed, grading, k)
        name = f"exchange_homogeneous[{seed.names[k]}]"
        if plus == minus:
            report.add(name, PASS, f"degree {list(plus)}")
        else:
            ok = False
            report.add(name, FAIL, f"{list(plus)} != {list(minus)}")
    return ok, report


def mutated_degree(seed: Seed, grading: Grading, k: int) -> Degree:
    """Degree forced on the new variable at k by exchange homogeneity."""
    plus, minus = exchange_degrees(seed, grading, k)
    if plus != minus:
        raise ValueError(
            f"grading incompatible at {seed.names[k]}: {list(plus)} != {list(minus)}"
        )
    return _vsub(plus, grading.degree(seed.names[k]))


def mutate_graded(seed: Seed, grading: Grading, k: int) -> Tuple[Seed, Grading]:
    """Mutate and extend the grading to the new variable."""
    new_deg = mutated_degree(seed, grading, k)
    mutated = seed.mutate(k)
    out = grading.with_degree(mutated.names[k], new_deg)
    return mutated, out
