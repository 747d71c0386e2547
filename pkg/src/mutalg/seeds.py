"""Seeds of geometric type: exchange matrices, quivers, and mutation.

A seed tracks every cluster variable as a normalized rational function in a
fixed initial coordinate context (the ledger), so mutation identities can be
checked exactly.  Seeds are immutable; mutation returns a new seed.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Dict, Iterable, Mapping, Optional, Sequence, Tuple

from .laurent import LaurentPolynomial, VariableContext
from .ratfunc import RationalFunction

Column = Tuple[int, ...]


def mutate_columns(columns: Mapping[int, Column], k: int) -> Dict[int, Column]:
    """Matrix mutation in direction k on a column map {mutable index: column}."""
    if k not in columns:
        raise ValueError(f"vertex {k} is not mutable")
    col_k = columns[k]
    out: Dict[int, Column] = {}
    for j, col in columns.items():
        if j == k:
            out[j] = tuple(-b for b in col)
            continue
        b_kj = col[k]
        new_col = []
        for i, b_ij in enumerate(col):
            if i == k:
                new_col.append(-b_ij)
            else:
                b_ik = col_k[i]
                sign = (b_ik > 0) - (b_ik < 0)
                new_col.append(b_ij + sign * max(0, b_ik * b_kj))
        out[j] = tuple(new_col)
    return out


def skew_symmetrizer(matrix: Sequence[Sequence[int]]) -> Optional[Tuple[int, ...]]:
    """Positive integer diagonal D with D*B skew-symmetric, or None.

    Decided by the sign-pattern check plus propagating the multiplicative
    constraints along a spanning forest and verifying every entry.
    """
    n = len(matrix)
    for row in matrix:
        if len(row) != n:
            raise ValueError("matrix must be square")
    for i in range(n):
        if matrix[i][i] != 0:
            return None
        for j in range(i + 1, n):
            a, b = matrix[i][j], matrix[j][i]
            if a * b > 0 or (a == 0) != (b == 0):
                return None
    d = [None] * n
    for root in range(n):
        if d[root] is not None:
            continue
        d[root] = Fraction(1)
        stack = [root]
        while stack:
            i = stack.pop()
            for j in range(n):
                if matrix[i][j] != 0 and d[j] is None:
                    d[j] = -d[i] * Fraction(matrix[i][j], matrix[j][i])
                    stack.append(j)
    for i in range(n):
        for j in range(n):
            if d[i] * matrix[i][j] != -d[j] * matrix[j][i]:
                return None
    denom_lcm = 1
    for v in d:
        denom_lcm = denom_lcm * v.denominator // gcd(denom_lcm, v.denominator)
    ints = [int(v * denom_lcm) for v in d]
    g = 0
    for v in ints:
        g = gcd(g, v)
    return tuple(v // g for v in ints)


class Quiver:
    """Vertices with frozen markers plus an arrow multiset (source, target)."""

    def __init__(self, names: Iterable[str], frozen: Iterable[str], arrows: Iterable[tuple]):
        self.names = tuple(names)
        index = {name: i for i, name in enumerate(self.names)}
        frozen = set(frozen)
        unknown = frozen - set(self.names)
        if unknown:
            raise ValueError(f"frozen markers for unknown vertices: {sorted(unknown)}")
        self.frozen = frozenset(index[name] for name in frozen)
        self.arrows: Dict[tuple, int] = {}
        for arrow in arrows:
            src, dst, mult = arrow
            if isinstance(src, str):
                src = index[src]
            if isinstance(dst, str):
                dst = index[dst]
            if not (0 <= src < len(self.names) and 0 <= dst < len(self.names)):
                raise ValueError(f"arrow {arrow} references a missing vertex")
            if mult < 1:
                raise ValueError("arrow multiplicity must be positive")
            self.arrows[(src, dst)] = self.arrows.get((src, dst), 0) + mult

    def mutable_indices(self) -> Tuple[int, ...]:
        return tuple(i for i in range(len(self.names)) if i not in self.frozen)

    def columns(self) -> Dict[int, Column]:
        """b_{jk} = arrows(j -> k) - arrows(k -> j), for k mutable."""
        cols = {}
        n = len(self.names)
        for k in self.mutable_indices():
            cols[k] = tuple(
                self.arrows.get((j, k), 0) - self.arrows.get((k, j), 0) for j in range(n)
            )
        return cols


@dataclass(frozen=True)
class Seed:
    names: Tuple[str, ...]
    mutable: Tuple[int, ...]
    columns: Tuple[Tuple[int, Column], ...]  # sorted (k, column) pairs
    initial_ctx: VariableContext
    ledger: Tuple[RationalFunction, ...]
    base_names: Tuple[str, ...]
    mutation_counts: Tuple[int, ...]

    @classmethod
    def create(
        cls,
        names: Iterable[str],
        frozen: Iterable[str],
        columns: Mapping[int, Column],
        ledger: Optional[Mapping[str, RationalFunction]] = None,
        initial_ctx: Optional[VariableContext] = None,
    ) -> "Seed":
        names = tuple(names)
        n = len(names)
        index = {name: i for i, name in enumerate(names)}
        frozen_idx = frozenset(index[f] for f in frozen)
        mutable = tuple(i for i in range(n) if i not in frozen_idx)
        cols = {}
        for k, col in columns.items():
            col = tuple(col)
            if k not in mutable:
                raise ValueError(f"column given for frozen vertex {names[k]}")
            if len(col) != n:
                raise ValueError("column length must equal the number of vertices")
            cols[k] = col
        for k in mutable:
            cols.setdefault(k, (0,) * n)
        principal = [[cols[j][i] for j in mutable] for i in mutable]
        if mutable and skew_symmetrizer(principal) is None:
            raise ValueError("principal part is not skew-symmetrizable")
        if ledger is None:
            if initial_ctx is None:
                initial_ctx = VariableContext(names)
            entries = tuple(RationalFunction.variable(initial_ctx, nm) for nm in names)
        else:
            if initial_ctx is None:
                raise ValueError("a ledger needs an explicit initial context")
            entries = []
            for nm in names:
                if nm not in ledger:
                    raise ValueError(f"ledger missing entry for vertex {nm}")
                entry = ledger[nm]
                if entry.ctx != initial_ctx:
                    raise ValueError(f"ledger entry for {nm} is not over the initial context")
                entries.append(entry)
            entries = tuple(entries)
        return cls(
            names=names,
            mutable=mutable,
            columns=tuple(sorted(cols.items())),
            initial_ctx=initial_ctx,
            ledger=entries,
            base_names=names,
            mutation_counts=(0,) * n,
        )

    @classmethod
    def from_quiver(
        cls,
        quiver: Quiver,
        ledger: Optional[Mapping[str, RationalFunction]] = None,
        initial_ctx: Optional[VariableContext] = None,
    ) -> "Seed":
        frozen_names = [quiver.names[i] for i in sorted(quiver.frozen)]
        return cls.create(quiver.names, frozen_names, quiver.columns(), ledger, initial_ctx)

    # -- structure -----------------------------------------------------------

    @property
    def size(self) -> int:
        return len(self.names)

    @property
    def column_map(self) -> Dict[int, Column]:
        return dict(self.columns)

    @property
    def frozen_indices(self) -> Tuple[int, ...]:
        mut = set(self.mutable)
        return tuple(i for i in range(self.size) if i not in mut)

    def seed_ctx(self) -> VariableContext:
        """The seed's own cluster as a variable context."""
        return VariableContext(self.names)

    def vertex_index(self, vertex) -> int:
        """Resolve a vertex given by current name, original name, or 1-based
        position (original names stay valid after the vertex was renamed by
        mutation)."""
        if isinstance(vertex, str):
            if vertex in self.names:
                return self.names.index(vertex)
            if vertex in self.base_names:
                return self.base_names.index(vertex)
        if isinstance(vertex, int):
            if 1 <= vertex <= self.size:
                return vertex - 1
            raise ValueError(f"vertex position {vertex} out of range 1..{self.size}")
        raise ValueError(f"unknown vertex {vertex!r}")

    def column(self, k: int) -> Column:
        cols = self.column_map
        if k not in cols:
            raise ValueError(f"vertex {self.names[k]} is frozen")
        return cols[k]

    def principal_part(self) -> list:
        cols = self.column_map
        return [[cols[j][i] for j in self.mutable] for i in self.mutable]

    def is_degenerate_at(self, k: int) -> bool:
        """True when the exchange column at k is identically zero."""
        return not any(self.column(k))

    # -- mutation ------------------------------------------------------------

    def exchange_binomials(self, k: int) -> Tuple[LaurentPolynomial, LaurentPolynomial]:
        """The two exchange monomials at k, in the seed's own variables."""
        col = self.column(k)
        ctx = self.seed_ctx()
        plus = tuple(max(0, b) for b in col)
        minus = tuple(max(0, -b) for b in col)
        return (LaurentPolynomial.monomial(ctx, plus), LaurentPolynomial.monomial(ctx, minus))

    def _ledger_monomial(self, exponents: Sequence[int]) -> RationalFunction:
        value = RationalFunction.constant(self.initial_ctx, 1)
        for entry, e in zip(self.ledger, exponents):
            if e:
                value = value * entry**e
        return value

    def mutate(self, k: int) -> "Seed":
        col = self.column(k)
        plus = self._ledger_monomial([max(0, b) for b in col])
        minus = self._ledger_monomial([max(0, -b) for b in col])
        new_entry = (plus + minus) / self.ledger[k]
        counts = list(self.mutation_counts)
        counts[k] += 1
        name = f"{self.base_names[k]}_m{counts[k]}"
        while name in self.names:
            counts[k] += 1
            name = f"{self.base_names[k]}_m{counts[k]}"
        names = list(self.names)
        names[k] = name
        ledger = list(self.ledger)
        ledger[k] = new_entry
        return Seed(
            names=tuple(names),
            mutable=self.mutable,
            columns=tuple(sorted(mutate_columns(self.column_map, k).items())),
            initial_ctx=self.initial_ctx,
            ledger=tuple(ledger),
            base_names=self.base_names,
            mutation_counts=tuple(counts),
        )

    def mutate_sequence(self, ks: Iterable[int]) -> "Seed":
        seed = self
        for k in ks:
            seed = seed.mutate(k)
        return seed

    # -- predicates ------------------------------------------------------------

    def is_maximal_rank(self) -> bool:
        """rank(B) over Q equals the number of mutable vertices."""
        cols = self.column_map
        if not self.mutable:
            return True
        rows = [[Fraction(cols[j][i]) for j in self.mutable] for i in range(self.size)]
        return _rank(rows) == len(self.mutable)

    def is_primitive(self) -> bool:
        """Every exchange-matrix column has entry gcd 1."""
        for _, col in self.columns:
            g = 0
            for b in col:
                g = gcd(g, b)
            if g != 1:
                return False
        return True


def _rank(rows: list) -> int:
    rows = [row[:] for row in rows]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    pivot_row = 0
    for col in range(ncols):
        pivot = None
        for r in range(pivot_row, len(rows)):
            if rows[r][col]:
                pivot = r
                break
        if pivot is None:
            continue
        rows[pivot_row], rows[pivot] = rows[pivot], rows[pivot_row]
        pv = rows[pivot_row][col]
        for r in range(pivot_row + 1, len(rows)):
            if rows[r][col]:
                factor = rows[r][col] / pv
                rows[r] = [a - factor * b for a, b in zip(rows[r], rows[pivot_row])]
        pivot_row += 1
        rank += 1
    return rank
