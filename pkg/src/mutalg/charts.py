"""Semigroup-algebra charts, mutation transitions, and membership tests.

A chart is a coordinate context, a strongly convex cone in its own lattice,
and explicit substitutions to and from the reference chart.  Membership of a
function in a chart ring means: its expression in the chart's coordinates is
a Laurent polynomial whose every support exponent lies in the dual cone.
Intersections of charts give the upper-cluster and semigroup-algebra rings.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from .cones import Cone, frozen_quadrant
from .lattice import Vector, monomial_valuation, primitive_part
from .laurent import LaurentPolynomial, VariableContext
from .mutdatum import MutationDatum, datum_validate
from .parsing import format_laurent
from .ratfunc import RationalFunction
from .reports import (
    FAIL,
    PASS,
    SURROGATE_FAIL,
    SURROGATE_PASS,
    UNCHECKED,
    ValidationReport,
)
from .seeds import Seed


@dataclass(frozen=True)
class Chart:
    label: str
    ctx: VariableContext
    cone: Cone
    to_reference: Tuple[Tuple[str, RationalFunction], ...]
    from_reference: Tuple[Tuple[str, RationalFunction], ...]
    datum: Optional[MutationDatum] = None

    @classmethod
    def reference(cls, ctx: VariableContext, cone: Cone, label: str = "reference") -> "Chart":
        ident = tuple((name, RationalFunction.variable(ctx, name)) for name in ctx.names)
        return cls(label=label, ctx=ctx, cone=cone, to_reference=ident, from_reference=ident)

    @property
    def to_reference_map(self) -> Dict[str, RationalFunction]:
        return dict(self.to_reference)

    @property
    def from_reference_map(self) -> Dict[str, RationalFunction]:
        return dict(self.from_reference)


@dataclass(frozen=True)
class ChartTransition:
    """A mutation datum together with the chart pair it connects.

    On monomials the pullback acts by x^m -> x^m h^{-<u,m>}; the inverse uses
    the opposite sign.
    """

    datum: MutationDatum
    source: str
    target: str


@dataclass
class MembershipCertificate:
    chart: str
    member: bool
    detail: str

    def render(self) -> str:
        verdict = "member" if self.member else "NOT a member"
        return f"[{self.chart}] {verdict}: {self.detail}"


@dataclass(frozen=True)
class MSAPresentation:
    """Reference chart plus mutation-adjacent charts; the ring is the
    intersection of all the chart rings."""

    label: str
    reference: Chart
    charts: Tuple[Chart, ...]
    height_one_declared: bool = False

    def all_charts(self) -> Tuple[Chart, ...]:
        return (self.reference,) + self.charts


# -- transitions -------------------------------------------------------------


def transition_from_datum(
    d: MutationDatum, ctx: VariableContext
) -> Tuple[Dict[str, RationalFunction], Dict[str, RationalFunction]]:
    """Substitution maps (forward, inverse) on the coordinates of ctx.

    forward realizes x^m -> x^m h^{-<u,m>}; inverse uses +<u,m>; the two
    compose to the identity because h is supported on the orthogonal of u.
    """
    if d.g.ctx != ctx:
        raise ValueError("datum polynomial is not over the given context")
    if len(d.u) != ctx.arity:
        raise ValueError("datum vector rank does not match the context")
    h = RationalFunction.from_laurent(d.h)
    forward: Dict[str, RationalFunction] = {}
    inverse: Dict[str, RationalFunction] = {}
    for name, u_i in zip(ctx.names, d.u):
        x_i = RationalFunction.variable(ctx, name)
        if u_i:
            forward[name] = x_i * h ** (-u_i)
            inverse[name] = x_i * h**u_i
        else:
            forward[name] = x_i
            inverse[name] = x_i
    return forward, inverse


def seed_to_datum(seed: Seed, k: int) -> Tuple[MutationDatum, Tuple[Vector, ...]]:
    """Mutation datum (e_k, 1 + x^{v_k}) of a seed direction, plus the adapted
    dual basis; requires a primitive exchange column."""
    col = seed.column(k)
    g = 0
    for b in col:
        g = gcd(g, b)
    if g != 1:
        raise ValueError(
            f"exchange column at {seed.names[k]} is not primitive (entry gcd {g})"
        )
    n = seed.size
    u = tuple(1 if i == k else 0 for i in range(n))
    ctx = seed.seed_ctx()
    poly = LaurentPolynomial.one(ctx) + LaurentPolynomial.monomial(ctx, tuple(col))
    datum = MutationDatum.create(u, poly, 1)
    basis = []
    for i in range(n):
        if i != k:
            basis.append(tuple(1 if t == i else 0 for t in range(n)))
        else:
            vec = [max(0, -b) for b in col]
            vec[k] = -1
            basis.append(tuple(vec))
    return datum, tuple(basis)


def validate_mutation(
    transition: ChartTransition, source_cone: Cone, target_cone: Cone
) -> ValidationReport:
    """Datum validity and admissibility, plus the invariant-divisor surrogate:
    each ray r of the source cone transforms to r - val_r(h) * u, and the
    transformed ray set is compared with the target rays up to positive
    scaling and ordering.  A surrogate mismatch is reported, never fatal.
    """
    d = transition.datum
    report = ValidationReport(f"transition {transition.source} -> {transition.target}")
    report.extend(datum_validate(d, target_cone))
    if source_cone.is_zero and target_cone.is_zero:
        report.add("divisor_bijection", SURROGATE_PASS, "no torus-invariant divisors")
        return report
    transformed = set()
    for ray in source_cone.generators:
        val = monomial_valuation(ray, d.h)
        image = tuple(r - val * u for r, u in zip(ray, d.u))
        transformed.add(primitive_part(image))
    target_rays = target_cone.rays()
    if transformed == target_rays:
        report.add(
            "divisor_bijection", SURROGATE_PASS, f"rays map onto rays ({len(transformed)})"
        )
    else:
        report.add(
            "divisor_bijection",
            SURROGATE_FAIL,
            f"transformed rays {sorted(transformed)} vs target rays {sorted(target_rays)}",
        )
    return report


# -- membership ----------------------------------------------------------------


def chart_express(p: MSAPresentation, chart_index: int, f: RationalFunction) -> RationalFunction:
    """Rewrite f (given in reference coordinates) in the chart's coordinates."""
    chart = p.all_charts()[chart_index]
    if chart_index == 0:
        return f
    return f.substitute(chart.from_reference_map)


def chart_membership(
    p: MSAPresentation, chart_index: int, f: RationalFunction
) -> Tuple[bool, MembershipCertificate]:
    chart = p.all_charts()[chart_index]
    expr = chart_express(p, chart_index, f)
    laurent = expr.try_laurent()
    if laurent is None:
        cert = MembershipCertificate(
            chart.label, False, f"not Laurent: denominator {expr.den}"
        )
        return False, cert
    for exp in laurent.terms:
        if not chart.cone.dual_contains(exp):
            cert = MembershipCertificate(
                chart.label,
                False,
                f"exponent {exp} of {format_laurent(laurent)} violates the chart cone",
            )
            return False, cert
    cert = MembershipCertificate(chart.label, True, format_laurent(laurent))
    return True, cert


def msa_membership(
    p: MSAPresentation, f: RationalFunction
) -> Tuple[bool, List[MembershipCertificate]]:
    """Membership in the intersection ring: conjunction over all charts."""
    certs = []
    member = True
    for index in range(len(p.all_charts())):
        ok, cert = chart_membership(p, index, f)
        certs.append(cert)
        member = member and ok
    return member, certs


def valuation_membership(
    p: MSAPresentation,
    f: RationalFunction,
    valuations: Mapping[int, Sequence[Vector]],
) -> bool:
    """Cut the intersection ring by tropical valuations: every listed vector w
    (per chart index) must give min <w, m> >= 0 on the chart expansion."""
    member, certs = msa_membership(p, f)
    if not member:
        failing = next(c for c in certs if not c.member)
        raise ValueError(f"not in the intersection ring: {failing.render()}")
    for index, vectors in valuations.items():
        expansion = chart_express(p, index, f).as_laurent()
        for w in vectors:
            if monomial_valuation(tuple(w), expansion) < 0:
                return False
    return True


# -- charts from seeds -----------------------------------------------------------


def _adjacent_chart(seed: Seed, k: int, cone: Cone) -> Chart:
    """The chart of the seed mutated at k, in its own cluster coordinates."""
    ref_ctx = seed.seed_ctx()
    counts = list(seed.mutation_counts)
    counts[k] += 1
    new_name = f"{seed.base_names[k]}_m{counts[k]}"
    while new_name in seed.names:
        counts[k] += 1
        new_name = f"{seed.base_names[k]}_m{counts[k]}"
    chart_names = list(seed.names)
    chart_names[k] = new_name
    chart_ctx = VariableContext(chart_names)
    col = seed.column(k)
    plus = tuple(max(0, b) for b in col)
    minus = tuple(max(0, -b) for b in col)

    def exchange_sum(ctx: VariableContext) -> RationalFunction:
        total = LaurentPolynomial.monomial(ctx, plus) + LaurentPolynomial.monomial(ctx, minus)
        return RationalFunction.from_laurent(total)

    to_ref = []
    from_ref = []
    for i, (ref_name, chart_name) in enumerate(zip(seed.names, chart_names)):
        if i == k:
            to_ref.append(
                (chart_name, exchange_sum(ref_ctx) / RationalFunction.variable(ref_ctx, ref_name))
            )
            from_ref.append(
                (ref_name, exchange_sum(chart_ctx) / RationalFunction.variable(chart_ctx, chart_name))
            )
        else:
            to_ref.append((chart_name, RationalFunction.variable(ref_ctx, ref_name)))
            from_ref.append((ref_name, RationalFunction.variable(chart_ctx, chart_name)))
    try:
        datum, _ = seed_to_datum(seed, k)
    except ValueError:
        datum = None
    return Chart(
        label=f"adjacent[{seed.names[k]}]",
        ctx=chart_ctx,
        cone=cone,
        to_reference=tuple(to_ref),
        from_reference=tuple(from_ref),
        datum=datum,
    )


def seed_presentation(
    seed: Seed, non_invertible_frozen: Sequence[str] = (), label: str = "seed charts"
) -> MSAPresentation:
    """Reference chart plus all adjacent charts, with the cone generated by
    the basis vectors of the named non-invertible frozen vertices."""
    frozen_names = {seed.names[i] for i in seed.frozen_indices}
    bad = set(non_invertible_frozen) - frozen_names
    if bad:
        raise ValueError(f"non-invertible markers for non-frozen vertices: {sorted(bad)}")
    indices = sorted(seed.names.index(nm) for nm in set(non_invertible_frozen))
    cone = frozen_quadrant(seed.size, indices)
    reference = Chart.reference(seed.seed_ctx(), cone)
    charts = tuple(_adjacent_chart(seed, k, cone) for k in seed.mutable)
    return MSAPresentation(
        label=label, reference=reference, charts=charts, height_one_declared=False
    )


def validate_presentation(p: MSAPresentation) -> ValidationReport:
    """Full validation of a presentation: strong convexity per chart,
    transition round trips, datum validity and admissibility, the divisor
    surrogate, and the height-one condition (declared metadata only, never
    verified)."""
    report = ValidationReport(p.label)
    for chart in p.all_charts():
        name = f"{chart.label}.cone_strongly_convex"
        if chart.cone.is_strongly_convex():
            report.add(name, PASS)
        else:
            report.add(name, FAIL, "the cone contains a line")
    for chart in p.charts:
        ok = True
        to_ref = chart.to_reference_map
        from_ref = chart.from_reference_map
        for name in chart.ctx.names:
            if to_ref[name].substitute(from_ref) != RationalFunction.variable(chart.ctx, name):
                ok = False
        for name in p.reference.ctx.names:
            if from_ref[name].substitute(to_ref) != RationalFunction.variable(
                p.reference.ctx, name
            ):
                ok = False
        report.add(f"{chart.label}.round_trip", PASS if ok else FAIL)
        if chart.datum is None:
            report.add(f"{chart.label}.datum", UNCHECKED, "no mutation datum attached")
            continue
        sub = validate_mutation(
            ChartTransition(chart.datum, p.reference.label, chart.label),
            p.reference.cone,
            chart.cone,
        )
        for check in sub.checks:
            report.add(f"{chart.label}.{check.name}", check.status, check.detail)
    if p.height_one_declared:
        report.add("height_one_primes", UNCHECKED, "declared by input data, not verified")
    else:
        report.add("height_one_primes", UNCHECKED, "not declared, not verified")
    return report


def upper_membership(
    seed: Seed, f: RationalFunction, non_invertible_frozen: Sequence[str] = ()
) -> Tuple[bool, List[MembershipCertificate]]:
    """Membership in the upper cluster algebra (optionally with non-invertible
    frozen variables), via the reference chart and all adjacent charts.

    Requires a maximal-rank seed: only then does the finite intersection over
    the adjacent seeds compute the full upper algebra.
    """
    if not seed.is_maximal_rank():
        raise ValueError(
            "the seed is not of maximal rank; the adjacent-chart intersection "
            "only bounds the upper algebra from above in that case"
        )
    if f.ctx != seed.seed_ctx():
        raise ValueError("the query must be expressed in the seed's cluster variables")
    presentation = seed_presentation(seed, non_invertible_frozen)
    return msa_membership(presentation, f)
