"""JSON document schemas for seeds and chart systems.

Seed document:
    {"vertices": [names], "frozen": [names],
     "matrix": [[...]] | "quiver": [[src, dst, mult], ...],
     "ledger": {name: expr} (optional; defaults to coordinates),
     "initial_vars": [names] (optional; orders the ambient context),
     "inverse_ledger": {initial var: expr in vertex variables} (optional),
     "grading": {"rank": r, "degrees": {name: [ints]}} (optional),
     "cone": {"generators": [[ints]]} (optional)}

Chart-system document:
    {"reference": {"vars": [...], "cone": [[ints]]},
     "charts": [{"vars": [...], "cone": [[ints]],
                 "datum": {"u": [ints], "g": expr, "k": int,
                           "declared_irreducible": bool}}],
     "aliases": {name: expr in reference vars} (optional),
     "height_one_declared": bool}

The "matrix" value is indexed rows = vertices; columns are the mutable
vertices in vertex order (a full square matrix is also accepted, from which
the mutable columns are taken).  All files are UTF-8 JSON.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Dict, Optional, Tuple

from .charts import Chart, ChartTransition, MSAPresentation
from .cones import Cone
from .grading import Grading
from .laurent import LaurentPolynomial, VariableContext
from .mutdatum import MutationDatum
from .parsing import parse_expr
from .ratfunc import RationalFunction
from .seeds import Quiver, Seed


class DocumentError(ValueError):
    """Malformed or inconsistent input document."""


@dataclass
class SeedDocument:
    seed: Seed
    grading: Optional[Grading]
    cone: Optional[Cone]
    inverse_ledger: Optional[Dict[str, RationalFunction]]

    def query_context(self) -> VariableContext:
        """Context in which CLI expressions for this seed are parsed."""
        return self.seed.initial_ctx

    def to_cluster_coordinates(self, f: RationalFunction) -> RationalFunction:
        """Rewrite an initial-coordinates expression in the cluster variables."""
        identity = self.seed.initial_ctx == self.seed.seed_ctx()
        if identity:
            return f
        if self.inverse_ledger is None:
            raise DocumentError(
                "membership queries in the ambient coordinates need an "
                "'inverse_ledger' entry in the seed document"
            )
        return f.substitute(self.inverse_ledger)


def _require(doc: dict, key: str, where: str):
    if key not in doc:
        raise DocumentError(f"{where}: missing required key {key!r}")
    return doc[key]


def load_seed_document(doc: dict) -> SeedDocument:
    vertices = [str(v) for v in _require(doc, "vertices", "seed document")]
    frozen = [str(v) for v in doc.get("frozen", [])]
    unknown = set(frozen) - set(vertices)
    if unknown:
        raise DocumentError(f"frozen list names unknown vertices: {sorted(unknown)}")
    mutable = [v for v in vertices if v not in set(frozen)]

    if ("matrix" in doc) == ("quiver" in doc):
        raise DocumentError("seed document needs exactly one of 'matrix' or 'quiver'")
    if "quiver" in doc:
        arrows = []
        for arrow in doc["quiver"]:
            if len(arrow) == 2:
                src, dst, mult = arrow[0], arrow[1], 1
            else:
                src, dst, mult = arrow
            src = src if isinstance(src, str) else vertices[int(src) - 1]
            dst = dst if isinstance(dst, str) else vertices[int(dst) - 1]
            arrows.append((src, dst, int(mult)))
        columns = Quiver(vertices, frozen, arrows).columns()
    else:
        rows = doc["matrix"]
        if len(rows) != len(vertices):
            raise DocumentError("matrix must have one row per vertex")
        widths = {len(r) for r in rows}
        if widths == {len(vertices)} and len(mutable) != len(vertices):
            col_of = {v: vertices.index(v) for v in mutable}
        elif widths == {len(mutable)}:
            col_of = {v: j for j, v in enumerate(mutable)}
        else:
            raise DocumentError(
                "matrix columns must cover the mutable vertices (or the full square)"
            )
        columns = {}
        for v in mutable:
            j = col_of[v]
            columns[vertices.index(v)] = tuple(int(r[j]) for r in rows)

    ledger_doc = doc.get("ledger")
    if ledger_doc is None:
        seed = Seed.create(vertices, frozen, columns)
    else:
        initial_vars = doc.get("initial_vars")
        if initial_vars is None:
            raise DocumentError("a seed document with a ledger needs 'initial_vars'")
        ctx = VariableContext([str(v) for v in initial_vars])
        ledger = {name: parse_expr(expr, ctx) for name, expr in ledger_doc.items()}
        missing = set(vertices) - set(ledger)
        if missing:
            raise DocumentError(f"ledger missing vertices: {sorted(missing)}")
        seed = Seed.create(vertices, frozen, columns, ledger, ctx)

    grading = None
    if "grading" in doc:
        gdoc = doc["grading"]
        if "torsion" in gdoc:
            raise DocumentError(
                "grading groups must be free of torsion; drop the 'torsion' block"
            )
        rank = int(_require(gdoc, "rank", "grading block"))
        degrees_doc = _require(gdoc, "degrees", "grading block")
        for name, deg in degrees_doc.items():
            if any(not isinstance(d, int) for d in deg):
                raise DocumentError(
                    f"grading degrees must be integer vectors (free grading group); "
                    f"entry for {name!r} is {deg!r}"
                )
        missing = set(vertices) - set(degrees_doc)
        if missing:
            raise DocumentError(f"grading missing degrees for: {sorted(missing)}")
        grading = Grading.create(rank, {n: tuple(d) for n, d in degrees_doc.items()})

    cone = None
    if "cone" in doc:
        generators = doc["cone"].get("generators", [])
        cone = Cone(len(vertices), [tuple(int(e) for e in g) for g in generators])

    inverse = None
    if "inverse_ledger" in doc:
        cluster_ctx = seed.seed_ctx()
        inverse = {
            str(name): parse_expr(expr, cluster_ctx)
            for name, expr in doc["inverse_ledger"].items()
        }
        missing = set(seed.initial_ctx.names) - set(inverse)
        if missing:
            raise DocumentError(f"inverse ledger missing coordinates: {sorted(missing)}")
        _check_inverse_ledger(seed, inverse)

    return SeedDocument(seed=seed, grading=grading, cone=cone, inverse_ledger=inverse)


def _check_inverse_ledger(seed: Seed, inverse: Dict[str, RationalFunction]) -> None:
    """Exact round trip: ledger composed with the inverse is the identity."""
    for name, entry in zip(seed.names, seed.ledger):
        image = entry.substitute(inverse)
        expected = RationalFunction.variable(seed.seed_ctx(), name)
        if image != expected:
            raise DocumentError(
                f"inverse ledger fails the round trip on {name}: got {image}"
            )


def load_seed_file(path: str) -> SeedDocument:
    with open(path, encoding="utf-8") as fh:
        return load_seed_document(json.load(fh))


# -- chart systems -------------------------------------------------------------


@dataclass
class ChartSystemDocument:
    presentation: MSAPresentation
    transitions: Tuple[ChartTransition, ...]
    aliases: Dict[str, RationalFunction]

    def parse_query(self, text: str) -> RationalFunction:
        """Parse an expression over the reference coordinates plus aliases."""
        ref_ctx = self.presentation.reference.ctx
        if not self.aliases:
            return parse_expr(text, ref_ctx)
        extended = VariableContext(list(ref_ctx.names) + sorted(self.aliases))
        value = parse_expr(text, extended)
        images = {name: RationalFunction.variable(ref_ctx, name) for name in ref_ctx.names}
        images.update(self.aliases)
        return value.substitute(images)


def _datum_chart(
    label: str,
    ref_ctx: VariableContext,
    chart_vars: list,
    cone: Cone,
    datum: MutationDatum,
) -> Chart:
    """Build display transition maps for a file datum with u = +/- e_j.

    For u = +e_j the mutated coordinate satisfies x_j = h(c)/c_j; for
    u = -e_j it satisfies x_j = c_j / h(c).  General u would need a basis
    completion the document schema does not carry.
    """
    if len(chart_vars) != ref_ctx.arity:
        raise DocumentError(f"chart {label}: expected {ref_ctx.arity} coordinates")
    d_u = tuple(datum.u)
    nonzero = [(i, u_i) for i, u_i in enumerate(d_u) if u_i]
    if len(nonzero) != 1 or abs(nonzero[0][1]) != 1:
        raise DocumentError(
            f"chart {label}: datum vector {d_u} must be plus or minus a basis vector"
        )
    j, sign = nonzero[0]
    chart_ctx = VariableContext(chart_vars)
    h_ref = RationalFunction.from_laurent(datum.h)
    # h is supported on the orthogonal of u, so the same expression works in
    # chart coordinates (coordinate j never occurs in it)
    h_chart_poly = LaurentPolynomial(
        chart_ctx, {exp: coeff for exp, coeff in datum.h.terms.items()}
    )
    h_chart = RationalFunction.from_laurent(h_chart_poly)
    to_ref = []
    from_ref = []
    for i, (ref_name, chart_name) in enumerate(zip(ref_ctx.names, chart_vars)):
        ref_var = RationalFunction.variable(ref_ctx, ref_name)
        chart_var = RationalFunction.variable(chart_ctx, chart_name)
        if i != j:
            to_ref.append((chart_name, ref_var))
            from_ref.append((ref_name, chart_var))
        elif sign > 0:
            to_ref.append((chart_name, h_ref / ref_var))
            from_ref.append((ref_name, h_chart / chart_var))
        else:
            to_ref.append((chart_name, ref_var * h_ref))
            from_ref.append((ref_name, chart_var / h_chart))
    return Chart(
        label=label,
        ctx=chart_ctx,
        cone=cone,
        to_reference=tuple(to_ref),
        from_reference=tuple(from_ref),
        datum=datum,
    )


def load_chart_system_document(doc: dict, label: str = "chart system") -> ChartSystemDocument:
    ref_doc = _require(doc, "reference", "chart system")
    ref_vars = [str(v) for v in _require(ref_doc, "vars", "reference chart")]
    ref_ctx = VariableContext(ref_vars)
    ref_cone = Cone(len(ref_vars), [tuple(int(e) for e in g) for g in ref_doc.get("cone", [])])
    reference = Chart.reference(ref_ctx, ref_cone)

    charts = []
    transitions = []
    for index, chart_doc in enumerate(doc.get("charts", [])):
        chart_vars = [str(v) for v in _require(chart_doc, "vars", f"chart {index}")]
        cone = Cone(
            len(chart_vars), [tuple(int(e) for e in g) for g in chart_doc.get("cone", [])]
        )
        datum_doc = _require(chart_doc, "datum", f"chart {index}")
        g_expr = _require(datum_doc, "g", f"chart {index} datum")
        g_value = parse_expr(g_expr, ref_ctx)
        g_poly = g_value.try_laurent()
        if g_poly is None:
            raise DocumentError(f"chart {index}: datum polynomial {g_expr!r} is not Laurent")
        datum = MutationDatum.create(
            tuple(int(e) for e in _require(datum_doc, "u", f"chart {index} datum")),
            g_poly,
            int(datum_doc.get("k", 1)),
            declared_irreducible=bool(datum_doc.get("declared_irreducible", False)),
        )
        chart_label = chart_doc.get("label", f"chart{index + 1}")
        chart = _datum_chart(chart_label, ref_ctx, chart_vars, cone, datum)
        _check_round_trip(reference, chart)
        charts.append(chart)
        transitions.append(ChartTransition(datum, reference.label, chart_label))

    aliases = {}
    for name, expr in doc.get("aliases", {}).items():
        if name in ref_ctx:
            raise DocumentError(f"alias {name!r} shadows a reference coordinate")
        aliases[str(name)] = parse_expr(expr, ref_ctx)

    presentation = MSAPresentation(
        label=label,
        reference=reference,
        charts=tuple(charts),
        height_one_declared=bool(doc.get("height_one_declared", False)),
    )
    return ChartSystemDocument(
        presentation=presentation, transitions=tuple(transitions), aliases=aliases
    )


def _check_round_trip(reference: Chart, chart: Chart) -> None:
    """from_reference and to_reference must compose to the identity."""
    to_ref = chart.to_reference_map
    from_ref = chart.from_reference_map
    for name in chart.ctx.names:
        image = to_ref[name].substitute(from_ref)
        if image != RationalFunction.variable(chart.ctx, name):
            raise DocumentError(f"chart {chart.label}: round trip fails on {name}: {image}")
    for name in reference.ctx.names:
        image = from_ref[name].substitute(to_ref)
        if image != RationalFunction.variable(reference.ctx, name):
            raise DocumentError(f"chart {chart.label}: round trip fails on {name}: {image}")


def load_chart_system_file(path: str) -> ChartSystemDocument:
    with open(path, encoding="utf-8") as fh:
        return load_chart_system_document(json.load(fh), label=path)
