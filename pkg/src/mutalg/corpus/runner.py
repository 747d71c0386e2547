"""Verification runner: replays every recorded identity exactly.

Each case file bundles input documents (seed / chart-system schemas) with a
list of assertions.  Every assertion carries a provenance tag (external,
derived, structural) and a reference note; failures print the computed and
the expected value verbatim.
"""

from __future__ import annotations

import json
import os
import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources
from typing import Callable, Dict, List, Optional

from ..charts import (
    chart_express,
    msa_membership,
    seed_presentation,
    upper_membership,
    validate_presentation,
)
from ..fileio import ChartSystemDocument, SeedDocument, load_chart_system_document, load_seed_document
from ..grading import grading_is_compatible, mutate_graded
from ..laurent import LaurentPolynomial
from ..lifting import BlowupConfig, base_cluster, lifted_seed, nu_matrix
from ..parsing import parse_expr
from ..ratfunc import RationalFunction
from ..reports import FAIL, PASS, SURROGATE_FAIL, SURROGATE_PASS, UNCHECKED

DEFAULT_PRNG_SEED = 902210


@dataclass
class AssertionRecord:
    case: str
    index: int
    op: str
    status: str
    tag: str
    ref: str
    detail: str = ""

    def render(self) -> str:
        line = f"{self.status:<10} {self.case}[{self.index}] {self.op} ({self.tag})"
        if self.detail:
            line += f" -- {self.detail}"
        return line

    def to_record(self) -> dict:
        return {
            "case": self.case,
            "index": self.index,
            "op": self.op,
            "status": self.status,
            "tag": self.tag,
            "ref": self.ref,
            "detail": self.detail,
        }


@dataclass
class CaseReport:
    case: str
    title: str
    records: List[AssertionRecord] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.status != FAIL for r in self.records)

    def render(self) -> str:
        lines = [f"case {self.case}: {self.title}"]
        lines += ["  " + r.render() for r in self.records]
        return "\n".join(lines)


def data_dir():
    override = os.environ.get("MUTALG_CORPUS_DIR")
    if override:
        return override
    return resources.files("mutalg.corpus") / "data"


def list_cases() -> List[str]:
    root = data_dir()
    if isinstance(root, str):
        names = sorted(os.listdir(root))
    else:
        names = sorted(entry.name for entry in root.iterdir())
    return [n[:-5] for n in names if n.endswith(".json")]


def load_case(case_id: str) -> dict:
    root = data_dir()
    if isinstance(root, str):
        path = os.path.join(root, case_id + ".json")
        if not os.path.exists(path):
            raise KeyError(f"unknown case {case_id!r}")
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    node = root / (case_id + ".json")
    if not node.is_file():
        raise KeyError(f"unknown case {case_id!r}")
    return json.loads(node.read_text(encoding="utf-8"))


class _CaseContext:
    """Lazy access to the parsed input documents of one case."""

    def __init__(self, doc: dict, prng_seed: Optional[int]):
        self.doc = doc
        self.prng_seed = prng_seed
        self._seeds: Dict[str, SeedDocument] = {}
        self._charts: Dict[str, ChartSystemDocument] = {}

    def seed_doc(self, key: str) -> SeedDocument:
        if key not in self._seeds:
            self._seeds[key] = load_seed_document(self.doc["inputs"][key])
        return self._seeds[key]

    def chart_doc(self, key: str) -> ChartSystemDocument:
        if key not in self._charts:
            self._charts[key] = load_chart_system_document(
                self.doc["inputs"][key], label=key
            )
        return self._charts[key]


def _resolve_sequence(seed, tokens):
    return [seed.vertex_index(t) for t in tokens]


def _parse_query(sd: SeedDocument, expr: str, initial_coords: bool) -> RationalFunction:
    if initial_coords:
        value = parse_expr(expr, sd.query_context())
        return sd.to_cluster_coordinates(value)
    return parse_expr(expr, sd.seed.seed_ctx())


# Each handler returns a list of (op_label, status, detail) triples; the first
# entry is the verdict for the assertion itself.


def _op_quiver_column(ctx: _CaseContext, args, expect):
    seed = ctx.seed_doc(args["input"]).seed
    col = list(seed.column(seed.vertex_index(args["vertex"])))
    ok = col == list(expect)
    return [("quiver_column", PASS if ok else FAIL, f"computed {col}, expected {list(expect)}")]


def _op_mutate_var(ctx: _CaseContext, args, expect):
    sd = ctx.seed_doc(args["input"])
    seed = sd.seed
    mutated = seed
    for token in args["sequence"]:
        mutated = mutated.mutate(mutated.vertex_index(token))
    value = mutated.ledger[mutated.vertex_index(args["vertex"])]
    expected = parse_expr(expect, seed.initial_ctx)
    ok = value == expected
    return [("mutate_var", PASS if ok else FAIL, f"computed {value}, expected {expected}")]


def _op_exchange_binomials(ctx: _CaseContext, args, expect):
    seed = ctx.seed_doc(args["input"]).seed
    plus, minus = seed.exchange_binomials(seed.vertex_index(args["vertex"]))
    sctx = seed.seed_ctx()
    want_plus = parse_expr(expect["plus"], sctx).as_laurent()
    want_minus = parse_expr(expect["minus"], sctx).as_laurent()
    ok = plus == want_plus and minus == want_minus
    return [
        (
            "exchange_binomials",
            PASS if ok else FAIL,
            f"computed ({plus}, {minus}), expected ({want_plus}, {want_minus})",
        )
    ]


def _op_maximal_rank(ctx: _CaseContext, args, expect):
    seed = ctx.seed_doc(args["input"]).seed
    got = seed.is_maximal_rank()
    return [("maximal_rank", PASS if got == expect else FAIL, f"computed {got}")]


def _op_mutate_involution(ctx: _CaseContext, args, expect):
    seed = ctx.seed_doc(args["input"]).seed
    k = seed.vertex_index(args["vertex"])
    twice = seed.mutate(k).mutate(k)
    ok = twice.column_map == seed.column_map and twice.ledger == seed.ledger
    return [("mutate_involution", PASS if ok == expect else FAIL, f"returned to start: {ok}")]


def _op_ledger_laurent(ctx: _CaseContext, args, expect):
    seed = ctx.seed_doc(args["input"]).seed
    mutated = seed
    for token in args["sequence"]:
        mutated = mutated.mutate(mutated.vertex_index(token))
    bad = [nm for nm, entry in zip(mutated.names, mutated.ledger) if not entry.is_laurent]
    ok = not bad
    detail = "all ledger entries Laurent" if ok else f"non-Laurent entries at {bad}"
    return [("ledger_laurent", PASS if ok == expect else FAIL, detail)]


def _op_upper_member(ctx: _CaseContext, args, expect):
    sd = ctx.seed_doc(args["input"])
    f = _parse_query(sd, args["expr"], args.get("initial_coords", False))
    got, certs = upper_membership(sd.seed, f, args.get("non_invertible", []))
    detail = f"{args['expr']!r}: {'member' if got else 'non-member'}"
    if got != expect:
        failing = [c.render() for c in certs if not c.member]
        detail += "; " + ("; ".join(failing) if failing else "all charts accepted")
    return [("upper_member", PASS if got == expect else FAIL, detail)]


def _op_upper_member_row(ctx: _CaseContext, args, expect):
    sd = ctx.seed_doc(args["input"])
    flags = args.get("non_invertible", [])
    row = []
    for expr in args["witnesses"]:
        f = _parse_query(sd, expr, args.get("initial_coords", False))
        got, _ = upper_membership(sd.seed, f, flags)
        row.append(got)
    ok = row == list(expect)
    return [
        (
            "upper_member_row",
            PASS if ok else FAIL,
            f"flags {flags}: computed {row}, expected {list(expect)}",
        )
    ]


def _op_chart_express(ctx: _CaseContext, args, expect):
    cs = ctx.chart_doc(args["input"])
    p = cs.presentation
    index = _chart_index(p, args["chart"])
    value = chart_express(p, index, cs.parse_query(args["expr"]))
    expected = parse_expr(expect, p.all_charts()[index].ctx)
    ok = value == expected
    return [("chart_express", PASS if ok else FAIL, f"computed {value}, expected {expected}")]


def _chart_index(p, label) -> int:
    for i, chart in enumerate(p.all_charts()):
        if chart.label == label or i == label:
            return i
    raise KeyError(f"no chart labelled {label!r}")


def _op_msa_member(ctx: _CaseContext, args, expect):
    cs = ctx.chart_doc(args["input"])
    got, certs = msa_membership(cs.presentation, cs.parse_query(args["expr"]))
    detail = f"{args['expr']!r}: {'member' if got else 'non-member'}"
    if not got:
        detail += "; " + next(c.render() for c in certs if not c.member)
    return [("msa_member", PASS if got == expect else FAIL, detail)]


def divisibility_oracle(f: RationalFunction, lam1: int, lam2: int) -> bool:
    """Independent membership oracle for the blown-up Hirzebruch ring: for
    f = sum c_n(x) y^n, membership means ((x+lam1)(x+lam2))^{|n|} divides c_n
    for every n < 0.  Works coefficientwise with exact division only."""
    from ..polyops import try_exact_div

    ctx = f.ctx
    lp = f.try_laurent()
    if lp is None:
        return False
    ix, iy = ctx.index("x"), ctx.index("y")
    x = LaurentPolynomial.variable(ctx, "x")
    product = (x + lam1) * (x + lam2)
    groups: Dict[int, dict] = {}
    for exp, coeff in lp.terms.items():
        stripped = list(exp)
        stripped[iy] = 0
        groups.setdefault(exp[iy], {})[tuple(stripped)] = coeff
    for n, terms in groups.items():
        if n >= 0:
            continue
        c_n = LaurentPolynomial(ctx, terms)
        mins = c_n.min_exponents()
        c_poly = c_n.shift(tuple(max(0, -m) for m in mins))
        if try_exact_div(c_poly, product ** (-n)) is None:
            return False
    return True


def _op_msa_oracle_table(ctx: _CaseContext, args, expect):
    cs = ctx.chart_doc(args["input"])
    lam1, lam2 = _lambdas(ctx)
    rows = []
    ok = True
    for expr, expected in zip(args["witnesses"], expect):
        f = cs.parse_query(expr)
        got, _ = msa_membership(cs.presentation, f)
        oracle = divisibility_oracle(f, lam1, lam2)
        rows.append((expr, got, oracle, expected))
        ok = ok and got == oracle == expected
    detail = "; ".join(
        f"{expr!r}: charts={got} oracle={oracle} expected={expected}"
        for expr, got, oracle, expected in rows
        if not (got == oracle == expected)
    )
    return [("msa_oracle_table", PASS if ok else FAIL, detail or f"{len(rows)} witnesses agree")]


def _lambdas(ctx: _CaseContext):
    params = ctx.doc.get("inputs", {}).get("params", {})
    return int(params.get("lambda1", 2)), int(params.get("lambda2", 3))


def random_hirzebruch_witness(rng: random.Random, ctx, lam1: int, lam2: int) -> RationalFunction:
    """A random sum of x-Laurent coefficients times y powers, biased so that
    member and non-member cases both occur."""
    x = RationalFunction.variable(ctx, "x")
    y = RationalFunction.variable(ctx, "y")
    product = (x + lam1) * (x + lam2)
    total = RationalFunction.constant(ctx, 0)
    for _ in range(rng.randint(1, 3)):
        n = rng.randint(-3, 3)
        coeff = RationalFunction.constant(ctx, 0)
        for _ in range(rng.randint(1, 3)):
            c = rng.choice([-3, -2, -1, 1, 2, 3])
            e = rng.randint(-2, 3)
            coeff = coeff + RationalFunction.constant(ctx, c) * x**e
        if coeff.is_zero:
            coeff = RationalFunction.constant(ctx, 1)
        if n < 0 and rng.random() < 0.6:
            coeff = coeff * product ** (-n)
        total = total + coeff * y**n
    if total.is_zero:
        total = RationalFunction.constant(ctx, 1)
    return total


def _op_msa_oracle_random(ctx: _CaseContext, args, expect):
    cs = ctx.chart_doc(args["input"])
    lam1, lam2 = _lambdas(ctx)
    seed_value = ctx.prng_seed if ctx.prng_seed is not None else args.get(
        "prng_seed", DEFAULT_PRNG_SEED
    )
    rng = random.Random(seed_value)
    ref_ctx = cs.presentation.reference.ctx
    count = int(args["count"])
    disagreements = []
    members = 0
    for i in range(count):
        f = random_hirzebruch_witness(rng, ref_ctx, lam1, lam2)
        got, _ = msa_membership(cs.presentation, f)
        oracle = divisibility_oracle(f, lam1, lam2)
        members += got
        if got != oracle:
            disagreements.append((i, str(f), got, oracle))
    ok = not disagreements and expect
    detail = (
        f"{count} cases agree ({members} members, prng_seed={seed_value})"
        if not disagreements
        else f"first disagreement: {disagreements[0]}"
    )
    return [("msa_oracle_random", PASS if ok else FAIL, detail)]


def _op_pentagon(ctx: _CaseContext, args, expect):
    seed = ctx.seed_doc(args["input"]).seed
    steps = int(args["steps"])
    half = steps // 2
    current = seed
    variables = set(seed.ledger)
    half_ledger = None
    for i in range(steps):
        current = current.mutate(i % 2)
        variables.add(current.ledger[i % 2])
        if i + 1 == half:
            half_ledger = current.ledger
    exact_return = current.ledger == seed.ledger and current.column_map == seed.column_map
    swap_at_half = half_ledger == (seed.ledger[1], seed.ledger[0])
    got = {
        "exact_return": exact_return,
        "swap_at_half": swap_at_half,
        "distinct_variables": len(variables),
    }
    ok = got == expect
    return [("pentagon", PASS if ok else FAIL, f"computed {got}, expected {expect}")]


def _op_phi_relations(ctx: _CaseContext, args, expect):
    from ..laurent import VariableContext

    a, b = int(args["a"]), int(args["b"])
    tctx = VariableContext(["x1", "x2"])
    x1 = RationalFunction.variable(tctx, "x1")
    x2 = RationalFunction.variable(tctx, "x2")
    x3 = (1 + x2**a) / x1
    x4 = (1 + x1**b) / x2
    first = x1 * x3 - 1 - x2**a
    second = x2 * x4 - 1 - x1**b
    ok = first.is_zero and second.is_zero
    return [
        (
            "phi_relations",
            PASS if ok == expect else FAIL,
            f"residuals ({first}, {second}) for (a, b) = ({a}, {b})",
        )
    ]


def _op_nu_matrix(ctx: _CaseContext, args, expect):
    got = nu_matrix(BlowupConfig(int(args["n"])))
    ok = got == [list(r) for r in expect]
    return [("nu_matrix", PASS if ok else FAIL, f"computed {got}, expected {expect}")]


def _op_base_cluster(ctx: _CaseContext, args, expect):
    from ..lifting import affine_context

    n = int(args["n"])
    cluster = base_cluster(n)
    actx = affine_context(n)
    expected = [parse_expr(e, actx).as_laurent() for e in expect]
    ok = cluster == expected
    return [
        (
            "base_cluster",
            PASS if ok else FAIL,
            f"computed {[str(p) for p in cluster]}, expected {list(expect)}",
        )
    ]


def _op_lifted_structure(ctx: _CaseContext, args, expect):
    n = int(args["n"])
    lifted = lifted_seed(BlowupConfig(n))
    base_cols = lifted.base.column_map
    nu = lifted.nu
    ok = True
    detail = "top block equals the base matrix; bottom block equals -nu*B; grading compatible"
    for k in lifted.seed.mutable:
        col = lifted.seed.column(k)
        if tuple(col[:n]) != tuple(base_cols[k]):
            ok = False
            detail = f"top block mismatch in column {k}"
        for j in range(n + 3):
            want = -sum(nu[j][i] * base_cols[k][i] for i in range(n))
            if col[n + j] != want:
                ok = False
                detail = f"bottom block mismatch at row {n + j}, column {k}"
    compatible, _ = grading_is_compatible(lifted.seed, lifted.grading)
    ok = ok and compatible
    return [("lifted_structure", PASS if ok == expect else FAIL, detail)]


def _op_lifted_compatible_range(ctx: _CaseContext, args, expect):
    bad = []
    for n in args["ns"]:
        try:
            lifted = lifted_seed(BlowupConfig(int(n)))
        except ValueError:
            bad.append(n)
            continue
        compatible, _ = grading_is_compatible(lifted.seed, lifted.grading)
        if not compatible:
            bad.append(n)
    ok = not bad
    detail = f"dimensions {list(args['ns'])} all compatible" if ok else f"failures at {bad}"
    return [("lifted_compatible_range", PASS if ok == expect else FAIL, detail)]


def _op_lifted_mutation_compatible(ctx: _CaseContext, args, expect):
    lifted = lifted_seed(BlowupConfig(int(args["n"])))
    ok = True
    for k in lifted.seed.mutable:
        mutated, extended = mutate_graded(lifted.seed, lifted.grading, k)
        compatible, _ = grading_is_compatible(mutated, extended)
        ok = ok and compatible
    return [("lifted_mutation_compatible", PASS if ok == expect else FAIL, "")]


def _op_grading_compatible(ctx: _CaseContext, args, expect):
    sd = ctx.seed_doc(args["input"])
    if sd.grading is None:
        return [("grading_compatible", FAIL, "seed document carries no grading")]
    ok, report = grading_is_compatible(sd.seed, sd.grading)
    detail = "; ".join(c.render() for c in report.checks)
    return [("grading_compatible", PASS if ok == expect else FAIL, detail)]


def _summarize_validation(report, expect):
    surrogate_statuses = {c.status for c in report.checks if c.status in (SURROGATE_PASS, SURROGATE_FAIL)}
    hard_ok = report.ok
    out = []
    want_hard = expect.get("hard_checks", "PASS")
    got_hard = PASS if hard_ok else FAIL
    out.append(
        (
            "validation_hard_checks",
            PASS if got_hard == want_hard else FAIL,
            f"datum validity, admissibility, round trips: {got_hard}",
        )
    )
    if "surrogate" in expect:
        want = expect["surrogate"]
        ok = surrogate_statuses == {want} if surrogate_statuses else False
        out.append(
            (
                "validation_surrogate",
                PASS if ok else FAIL,
                f"divisor-bijection surrogate outcomes: {sorted(surrogate_statuses)}",
            )
        )
    else:
        out.append(
            (
                "validation_surrogate",
                PASS,
                f"surrogate outcomes reported: {sorted(surrogate_statuses)}",
            )
        )
    height = [c for c in report.checks if c.name == "height_one_primes"]
    if height and height[0].status == UNCHECKED:
        out.append(("height_one_primes", UNCHECKED, height[0].detail))
    else:
        out.append(("height_one_primes", FAIL, "height-one condition must stay UNCHECKED"))
    return out


def _op_validate_charts(ctx: _CaseContext, args, expect):
    cs = ctx.chart_doc(args["input"])
    report = validate_presentation(cs.presentation)
    return _summarize_validation(report, expect)


def _op_validate_seed_presentation(ctx: _CaseContext, args, expect):
    sd = ctx.seed_doc(args["input"])
    presentation = seed_presentation(sd.seed, args.get("non_invertible", []))
    report = validate_presentation(presentation)
    return _summarize_validation(report, expect)


_HANDLERS: Dict[str, Callable] = {
    "quiver_column": _op_quiver_column,
    "mutate_var": _op_mutate_var,
    "exchange_binomials": _op_exchange_binomials,
    "maximal_rank": _op_maximal_rank,
    "mutate_involution": _op_mutate_involution,
    "ledger_laurent": _op_ledger_laurent,
    "upper_member": _op_upper_member,
    "upper_member_row": _op_upper_member_row,
    "chart_express": _op_chart_express,
    "msa_member": _op_msa_member,
    "msa_oracle_table": _op_msa_oracle_table,
    "msa_oracle_random": _op_msa_oracle_random,
    "pentagon": _op_pentagon,
    "phi_relations": _op_phi_relations,
    "nu_matrix": _op_nu_matrix,
    "base_cluster": _op_base_cluster,
    "lifted_structure": _op_lifted_structure,
    "lifted_compatible_range": _op_lifted_compatible_range,
    "lifted_mutation_compatible": _op_lifted_mutation_compatible,
    "grading_compatible": _op_grading_compatible,
    "validate_charts": _op_validate_charts,
    "validate_seed_presentation": _op_validate_seed_presentation,
}


def run_case(case_id: str, prng_seed: Optional[int] = None) -> CaseReport:
    doc = load_case(case_id)
    ctx = _CaseContext(doc, prng_seed)
    report = CaseReport(case=doc["id"], title=doc.get("title", ""))
    for index, assertion in enumerate(doc.get("assertions", [])):
        op = assertion["op"]
        tag = assertion.get("tag", "structural")
        ref = assertion.get("ref", "")
        handler = _HANDLERS.get(op)
        if handler is None:
            report.records.append(
                AssertionRecord(doc["id"], index, op, FAIL, tag, ref, f"unknown op {op!r}")
            )
            continue
        try:
            results = handler(ctx, assertion.get("args", {}), assertion.get("expect"))
        except Exception as exc:  # deliberate: a crash is a FAIL with the message
            results = [(op, FAIL, f"{type(exc).__name__}: {exc}")]
        for label, status, detail in results:
            report.records.append(
                AssertionRecord(doc["id"], index, label, status, tag, ref, detail)
            )
    return report


def run_all(
    case_filter: Optional[str] = None,
    jobs: int = 1,
    prng_seed: Optional[int] = None,
) -> List[CaseReport]:
    cases = [c for c in list_cases() if not case_filter or case_filter in c]
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            reports = list(pool.map(lambda c: run_case(c, prng_seed), cases))
    else:
        reports = [run_case(c, prng_seed) for c in cases]
    return sorted(reports, key=lambda r: r.case)
