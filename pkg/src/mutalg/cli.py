"""Command-line front end.

Commands: mutate, member, upper-member, lift, grade-check, validate, verify.
Exit codes: 0 success / member, 1 verified-negative, 2 usage, parse, or
validation errors.  Machine output is line-delimited JSON with the same
verdicts as the text output.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import corpus
from .charts import (
    msa_membership,
    seed_presentation,
    upper_membership,
    validate_presentation,
)
from .fileio import (
    DocumentError,
    load_chart_system_file,
    load_seed_file,
)
from .grading import grading_is_compatible
from .lifting import BlowupConfig, lifted_seed, nu_matrix
from .parsing import ExpressionError, parse_expr
from .reports import FAIL

USAGE_ERROR = 2
NEGATIVE = 1


class CliError(Exception):
    """Usage-level failure; maps to exit code 2."""


def _print_matrix(rows, out) -> None:
    widths = [max(len(str(rows[i][j])) for i in range(len(rows))) for j in range(len(rows[0]))]
    for row in rows:
        out.write("  " + "  ".join(str(v).rjust(w) for v, w in zip(row, widths)) + "\n")


def _parse_sequence(text: str):
    if not text:
        return []
    tokens = []
    for raw in text.split(","):
        raw = raw.strip()
        if not raw:
            continue
        tokens.append(int(raw) if raw.lstrip("-").isdigit() else raw)
    return tokens


def _non_invertible(seed, spec_text):
    frozen_names = [seed.names[i] for i in seed.frozen_indices]
    if spec_text is None or spec_text == "all":
        return []
    if spec_text == "none":
        return frozen_names
    invertible = {t.strip() for t in spec_text.split(",") if t.strip()}
    unknown = invertible - set(frozen_names)
    if unknown:
        raise CliError(f"--frozen-invertible names non-frozen vertices: {sorted(unknown)}")
    return [nm for nm in frozen_names if nm not in invertible]


def cmd_mutate(args) -> int:
    doc = load_seed_file(args.seed_file)
    seed = doc.seed
    sequence = _parse_sequence(args.sequence)
    degenerate = []
    current = seed
    for token in sequence:
        try:
            k = current.vertex_index(token)
        except ValueError as exc:
            raise CliError(str(exc)) from None
        if k not in current.mutable:
            raise CliError(f"vertex {current.names[k]} is frozen and cannot be mutated")
        if current.is_degenerate_at(k):
            degenerate.append(current.names[k])
        current = current.mutate(k)
    cols = current.column_map
    rows = [[cols[k][i] for k in current.mutable] for i in range(current.size)]
    out = sys.stdout
    if args.format == "machine":
        record = {
            "vertices": list(current.names),
            "mutable": [current.names[k] for k in current.mutable],
            "matrix": rows,
            "ledger": {nm: str(entry) for nm, entry in zip(current.names, current.ledger)},
            "degenerate_mutations": degenerate,
        }
        out.write(json.dumps(record) + "\n")
        return 0
    out.write(f"seed after sequence {sequence!r}\n")
    out.write("exchange matrix (rows = vertices, columns = mutable vertices):\n")
    if rows:
        _print_matrix(rows, out)
    out.write("ledger (in the initial coordinates):\n")
    for nm, entry in zip(current.names, current.ledger):
        out.write(f"  {nm} = {entry}\n")
    for nm in degenerate:
        out.write(f"note: mutation at {nm} was degenerate (all-zero exchange column)\n")
    return 0


def _membership_output(member, certs, fmt) -> int:
    out = sys.stdout
    if fmt == "machine":
        for cert in certs:
            out.write(
                json.dumps(
                    {"chart": cert.chart, "member": cert.member, "detail": cert.detail}
                )
                + "\n"
            )
        out.write(json.dumps({"verdict": "member" if member else "non-member"}) + "\n")
    else:
        for cert in certs:
            out.write(cert.render() + "\n")
        out.write(("MEMBER" if member else "NON-MEMBER") + "\n")
    return 0 if member else NEGATIVE


def cmd_member(args) -> int:
    if args.upper:
        return _upper_member(args.upper, args.expr, args.frozen_invertible, args.format)
    if not args.chart_file:
        raise CliError("member needs a chart-system file (or --upper with a seed file)")
    cs = load_chart_system_file(args.chart_file)
    try:
        f = cs.parse_query(args.expr)
    except ExpressionError as exc:
        raise CliError(f"bad expression: {exc}") from None
    member, certs = msa_membership(cs.presentation, f)
    return _membership_output(member, certs, args.format)


def _upper_member(seed_path, expr, frozen_invertible, fmt) -> int:
    doc = load_seed_file(seed_path)
    seed = doc.seed
    non_invertible = _non_invertible(seed, frozen_invertible)
    try:
        if doc.query_context() != seed.seed_ctx():
            f = doc.to_cluster_coordinates(parse_expr(expr, doc.query_context()))
        else:
            f = parse_expr(expr, seed.seed_ctx())
    except ExpressionError as exc:
        raise CliError(f"bad expression: {exc}") from None
    try:
        member, certs = upper_membership(seed, f, non_invertible)
    except ValueError as exc:
        raise CliError(str(exc)) from None
    return _membership_output(member, certs, fmt)


def cmd_upper_member(args) -> int:
    return _upper_member(args.seed_file, args.expr, args.frozen_invertible, args.format)


def cmd_lift(args) -> int:
    if args.n < 2:
        raise CliError("--n must be at least 2")
    lifted = lifted_seed(BlowupConfig(args.n))
    out = sys.stdout
    nu = [list(r) for r in lifted.nu]
    rows = lifted.matrix_rows
    degrees = {nm: list(lifted.grading.degree(nm)) for nm in lifted.seed.names}
    if args.format == "machine":
        out.write(
            json.dumps(
                {
                    "n": args.n,
                    "nu": nu,
                    "lifted_matrix": rows,
                    "degrees": degrees,
                    "compatible": True,
                }
            )
            + "\n"
        )
        return 0
    out.write("valuation matrix (rows = divisors, columns = base cluster variables):\n")
    _print_matrix(nu, out)
    out.write("lifted exchange matrix (rows = lifted vertices, columns = mutable):\n")
    _print_matrix(rows, out)
    out.write("degrees:\n")
    for nm in lifted.seed.names:
        out.write(f"  {nm}: {degrees[nm]}\n")
    out.write("exchange homogeneity: PASS\n")
    return 0


def cmd_grade_check(args) -> int:
    doc = load_seed_file(args.seed_file)
    if doc.grading is None:
        raise CliError("the seed document carries no grading block")
    ok, report = grading_is_compatible(doc.seed, doc.grading)
    if args.format == "machine":
        for record in report.to_records():
            sys.stdout.write(json.dumps(record) + "\n")
    else:
        sys.stdout.write(report.render() + "\n")
    return 0 if ok else NEGATIVE


def cmd_validate(args) -> int:
    with open(args.file, encoding="utf-8") as fh:
        doc = json.load(fh)
    if "reference" in doc:
        cs = load_chart_system_file(args.file)
        report = validate_presentation(cs.presentation)
    elif "vertices" in doc:
        sd = load_seed_file(args.file)
        non_invertible = _non_invertible(sd.seed, args.frozen_invertible)
        report = validate_presentation(seed_presentation(sd.seed, non_invertible))
    else:
        raise CliError("file is neither a chart-system nor a seed document")
    if args.format == "machine":
        for record in report.to_records():
            sys.stdout.write(json.dumps(record) + "\n")
    else:
        sys.stdout.write(report.render() + "\n")
    return 0 if report.ok else NEGATIVE


def cmd_verify(args) -> int:
    target = args.case
    known = corpus.list_cases()
    if target not in ("all", None) and target not in known:
        raise CliError(f"unknown case {target!r}; known cases: {', '.join(known)}")
    case_filter = None if target in ("all", None) else target
    if case_filter:
        reports = [corpus.run_case(case_filter, prng_seed=args.prng_seed)]
    else:
        reports = corpus.run_all(jobs=args.jobs, prng_seed=args.prng_seed)
    failed = False
    out = sys.stdout
    for rep in reports:
        if args.format == "machine":
            for record in rep.records:
                out.write(json.dumps(record.to_record()) + "\n")
        else:
            out.write(rep.render() + "\n")
        failed = failed or not rep.passed
    if args.format != "machine":
        total = sum(len(r.records) for r in reports)
        bad = sum(1 for r in reports for rec in r.records if rec.status == FAIL)
        out.write(f"{total} assertions, {bad} failures\n")
    return NEGATIVE if failed else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mutalg",
        description="Exact cluster-seed mutation, chart membership, gradings, and lifting",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("mutate", help="mutate a seed along a sequence and print the result")
    p.add_argument("seed_file")
    p.add_argument("--sequence", default="", help="comma-separated vertices (names or 1-based)")
    p.add_argument("--format", choices=("text", "machine"), default="text")
    p.set_defaults(func=cmd_mutate)

    p = sub.add_parser("member", help="membership in a chart-system intersection ring")
    p.add_argument("chart_file", nargs="?")
    p.add_argument("--expr", required=True)
    p.add_argument("--upper", metavar="SEED_FILE", help="run against a seed's adjacent charts")
    p.add_argument("--frozen-invertible", default=None, help="'all', 'none', or a name list")
    p.add_argument("--format", choices=("text", "machine"), default="text")
    p.set_defaults(func=cmd_member)

    p = sub.add_parser("upper-member", help="membership in an upper cluster algebra")
    p.add_argument("seed_file")
    p.add_argument("--expr", required=True)
    p.add_argument("--frozen-invertible", default=None, help="'all', 'none', or a name list")
    p.add_argument("--format", choices=("text", "machine"), default="text")
    p.set_defaults(func=cmd_upper_member)

    p = sub.add_parser("lift", help="valuation matrix, lifted matrix, and degrees")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--format", choices=("text", "machine"), default="text")
    p.set_defaults(func=cmd_lift)

    p = sub.add_parser("grade-check", help="check exchange homogeneity of a graded seed")
    p.add_argument("seed_file")
    p.add_argument("--format", choices=("text", "machine"), default="text")
    p.set_defaults(func=cmd_grade_check)

    p = sub.add_parser("validate", help="validation report for a chart system or seed")
    p.add_argument("file")
    p.add_argument("--frozen-invertible", default=None, help="'all', 'none', or a name list")
    p.add_argument("--format", choices=("text", "machine"), default="text")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("verify", help="run recorded verification cases")
    p.add_argument("case", nargs="?", default="all")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--format", choices=("text", "machine"), default="text")
    p.add_argument("--prng-seed", type=int, default=None)
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return USAGE_ERROR
    except (DocumentError, ExpressionError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return USAGE_ERROR
    except FileNotFoundError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
