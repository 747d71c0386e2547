import json
import random
import re

import pytest

from mutalg import ExpressionError, VariableContext, parse_expr, parse_laurent
from mutalg.corpus import list_cases, load_case
from mutalg.parsing import format_rational
from mutalg.ratfunc import RationalFunction
from conftest import PRNG_SEED, random_laurent


def test_parse_examples(abc_ctx, xy_ctx):
    assert parse_expr("a*c - b", abc_ctx) == parse_expr("c*a - b", abc_ctx)
    f = parse_expr("x^(-2)*y + 1/2", xy_ctx)
    assert f.is_laurent
    with pytest.raises(ExpressionError) as err:
        parse_expr("1 + x^", xy_ctx)
    assert err.value.position == 7


def test_unknown_variable_named(xy_ctx):
    with pytest.raises(ExpressionError) as err:
        parse_expr("x + q", xy_ctx)
    assert "q" in str(err.value)


def test_mandatory_multiplication(xy_ctx):
    with pytest.raises(ExpressionError):
        parse_expr("2x", xy_ctx)
    with pytest.raises(ExpressionError):
        parse_expr("x y", xy_ctx)


def test_precedence(xy_ctx):
    assert parse_expr("-x^2", xy_ctx) == -parse_expr("x^2", xy_ctx)
    assert parse_expr("1 - 2*x", xy_ctx) == parse_expr("1 - (2*x)", xy_ctx)
    assert parse_expr("1/2*x", xy_ctx) == parse_expr("(1/2)*x", xy_ctx)
    assert parse_expr("(x+y)^2", xy_ctx) == parse_expr("x^2 + 2*x*y + y^2", xy_ctx)


def test_exponent_forms(xy_ctx):
    assert parse_expr("x^(-2)", xy_ctx) == parse_expr("1/x^2", xy_ctx)
    assert parse_expr("x^(3)", xy_ctx) == parse_expr("x^3", xy_ctx)
    with pytest.raises(ExpressionError):
        parse_expr("x^y", xy_ctx)
    with pytest.raises(ExpressionError):
        parse_expr("x^-2", xy_ctx)


def test_division_by_zero_literal(xy_ctx):
    with pytest.raises(ExpressionError):
        parse_expr("1/(x - x)", xy_ctx)


def test_parse_laurent_rejects_true_fractions(xy_ctx):
    with pytest.raises(ValueError):
        parse_laurent("1/(x+1)", xy_ctx)
    assert parse_laurent("1/x", xy_ctx) is not None


def test_format_round_trip_random(xy_ctx):
    rng = random.Random(PRNG_SEED)
    for _ in range(300):
        num = random_laurent(rng, xy_ctx)
        den = random_laurent(rng, xy_ctx)
        f = RationalFunction.from_laurent(num) / RationalFunction.from_laurent(den)
        assert parse_expr(format_rational(f), xy_ctx) == f


def _walk_expressions(node):
    if isinstance(node, dict):
        for value in node.values():
            yield from _walk_expressions(value)
    elif isinstance(node, list):
        for value in node:
            yield from _walk_expressions(value)
    elif isinstance(node, str):
        yield node


_EXPR_RE = re.compile(r"^[-+*/^()\sA-Za-z0-9_]+$")


def test_round_trip_on_corpus_expressions():
    """Every string in the corpus that parses over its variables round-trips."""
    seen = checked = 0
    for case_id in list_cases():
        doc = load_case(case_id)
        names = sorted(
            {m for text in _walk_expressions(doc) for m in re.findall(r"[A-Za-z_][A-Za-z0-9_]*", text)}
        )
        if not names:
            continue
        ctx = VariableContext(names)
        for text in _walk_expressions(doc):
            if not _EXPR_RE.match(text):
                continue
            seen += 1
            try:
                value = parse_expr(text, ctx)
            except (ExpressionError, ZeroDivisionError):
                continue
            checked += 1
            assert parse_expr(format_rational(value), ctx) == value
    assert checked >= 30, (seen, checked)
