import random

import pytest

from mutalg import Quiver, Seed, VariableContext, parse_expr, skew_symmetrizer
from mutalg.seeds import mutate_columns
from conftest import PRNG_SEED, random_skew_symmetric_seed


def sl3_seed(with_ledger=True):
    quiver = Quiver(["x1", "x2", "x3"], ["x1", "x3"], [("x1", "x2", 1), ("x2", "x3", 1)])
    if not with_ledger:
        return Seed.from_quiver(quiver)
    ctx = VariableContext(["a", "b", "c"])
    ledger = {
        "x1": parse_expr("a*c-b", ctx),
        "x2": parse_expr("a", ctx),
        "x3": parse_expr("b", ctx),
    }
    return Seed.from_quiver(quiver, ledger, ctx)


def cubic_ix_seed():
    names = ["T1", "T2", "T3", "T4", "T5", "T6", "T7", "T8", "T11"]
    arrows = [
        ("T5", "T6", 1), ("T6", "T1", 1), ("T6", "T7", 1), ("T6", "T2", 1),
        ("T6", "T8", 1), ("T7", "T1", 1), ("T7", "T4", 1), ("T7", "T8", 2),
        ("T11", "T6", 1), ("T11", "T7", 1), ("T3", "T7", 1),
    ]
    return Seed.from_quiver(Quiver(names, [n for n in names if n not in ("T6", "T7")], arrows))


def test_quiver_to_matrix_convention():
    seed = sl3_seed(with_ledger=False)
    assert seed.column(1) == (1, 0, -1)
    cubic = cubic_ix_seed()
    assert cubic.column(cubic.vertex_index("T7"))[cubic.vertex_index("T8")] == -2
    empty = Quiver(["a", "b"], ["b"], [])
    assert Seed.from_quiver(empty).column(0) == (0, 0)


def test_matrix_mutation_examples():
    cols = {0: (0, -1), 1: (1, 0)}
    assert mutate_columns(cols, 0) == {0: (0, 1), 1: (-1, 0)}
    sl3 = sl3_seed(with_ledger=False)
    assert sl3.mutate(1).column(1) == (-1, 0, 1)
    # rank-2 with b21 = 2, b12 = -1: mutation at vertex 0 negates its row/column
    cols = {0: (0, 2), 1: (-1, 0)}
    mutated = mutate_columns(cols, 0)
    assert mutated[0] == (0, -2)
    assert mutated[1][0] == 1 and mutated[1][1] == 0


def test_matrix_mutation_is_involution():
    rng = random.Random(PRNG_SEED)
    for _ in range(200):
        seed = random_skew_symmetric_seed(rng, max_size=5)
        cols = seed.column_map
        k = rng.choice(seed.mutable)
        assert mutate_columns(mutate_columns(cols, k), k) == cols


def test_mutation_rejects_frozen_vertex():
    seed = sl3_seed()
    with pytest.raises(ValueError):
        seed.mutate(0)


def test_exchange_binomials_examples():
    sl3 = sl3_seed(with_ledger=False)
    plus, minus = sl3.exchange_binomials(1)
    sctx = sl3.seed_ctx()
    assert plus == parse_expr("x1", sctx).as_laurent()
    assert minus == parse_expr("x3", sctx).as_laurent()
    cubic = cubic_ix_seed()
    plus, minus = cubic.exchange_binomials(cubic.vertex_index("T6"))
    cctx = cubic.seed_ctx()
    assert plus == parse_expr("T5*T11", cctx).as_laurent()
    assert minus == parse_expr("T1*T2*T7*T8", cctx).as_laurent()
    degenerate = Seed.create(["u", "v"], ["v"], {0: (0, 0)})
    one_plus, one_minus = degenerate.exchange_binomials(0)
    assert one_plus.is_one and one_minus.is_one


def test_sl3_mutation_identity():
    seed = sl3_seed()
    mutated = seed.mutate(1)
    assert mutated.ledger[1] == parse_expr("c", seed.initial_ctx)


def test_sl4_mutation_identities():
    quiver = Quiver(
        ["x1", "x2", "x3", "x4", "x5"],
        ["x3", "x4", "x5"],
        [("x1", "x4", 1), ("x3", "x1", 1), ("x3", "x2", 1), ("x2", "x5", 1)],
    )
    ctx = VariableContext(["a", "b", "c", "d", "e"])
    ledger = {
        "x1": parse_expr("e", ctx),
        "x2": parse_expr("a", ctx),
        "x3": parse_expr("a*d-c", ctx),
        "x4": parse_expr("c-a*d-b*e", ctx),
        "x5": parse_expr("c", ctx),
    }
    seed = Seed.from_quiver(quiver, ledger, ctx)
    assert seed.mutate(0).ledger[0] == parse_expr("-b", ctx)
    assert seed.mutate(1).ledger[1] == parse_expr("d", ctx)


def test_rank2_mutation_identities():
    for a, b in [(1, 1), (2, 1), (2, 3)]:
        seed = Seed.create(["x1", "x2"], [], {0: (0, a), 1: (-b, 0)})
        ctx = seed.initial_ctx
        assert seed.mutate(0).ledger[0] == parse_expr(f"(1+x2^{a})/x1", ctx)
        assert seed.mutate(1).ledger[1] == parse_expr(f"(1+x1^{b})/x2", ctx)


def test_cubic_mutation_identities():
    seed = cubic_ix_seed()
    ctx = seed.initial_ctx
    k6, k7 = seed.vertex_index("T6"), seed.vertex_index("T7")
    t9 = parse_expr("(T5*T11+T1*T2*T7*T8)/T6", ctx)
    t10 = parse_expr("(T3*T6*T11+T1*T4*T8^2)/T7", ctx)
    assert seed.mutate(k6).ledger[k6] == t9
    assert seed.mutate(k7).ledger[k7] == t10
    composite = seed.mutate(k6).mutate(k7)
    assert composite.ledger[k7] == t9 * t10 - parse_expr("T1*T2*T3*T8*T11", ctx)


def test_mutate_sequence_empty_is_identity():
    seed = sl3_seed()
    assert seed.mutate_sequence([]) is seed


def test_pentagon_against_independent_recurrence():
    """Lyness 5-cycle recurrence f_{n+1} = (1 + f_n)/f_{n-1}, iterated with
    sympy as the independent oracle."""
    import sympy

    x1, x2 = sympy.symbols("x1 x2")
    values = [x1, x2]
    for _ in range(10):
        values.append(sympy.cancel((1 + values[-1]) / values[-2]))
    assert sympy.cancel(values[10] - values[0]) == 0
    assert sympy.cancel(values[11] - values[1]) == 0
    assert len({sympy.srepr(sympy.factor(v)) for v in values[:10]}) == 5

    seed = Seed.create(["x1", "x2"], [], {0: (0, 1), 1: (-1, 0)})
    current = seed
    collected = set(seed.ledger)
    for i in range(10):
        current = current.mutate(i % 2)
        collected.add(current.ledger[i % 2])
    assert current.ledger == seed.ledger
    assert current.column_map == seed.column_map
    assert len(collected) == 5
    half = seed.mutate_sequence([0, 1, 0, 1, 0])
    assert half.ledger == (seed.ledger[1], seed.ledger[0])


def test_is_maximal_rank_examples():
    assert sl3_seed().is_maximal_rank()
    zero = Seed.create(["u", "v"], ["v"], {0: (0, 0)})
    assert not zero.is_maximal_rank()
    assert cubic_ix_seed().is_maximal_rank()


def test_is_primitive_examples():
    assert sl3_seed().is_primitive()
    assert not Seed.create(["u", "v"], ["v"], {0: (0, 2)}).is_primitive()
    doubled = Seed.create(["x1", "x2"], [], {0: (0, 2), 1: (-4, 0)})
    assert not doubled.is_primitive()


def test_skew_symmetrizer_examples():
    assert skew_symmetrizer([[0, 1], [-1, 0]]) == (1, 1)
    assert skew_symmetrizer([[0, 2], [-1, 0]]) == (1, 2)
    assert skew_symmetrizer([[0, 1], [1, 0]]) is None
    assert skew_symmetrizer([[0, 1], [0, 0]]) is None
    assert skew_symmetrizer([[1, 0], [0, 0]]) is None


def test_seed_creation_rejects_bad_principal_part():
    with pytest.raises(ValueError):
        Seed.create(["x1", "x2"], [], {0: (0, 1), 1: (1, 0)})


def test_mutation_involution_on_ledger_and_matrix():
    rng = random.Random(PRNG_SEED)
    for _ in range(500):
        seed = random_skew_symmetric_seed(rng, max_size=5)
        for _ in range(rng.randint(0, 2)):
            seed = seed.mutate(rng.choice(seed.mutable))
        k = rng.choice(seed.mutable)
        twice = seed.mutate(k).mutate(k)
        assert twice.column_map == seed.column_map
        assert twice.ledger == seed.ledger


def test_structural_predicates_preserved_under_mutation():
    rng = random.Random(PRNG_SEED)
    for _ in range(150):
        seed = random_skew_symmetric_seed(rng, max_size=5)
        k = rng.choice(seed.mutable)
        mutated = seed.mutate(k)
        assert mutated.is_maximal_rank() == seed.is_maximal_rank()
        assert mutated.is_primitive() == seed.is_primitive()
        witness = skew_symmetrizer(seed.principal_part())
        assert witness is not None
        after = mutated.principal_part()
        n = len(after)
        assert all(
            witness[i] * after[i][j] == -witness[j] * after[j][i]
            for i in range(n)
            for j in range(n)
        )


def test_laurent_phenomenon_regression():
    rng = random.Random(PRNG_SEED)
    for _ in range(30):
        seed = random_skew_symmetric_seed(rng, max_size=4, entry_bound=2)
        current = seed
        for _ in range(rng.randint(1, 6)):
            current = current.mutate(rng.choice(current.mutable))
        assert all(entry.is_laurent for entry in current.ledger)


def test_frozen_ledger_entries_never_change():
    rng = random.Random(PRNG_SEED)
    for _ in range(100):
        seed = random_skew_symmetric_seed(rng, max_size=5)
        frozen = seed.frozen_indices
        current = seed
        for _ in range(rng.randint(1, 4)):
            current = current.mutate(rng.choice(current.mutable))
        for i in frozen:
            assert current.ledger[i] == seed.ledger[i]
            assert current.names[i] == seed.names[i]


def test_degenerate_mutation_is_total():
    seed = Seed.create(["u", "v"], ["v"], {0: (0, 0)})
    assert seed.is_degenerate_at(0)
    mutated = seed.mutate(0)
    assert mutated.ledger[0] == parse_expr("2/u", seed.initial_ctx)
