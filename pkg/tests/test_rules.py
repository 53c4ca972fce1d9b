import itertools

import pytest
from hypothesis import given, settings, strategies as st

from riscgen.errors import MissingColumn, RejectionBudgetExhausted
from riscgen.protection.model import DependencyModel, TreeEdge
from riscgen.protection.rules import (
    DrivingRecord,
    RuleViolation,
    sample_valid,
    validate,
)
from riscgen.protection.schema import ColumnSchema, ProtectionSet

RULES_SCHEMA = ColumnSchema(
    ("SectionA", "SectionB1", "SectionB2", "SectionB3", "SectionB4", "QEF_41", "QEF_43")
)


def pset(schema, **included):
    bits = [1 if included.get(name, 0) else 0 for name in schema.names]
    return ProtectionSet(schema, tuple(bits))


def rule_ids(violations):
    return [v.rule_id for v in violations]


# --- single-rule cases ---------------------------------------------------------

def test_reference_row_is_valid(small_schema):
    # A=1, B2=1, B3=1, QEF_3=1: satisfies every rule.
    row = pset(small_schema, SectionA=1, SectionB2=1, SectionB3=1, QEF_3=1)
    assert validate(row, DrivingRecord(0, 0)) == []


def test_missing_mandatory_coverage(small_schema):
    assert rule_ids(validate(pset(small_schema))) == ["R1"]


def test_b1_superset_conflict(small_schema):
    assert rule_ids(validate(pset(small_schema, SectionA=1, SectionB1=1, SectionB2=1))) == ["R2"]


def test_b3_b4_conflict(small_schema):
    assert rule_ids(validate(pset(small_schema, SectionA=1, SectionB3=1, SectionB4=1))) == ["R3"]


def test_qef41_conditional_mode():
    claims = DrivingRecord(claims=1, suspensions=0)
    clean = DrivingRecord(claims=0, suspensions=0)
    with_41 = pset(RULES_SCHEMA, SectionA=1, QEF_41=1)
    assert rule_ids(validate(with_41, claims)) == ["R4"]
    assert validate(with_41, DrivingRecord(claims=0, suspensions=2)) != []
    assert validate(with_41, clean) == []
    assert validate(with_41, None) == []  # no record: nothing to condition on


def test_qef41_strict_mode():
    with_41 = pset(RULES_SCHEMA, SectionA=1, QEF_41=1)
    assert rule_ids(validate(with_41, None, qef41_mode="strict")) == ["R4"]
    without_41 = pset(RULES_SCHEMA, SectionA=1)
    assert validate(without_41, None, qef41_mode="strict") == []


def test_qef43_requires_property_coverage():
    no_b = pset(RULES_SCHEMA, SectionA=1, QEF_43=1)
    assert rule_ids(validate(no_b, None)) == ["R5"]
    with_b = pset(RULES_SCHEMA, SectionA=1, SectionB4=1, QEF_43=1)
    assert validate(with_b, None) == []


def test_violations_reported_in_fixed_order():
    everything_wrong = pset(
        RULES_SCHEMA, SectionB1=1, SectionB3=1, SectionB4=1, QEF_41=1, QEF_43=1
    )
    ids = rule_ids(validate(everything_wrong, DrivingRecord(claims=2, suspensions=0)))
    assert ids == ["R1", "R2", "R3", "R4"]  # R5 satisfied: B coverage present
    ids2 = rule_ids(validate(pset(RULES_SCHEMA, QEF_43=1), DrivingRecord(0, 0)))
    assert ids2 == ["R1", "R5"]


def test_missing_column_modes():
    no_41_schema = ColumnSchema(
        ("SectionA", "SectionB1", "SectionB2", "SectionB3", "SectionB4", "QEF_43")
    )
    row = pset(no_41_schema, SectionA=1)
    assert validate(row, DrivingRecord(claims=3, suspensions=0)) == []  # R4 skipped
    with pytest.raises(MissingColumn):
        validate(row, DrivingRecord(claims=3, suspensions=0), missing_columns="strict")


def test_validate_is_pure(small_schema):
    row = pset(small_schema, SectionA=1, SectionB1=1, SectionB2=1)
    record = DrivingRecord(claims=1, suspensions=1)
    assert validate(row, record) == validate(row, record)


def test_rule_violation_rejects_unknown_id():
    with pytest.raises(ValueError):
        RuleViolation("R9", "bogus")


# --- brute-force agreement ------------------------------------------------------

def brute_force_rules(a, b1, b2, b3, b4, q41, q43, claims, qef41_mode="conditional"):
    """Independent straight-line restatement of the five rules."""
    out = []
    if a == 0:
        out.append("R1")
    if b1 == 1 and (b2 == 1 or b3 == 1 or b4 == 1):
        out.append("R2")
    if b3 == 1 and b4 == 1:
        out.append("R3")
    if q41 == 1 and (qef41_mode == "strict" or claims > 0):
        out.append("R4")
    if q43 == 1 and b1 == 0 and b2 == 0 and b3 == 0 and b4 == 0:
        out.append("R5")
    return out


@pytest.mark.parametrize("claims", [0, 1])
@pytest.mark.parametrize("qef41_mode", ["conditional", "strict"])
def test_validate_matches_brute_force_on_all_combinations(claims, qef41_mode):
    record = DrivingRecord(claims=claims, suspensions=0)
    for bits in itertools.product((0, 1), repeat=7):
        row = ProtectionSet(RULES_SCHEMA, bits)
        expected = brute_force_rules(*bits, claims, qef41_mode=qef41_mode)
        assert rule_ids(validate(row, record, qef41_mode=qef41_mode)) == expected, bits


# --- rejection sampling ----------------------------------------------------------

def constant_edges(schema, root, assignments):
    """Edges hanging every non-root column off the root with fixed behavior.

    assignments maps column name to (p1_given_root1, p1_given_root0).
    """
    return tuple(
        TreeEdge(parent=root, child=name, p1_given_parent1=assignments[name][0],
                 p1_given_parent0=assignments[name][1])
        for name in schema.names
        if name != root
    )


def half_valid_model(small_schema) -> DependencyModel:
    """Emits an invalid B1+B2 row or a fully valid row, each with probability 0.5."""
    assignments = {
        "SectionA": (1.0, 1.0),
        "SectionB2": (1.0, 1.0),
        "SectionB3": (0.0, 1.0),
        "SectionB4": (0.0, 0.0),
        "QEF_2": (0.0, 0.0),
        "QEF_3": (0.0, 1.0),
        "QEF_48a": (0.0, 0.0),
    }
    return DependencyModel(
        schema=small_schema,
        root="SectionB1",
        root_p1=0.5,
        edges=constant_edges(small_schema, "SectionB1", assignments),
        rows_fitted=0,
        seed=0,
        smoothing=0.0,
    )


def always_valid_model(small_schema) -> DependencyModel:
    assignments = {
        "SectionA": (1.0, 1.0),
        "SectionB2": (1.0, 1.0),
        "SectionB3": (1.0, 1.0),
        "SectionB4": (0.0, 0.0),
        "QEF_2": (0.0, 0.0),
        "QEF_3": (1.0, 1.0),
        "QEF_48a": (0.0, 0.0),
    }
    return DependencyModel(
        schema=small_schema,
        root="SectionB1",
        root_p1=0.0,
        edges=constant_edges(small_schema, "SectionB1", assignments),
        rows_fitted=0,
        seed=0,
        smoothing=0.0,
    )


def never_valid_model(small_schema) -> DependencyModel:
    assignments = {name: (0.0, 0.0) for name in small_schema.names if name != "SectionA"}
    return DependencyModel(
        schema=small_schema,
        root="SectionA",
        root_p1=0.0,
        edges=constant_edges(small_schema, "SectionA", assignments),
        rows_fitted=0,
        seed=0,
        smoothing=0.0,
    )


def test_already_valid_model_returns_first_attempt(small_schema):
    draw = sample_valid(always_valid_model(small_schema), DrivingRecord(0, 0), rng_seed=1)
    assert draw.attempts == 1
    assert validate(draw.protections, DrivingRecord(0, 0)) == []
    assert draw.protections["SectionA"] == 1


def test_budget_exhaustion(small_schema):
    with pytest.raises(RejectionBudgetExhausted) as err:
        sample_valid(never_valid_model(small_schema), DrivingRecord(0, 0),
                     rng_seed=3, max_attempts=10)
    assert err.value.attempts == 10


def test_mean_attempts_matches_geometric_oracle(small_schema):
    # Validity probability 1/2 per draw makes attempts geometric with mean 2.
    model = half_valid_model(small_schema)
    record = DrivingRecord(0, 0)
    total = 0
    for seed in range(1000):
        draw = sample_valid(model, record, rng_seed=seed)
        assert validate(draw.protections, record) == []
        total += draw.attempts
    assert 1.8 <= total / 1000 <= 2.2


def test_sample_valid_deterministic(small_schema):
    model = half_valid_model(small_schema)
    record = DrivingRecord(0, 0)
    a = sample_valid(model, record, rng_seed=77)
    b = sample_valid(model, record, rng_seed=77)
    assert a == b


@settings(max_examples=30)
@given(seed=st.integers(min_value=0, max_value=2**31))
def test_every_emission_is_rule_valid(small_schema, seed):
    model = half_valid_model(small_schema)
    record = DrivingRecord(claims=1, suspensions=0)
    draw = sample_valid(model, record, rng_seed=seed)
    assert validate(draw.protections, record) == []
