import itertools
import json
import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from riscgen.errors import EmptyTable
from riscgen.protection.model import (
    enumerate_joint,
    fit,
    load_model,
    sample,
    save_model,
)
from riscgen.protection.schema import ColumnSchema, ProtectionTable


def two_column_equal_table():
    schema = ColumnSchema(("QEF_2", "QEF_3"))
    return ProtectionTable.from_rows(schema, [[1, 1], [1, 1], [0, 0], [0, 0]])


def test_fit_rejects_empty_or_short_tables():
    schema = ColumnSchema(("QEF_2",))
    empty = ProtectionTable(schema, np.zeros((0, 1), dtype=np.uint8))
    with pytest.raises(EmptyTable):
        fit(empty, rng_seed=1)
    single = ProtectionTable.from_rows(schema, [[1]])
    with pytest.raises(EmptyTable):
        fit(single, rng_seed=1)


def test_single_constant_column_stays_constant():
    schema = ColumnSchema(("QEF_2",))
    table = ProtectionTable.from_rows(schema, [[1], [1], [1]])
    model = fit(table, rng_seed=1)
    assert model.root_p1 == 1.0  # root marginal is unsmoothed
    drawn = sample(model, 50, rng_seed=9)
    assert drawn.rows.all()


def test_perfect_dependence_joint_distribution():
    # Expected values enumerated from the fitted tree's parameters:
    # root marginal 2/4, conditionals (2 + 0.5)/(2 + 1) and (0 + 0.5)/(2 + 1).
    model = fit(two_column_equal_table(), rng_seed=1)
    joint = enumerate_joint(model)
    assert joint[(1, 1)] == pytest.approx(0.5 * 5 / 6)
    assert joint[(0, 0)] == pytest.approx(0.5 * 5 / 6)
    assert joint[(1, 0)] == pytest.approx(0.5 * 1 / 6)
    assert joint[(0, 1)] == pytest.approx(0.5 * 1 / 6)

    drawn = sample(model, 4000, rng_seed=5)
    counts = {bits: 0 for bits in joint}
    for row in drawn.rows:
        counts[tuple(int(b) for b in row)] += 1
    for bits, p in joint.items():
        assert counts[bits] / 4000 == pytest.approx(p, abs=0.035)


def test_perfect_dependence_without_smoothing():
    model = fit(two_column_equal_table(), rng_seed=1, smoothing=0.0)
    joint = enumerate_joint(model)
    assert joint[(1, 1)] + joint[(0, 0)] == pytest.approx(1.0)
    drawn = sample(model, 1000, rng_seed=7)
    assert (drawn.rows[:, 0] == drawn.rows[:, 1]).all()


def test_marginal_fidelity(bootstrap_table, fitted_model):
    empirical = bootstrap_table.column_means()
    marginals = fitted_model.column_marginals()
    for i, name in enumerate(bootstrap_table.schema.names):
        assert abs(marginals[name] - empirical[i]) <= fitted_model.smoothing


def test_expected_row_sum_matches_calibration(fitted_model):
    expected = sum(fitted_model.column_marginals().values())
    assert abs(expected - 7.24) <= 0.25


def test_fit_tree_spans_all_columns(fitted_model):
    assert len(fitted_model.edges) == len(fitted_model.schema) - 1
    reached = {fitted_model.root}
    for edge in fitted_model.edges:
        assert edge.parent in reached
        reached.add(edge.child)
    assert reached == set(fitted_model.schema.names)


def test_fit_is_deterministic(bootstrap_table):
    a = fit(bootstrap_table, rng_seed=42)
    b = fit(bootstrap_table, rng_seed=42)
    assert a == b


def test_mi_tie_break_is_lexicographic():
    # Three mutually independent constant-free columns: all pairwise MI is 0,
    # so edge choice falls back to lexicographic column-name order.
    schema = ColumnSchema(("QEF_2", "QEF_3", "QEF_44"))
    rows = [[0, 0, 0], [0, 1, 1], [1, 0, 1], [1, 1, 0]] * 2
    model = fit(ProtectionTable.from_rows(schema, rows), rng_seed=1)
    pairs = {frozenset((e.parent, e.child)) for e in model.edges}
    assert pairs == {frozenset({"QEF_2", "QEF_3"}), frozenset({"QEF_2", "QEF_44"})}


def test_sample_determinism_and_prefix_property(fitted_model):
    a = sample(fitted_model, 40, rng_seed=123)
    b = sample(fitted_model, 40, rng_seed=123)
    assert np.array_equal(a.rows, b.rows)
    longer = sample(fitted_model, 80, rng_seed=123)
    assert np.array_equal(longer.rows[:40], a.rows)
    other = sample(fitted_model, 40, rng_seed=124)
    assert not np.array_equal(other.rows, a.rows)


def test_sample_requires_positive_n(fitted_model):
    with pytest.raises(ValueError):
        sample(fitted_model, 0, rng_seed=1)


def test_sample_matches_enumerated_joint(small_schema):
    rows = [
        [1, 0, 1, 1, 0, 0, 1, 0],
        [1, 1, 0, 0, 0, 1, 0, 1],
        [1, 0, 0, 1, 0, 1, 1, 0],
        [1, 0, 1, 0, 0, 0, 0, 1],
        [1, 1, 0, 0, 0, 0, 1, 0],
        [1, 0, 0, 0, 0, 1, 0, 0],
    ]
    model = fit(ProtectionTable.from_rows(small_schema, rows), rng_seed=3)
    joint = enumerate_joint(model)
    drawn = sample(model, 6000, rng_seed=11)
    marginals = model.column_marginals()
    for i, name in enumerate(small_schema.names):
        assert drawn.rows[:, i].mean() == pytest.approx(marginals[name], abs=0.03)
    assert math.fsum(joint.values()) == pytest.approx(1.0)


def test_model_json_round_trip(tmp_path, fitted_model):
    path = tmp_path / "model.json"
    save_model(fitted_model, path)
    loaded = load_model(path)
    assert loaded == fitted_model
    doc = json.loads(path.read_text())
    assert doc["schema"] == list(fitted_model.schema.names)
    assert {"rows", "seed", "smoothing"} <= set(doc["fit"])


@settings(max_examples=25)
@given(seed=st.integers(min_value=0, max_value=2**63))
def test_sampling_reproducible_over_seeds(seed):
    model = fit(two_column_equal_table(), rng_seed=0)
    a = sample(model, 5, rng_seed=seed)
    b = sample(model, 5, rng_seed=seed)
    assert np.array_equal(a.rows, b.rows)


def test_probability_agrees_with_enumeration(small_schema):
    rows = [[1, 0, 1, 1, 0, 0, 1, 0], [1, 1, 0, 0, 0, 1, 0, 1], [1, 0, 0, 0, 0, 1, 1, 1]]
    model = fit(ProtectionTable.from_rows(small_schema, rows), rng_seed=3)
    joint = enumerate_joint(model)
    total = 0.0
    for bits in itertools.product((0, 1), repeat=len(small_schema)):
        p = model.probability(bits)
        total += p
        if p > 0:
            assert joint[bits] == pytest.approx(p)
    assert total == pytest.approx(1.0)
