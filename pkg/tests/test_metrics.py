import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from hypothesis.extra.numpy import arrays
from scipy import stats as scipy_stats

from riscgen.errors import EmptyScores, EmptyTable, SchemaMismatch
from riscgen.protection.metrics import (
    Z_CRITICAL,
    inverted_ks,
    new_uc_count,
    per_column_inverted_ks,
    uc_stats,
    z_test,
)
from riscgen.protection.schema import ColumnSchema, ProtectionTable


def table(names, rows):
    return ProtectionTable.from_rows(ColumnSchema(tuple(names)), rows)


def binary_tables(n_cols=3, max_rows=12):
    cols = ("QEF_2", "QEF_3", "QEF_44", "QEF_45", "QEF_47", "QEF_48", "QEF_48a", "QEF_8")
    return st.integers(min_value=1, max_value=max_rows).flatmap(
        lambda n: arrays(np.uint8, (n, n_cols), elements=st.integers(0, 1)).map(
            lambda a: ProtectionTable(ColumnSchema(cols[:n_cols]), a)
        )
    )


# --- inverted KS -------------------------------------------------------------

def test_inverted_ks_self_comparison_is_exactly_one():
    t = table(["QEF_2", "QEF_3"], [[1, 0], [0, 1], [1, 1]])
    assert inverted_ks(t, t) == 1.0


def test_inverted_ks_single_column_gap():
    real = table(["QEF_2"], [[1], [1], [1], [1], [1], [0], [0], [0], [0], [0]])
    syn = table(["QEF_2"], [[1], [1], [1], [1], [0], [0], [0], [0], [0], [0]])
    assert inverted_ks(real, syn) == pytest.approx(0.9, abs=1e-12)


def test_inverted_ks_two_column_average():
    # Column gaps 0.1 and 0.3 by construction -> 1 - mean = 0.8 exactly.
    real = table(
        ["QEF_2", "QEF_3"],
        [[1, 1]] * 5 + [[0, 1]] * 3 + [[0, 0]] * 2,
    )
    syn = table(
        ["QEF_2", "QEF_3"],
        [[1, 1]] * 4 + [[0, 1]] * 1 + [[0, 0]] * 5,
    )
    assert abs(real.column_means()[0] - syn.column_means()[0]) == pytest.approx(0.1)
    assert abs(real.column_means()[1] - syn.column_means()[1]) == pytest.approx(0.3)
    assert inverted_ks(real, syn) == pytest.approx(0.8, abs=1e-12)


def test_inverted_ks_errors():
    t = table(["QEF_2"], [[1]])
    other = table(["QEF_3"], [[1]])
    with pytest.raises(SchemaMismatch):
        inverted_ks(t, other)
    empty = ProtectionTable(ColumnSchema(("QEF_2",)), np.zeros((0, 1), dtype=np.uint8))
    with pytest.raises(EmptyTable):
        inverted_ks(t, empty)


@settings(max_examples=60)
@given(a=binary_tables(), b=binary_tables())
def test_inverted_ks_symmetric_and_agrees_with_scipy(a, b):
    score = inverted_ks(a, b)
    assert score == inverted_ks(b, a)
    assert 0.0 <= score <= 1.0
    # Independent oracle: the generic two-sample KS statistic per column.
    gaps = [
        scipy_stats.ks_2samp(a.rows[:, i], b.rows[:, i], method="asymp").statistic
        for i in range(a.rows.shape[1])
    ]
    assert score == pytest.approx(1.0 - float(np.mean(gaps)), abs=1e-12)


# --- unique combinations ------------------------------------------------------

def test_uc_stats_hand_enumerated():
    t = table(["QEF_2", "QEF_3"], [[1, 0], [1, 0], [0, 1]])
    s = uc_stats(t)
    assert s.unique_count == 2
    assert s.max_freq_pct == pytest.approx(200 / 3)
    assert s.median_freq_pct == pytest.approx(50.0)
    assert s.mean_freq_pct == pytest.approx(50.0)


def test_uc_stats_single_combination():
    t = table(["QEF_2"], [[1], [1], [1]])
    s = uc_stats(t)
    assert s.unique_count == 1
    assert s.mean_freq_pct == s.median_freq_pct == s.q75_freq_pct == s.max_freq_pct == 100.0


def test_uc_stats_empty_table():
    empty = ProtectionTable(ColumnSchema(("QEF_2",)), np.zeros((0, 1), dtype=np.uint8))
    with pytest.raises(EmptyTable):
        uc_stats(empty)


def brute_force_uc(tbl: ProtectionTable):
    counts: dict[tuple, int] = {}
    for row in tbl.rows:
        counts[tuple(int(x) for x in row)] = counts.get(tuple(int(x) for x in row), 0) + 1
    freqs = sorted(100.0 * c / len(tbl) for c in counts.values())
    return len(counts), freqs


def test_uc_stats_agrees_with_brute_force_counting():
    rng = np.random.default_rng(2024)
    cols = ("QEF_2", "QEF_3", "QEF_44", "QEF_45", "QEF_47", "QEF_48", "QEF_48a", "QEF_8")
    for _ in range(10):
        rows = rng.integers(0, 2, size=(200, 8)).astype(np.uint8)
        tbl = ProtectionTable(ColumnSchema(cols), rows)
        s = uc_stats(tbl)
        count, freqs = brute_force_uc(tbl)
        assert s.unique_count == count
        assert s.mean_freq_pct == pytest.approx(float(np.mean(freqs)))
        assert s.median_freq_pct == pytest.approx(float(np.median(freqs)))
        assert s.q75_freq_pct == pytest.approx(float(np.percentile(freqs, 75)))
        assert s.max_freq_pct == pytest.approx(max(freqs))
        assert math.fsum(np.array(freqs)) == pytest.approx(100.0, abs=1e-9)


@settings(max_examples=60)
@given(t=binary_tables())
def test_uc_frequencies_sum_to_hundred(t):
    s = uc_stats(t)
    assert 0 < s.median_freq_pct <= s.q75_freq_pct <= s.max_freq_pct <= 100.0
    assert s.mean_freq_pct * s.unique_count == pytest.approx(100.0, abs=1e-9)


# --- novel combinations -------------------------------------------------------

def test_new_uc_count_subset_is_zero():
    training = table(["QEF_2", "QEF_3"], [[1, 0], [0, 1]])
    synthetic = table(["QEF_2", "QEF_3"], [[1, 0], [1, 0], [0, 1]])
    assert new_uc_count(training, synthetic) == 0


def test_new_uc_count_hand_set_difference():
    training = table(["QEF_2", "QEF_3"], [[1, 0]])
    synthetic = table(["QEF_2", "QEF_3"], [[1, 0], [0, 1], [1, 1]])
    assert new_uc_count(training, synthetic) == 2


def test_new_uc_count_schema_mismatch():
    with pytest.raises(SchemaMismatch):
        new_uc_count(table(["QEF_2"], [[1]]), table(["QEF_3"], [[1]]))


def test_fitted_model_reaches_unseen_combinations(bootstrap_table, fitted_model):
    from riscgen.protection.model import sample

    synthetic = sample(fitted_model, 5000, rng_seed=1)
    assert new_uc_count(bootstrap_table, synthetic) > 0


# --- z-test -------------------------------------------------------------------

def test_z_test_equal_inputs():
    result = z_test([0.9, 0.8, 0.95], [0.9, 0.8, 0.95])
    assert result.z == 0.0
    assert not result.reject
    assert result.threshold == 3.290527


def test_z_test_hand_computed_value():
    # 100 scores per side, each list built to have ddof=1 variance 1e-4:
    # z = 0.1 / sqrt(2e-4 / 100) = 70.7107.
    d = math.sqrt(99 * 1e-4 / 100)
    a = [0.9 + d] * 50 + [0.9 - d] * 50
    b = [0.8 + d] * 50 + [0.8 - d] * 50
    result = z_test(a, b)
    assert result.z == pytest.approx(0.1 / math.sqrt(2e-4 / 100), rel=1e-9)
    assert result.z == pytest.approx(70.7107, abs=1e-4)
    assert result.reject


def test_z_test_zero_variance_cases():
    same = z_test([0.5] * 4, [0.5] * 4)
    assert same.z == 0.0 and not same.reject
    diff = z_test([0.6] * 4, [0.5] * 4)
    assert math.isinf(diff.z) and diff.z > 0 and diff.reject
    neg = z_test([0.5] * 4, [0.6] * 4)
    assert math.isinf(neg.z) and neg.z < 0 and neg.reject


def test_z_test_empty_scores():
    with pytest.raises(EmptyScores):
        z_test([], [0.5])
    with pytest.raises(EmptyScores):
        z_test([0.5], [])


@settings(max_examples=60)
@given(
    a=st.lists(st.floats(0, 1, allow_nan=False), min_size=1, max_size=20),
    b=st.lists(st.floats(0, 1, allow_nan=False), min_size=1, max_size=20),
)
def test_z_test_antisymmetry(a, b):
    fwd = z_test(a, b)
    rev = z_test(b, a)
    if math.isinf(fwd.z):
        assert rev.z == -fwd.z
    else:
        assert rev.z == pytest.approx(-fwd.z, abs=1e-9)
    assert fwd.reject == rev.reject


def test_per_column_scores_shape(bootstrap_table, fitted_model):
    from riscgen.protection.model import sample

    synthetic = sample(fitted_model, 1000, rng_seed=2)
    scores = per_column_inverted_ks(bootstrap_table, synthetic)
    assert len(scores) == len(bootstrap_table.schema)
    assert inverted_ks(bootstrap_table, synthetic) == pytest.approx(float(np.mean(scores)))


def test_z_critical_constant():
    assert Z_CRITICAL == 3.290527
