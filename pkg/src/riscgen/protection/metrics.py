"""Distribution-fidelity metrics for synthetic protection tables.

Implements the evaluation battery used to compare a synthetic table against
a reference table: per-column inverted Kolmogorov-Smirnov score, unique
combination statistics, novel-combination counting, and a two-sample z-test
over per-column score vectors.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from riscgen.errors import EmptyScores, EmptyTable, SchemaMismatch
from riscgen.protection.schema import ProtectionTable

# Two-sided critical value for alpha = 0.001.
Z_CRITICAL = 3.290527


def _check_schemas(a: ProtectionTable, b: ProtectionTable) -> None:
    if a.schema.names != b.schema.names:
        raise SchemaMismatch("tables have different column schemas")


def inverted_ks(real: ProtectionTable, synthetic: ProtectionTable) -> float:
    """1 minus the mean per-column two-sample KS statistic.

    For a 0/1 column the KS statistic is the empirical-CDF gap at 0, which is
    exactly |p_real - p_synthetic|. A score of 1.0 means the marginals agree
    perfectly; the score is symmetric in its arguments.
    """
    _check_schemas(real, synthetic)
    if len(real) == 0 or len(synthetic) == 0:
        raise EmptyTable("inverted_ks needs non-empty tables")
    gaps = np.abs(real.column_means() - synthetic.column_means())
    return float(1.0 - gaps.mean())


def per_column_inverted_ks(real: ProtectionTable, synthetic: ProtectionTable) -> list[float]:
    """Per-column scores 1 - |p_real - p_synthetic|, in schema order."""
    _check_schemas(real, synthetic)
    if len(real) == 0 or len(synthetic) == 0:
        raise EmptyTable("per-column scores need non-empty tables")
    gaps = np.abs(real.column_means() - synthetic.column_means())
    return [float(1.0 - g) for g in gaps]


@dataclass(frozen=True)
class UcStats:
    """Distribution of unique row combinations, frequencies in percent."""

    unique_count: int
    mean_freq_pct: float
    median_freq_pct: float
    q75_freq_pct: float
    max_freq_pct: float

    def as_dict(self) -> dict[str, float]:
        return {
            "unique_count": self.unique_count,
            "mean_freq_pct": self.mean_freq_pct,
            "median_freq_pct": self.median_freq_pct,
            "q75_freq_pct": self.q75_freq_pct,
            "max_freq_pct": self.max_freq_pct,
        }


def uc_stats(table: ProtectionTable) -> UcStats:
    if len(table) == 0:
        raise EmptyTable("uc_stats needs a non-empty table")
    counts: dict[bytes, int] = {}
    for row in table.rows:
        key = row.tobytes()
        counts[key] = counts.get(key, 0) + 1
    freqs = np.array(sorted(counts.values()), dtype=np.float64) * 100.0 / len(table)
    return UcStats(
        unique_count=len(counts),
        mean_freq_pct=float(freqs.mean()),
        median_freq_pct=float(np.median(freqs)),
        q75_freq_pct=float(np.percentile(freqs, 75)),
        max_freq_pct=float(freqs.max()),
    )


def new_uc_count(training: ProtectionTable, synthetic: ProtectionTable) -> int:
    """Distinct synthetic rows never seen among the training rows."""
    _check_schemas(training, synthetic)
    return len(synthetic.distinct_rows() - training.distinct_rows())


@dataclass(frozen=True)
class ZTestResult:
    z: float
    reject: bool
    threshold: float
    mean_a: float
    mean_b: float
    n_a: int
    n_b: int


def z_test(scores_a, scores_b) -> ZTestResult:
    """Unpaired two-sample z-test on per-column score vectors.

    Positive z means the first argument scores higher. The null hypothesis of
    equal performance is rejected at alpha = 0.001 when |z| > 3.290527. When
    both variances are zero: equal means give z = 0 (no rejection), unequal
    means give an infinite-magnitude z (rejection).
    """
    a = np.asarray(list(scores_a), dtype=np.float64)
    b = np.asarray(list(scores_b), dtype=np.float64)
    if a.size == 0 or b.size == 0:
        raise EmptyScores("z_test needs non-empty score lists")
    mean_a, mean_b = float(a.mean()), float(b.mean())
    var_a = float(a.var(ddof=1)) if a.size > 1 else 0.0
    var_b = float(b.var(ddof=1)) if b.size > 1 else 0.0
    se = math.sqrt(var_a / a.size + var_b / b.size)
    if se == 0.0:
        z = 0.0 if mean_a == mean_b else math.copysign(math.inf, mean_a - mean_b)
    else:
        z = (mean_a - mean_b) / se
    return ZTestResult(
        z=z,
        reject=abs(z) > Z_CRITICAL,
        threshold=Z_CRITICAL,
        mean_a=mean_a,
        mean_b=mean_b,
        n_a=int(a.size),
        n_b=int(b.size),
    )
