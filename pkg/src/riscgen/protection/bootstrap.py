"""Synthetic seed-table maker.

Real coverage tables are proprietary, so the pipeline can manufacture its own
ground truth: a table where SectionA is always on, every row carries at least
one endorsement, the expected number of included protections per row hits a
configurable target, and chosen column pairs are positively coupled. Column
probabilities are found by bisecting a single scale factor against the
analytic expectation, so the calibration itself is deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from riscgen.errors import InfeasibleSpec
from riscgen.protection.schema import (
    LIABILITY_COLUMN,
    ColumnSchema,
    ProtectionTable,
    default_schema,
    require_contract_schema,
)
from riscgen.rng import substream

DEFAULT_TARGET_MEAN = 7.24

# Relative inclusion weights before calibration. Property sections and a
# handful of popular endorsements dominate; the tail is rare.
_DEFAULT_WEIGHTS = {
    "SectionB1": 0.22,
    "SectionB2": 0.52,
    "SectionB3": 0.38,
    "SectionB4": 0.08,
    "QEF_2": 0.55,
    "QEF_3": 0.45,
    "QEF_5a": 0.12,
    "QEF_8": 0.06,
    "QEF_13c": 0.10,
    "QEF_16": 0.05,
    "QEF_19": 0.08,
    "QEF_20a": 0.42,
    "QEF_21b": 0.05,
    "QEF_23a": 0.14,
    "QEF_25": 0.07,
    "QEF_27": 0.30,
    "QEF_28": 0.05,
    "QEF_31": 0.06,
    "QEF_33": 0.09,
    "QEF_34": 0.50,
    "QEF_37": 0.11,
    "QEF_38": 0.04,
    "QEF_40": 0.07,
    "QEF_41": 0.28,
    "QEF_43": 0.40,
    "QEF_44": 0.12,
    "QEF_45": 0.05,
    "QEF_47": 0.04,
    "QEF_48": 0.10,
    "QEF_48a": 0.35,
}

_DEFAULT_COUPLINGS = (("QEF_20a", "QEF_27", 0.45),)


@dataclass(frozen=True)
class BootstrapSpec:
    """Columns, row-sum target and pairwise coupling strengths."""

    schema: ColumnSchema = field(default_factory=default_schema)
    target_mean_protections: float = DEFAULT_TARGET_MEAN
    column_weights: dict[str, float] = field(default_factory=lambda: dict(_DEFAULT_WEIGHTS))
    couplings: tuple[tuple[str, str, float], ...] = _DEFAULT_COUPLINGS

    def __post_init__(self):
        require_contract_schema(self.schema)
        if not self.schema.endorsement_columns:
            raise InfeasibleSpec("schema needs at least one endorsement column")
        for name in self.schema.names:
            if name != LIABILITY_COLUMN and self.column_weights.get(name, 0.0) <= 0.0:
                raise InfeasibleSpec(f"column {name!r} needs a positive weight")
        for a, b, strength in self.couplings:
            if a not in self.schema.names or b not in self.schema.names:
                raise InfeasibleSpec(f"coupling ({a}, {b}) references unknown columns")
            if not 0.0 <= strength < 1.0:
                raise InfeasibleSpec("coupling strength must lie in [0, 1)")


def _expected_row_sum(spec: BootstrapSpec, probs: dict[str, float]) -> float:
    """Analytic E[row sum] of the draw procedure for given base probabilities."""
    total = 1.0  # SectionA
    total += sum(probs.values())
    for a, b, strength in spec.couplings:
        total += strength * (1.0 - probs[b]) * probs[a]
    p_no_endorsement = 1.0
    for name in spec.schema.endorsement_columns:
        p_no_endorsement *= 1.0 - probs[name]
    total += p_no_endorsement  # the forced endorsement
    return total


def _calibrated_probs(spec: BootstrapSpec) -> dict[str, float]:
    free = [n for n in spec.schema.names if n != LIABILITY_COLUMN]
    target = spec.target_mean_protections

    def probs_at(scale: float) -> dict[str, float]:
        return {n: min(1.0, scale * spec.column_weights[n]) for n in free}

    max_scale = 1.0 / min(spec.column_weights[n] for n in free)
    low_e = _expected_row_sum(spec, probs_at(0.0))
    high_e = _expected_row_sum(spec, probs_at(max_scale))
    if target < low_e - 1e-9 or target > high_e + 1e-9:
        raise InfeasibleSpec(
            f"target mean {target} outside the reachable range [{low_e:.4f}, {high_e:.4f}]"
        )
    lo, hi = 0.0, max_scale
    for _ in range(200):
        mid = (lo + hi) / 2.0
        if _expected_row_sum(spec, probs_at(mid)) < target:
            lo = mid
        else:
            hi = mid
    return probs_at(hi)


def bootstrap_seed_data(spec: BootstrapSpec, rows: int, seed: int) -> ProtectionTable:
    """Generate the calibrated seed table; deterministic given (spec, rows, seed)."""
    if rows < 1:
        raise InfeasibleSpec("rows must be >= 1")
    schema = spec.schema
    probs = _calibrated_probs(spec)
    m = len(schema)
    free_idx = [i for i, n in enumerate(schema.names) if n != LIABILITY_COLUMN]
    p_vec = np.array([probs[schema.names[i]] for i in free_idx])
    endo_idx = [schema.index(n) for n in schema.endorsement_columns]
    endo_weights = np.array([probs[n] for n in schema.endorsement_columns])
    endo_cdf = np.cumsum(endo_weights / endo_weights.sum())
    n_coupling = len(spec.couplings)

    draws_per_row = len(free_idx) + n_coupling + 1
    u = np.empty((rows, draws_per_row))
    for i in range(rows):
        u[i] = substream(seed, "bootstrap-row", i).random(draws_per_row)

    bits = np.zeros((rows, m), dtype=np.uint8)
    bits[:, schema.index(LIABILITY_COLUMN)] = 1
    bits[:, free_idx] = u[:, : len(free_idx)] < p_vec[None, :]

    for k, (a, b, strength) in enumerate(spec.couplings):
        ai, bi = schema.index(a), schema.index(b)
        flip = (bits[:, ai] == 1) & (bits[:, bi] == 0) & (u[:, len(free_idx) + k] < strength)
        bits[flip, bi] = 1

    none = bits[:, endo_idx].sum(axis=1) == 0
    if none.any():
        forced = np.searchsorted(endo_cdf, u[none, -1], side="right")
        forced = np.minimum(forced, len(endo_idx) - 1)
        for row_i, choice in zip(np.nonzero(none)[0], forced):
            bits[row_i, endo_idx[choice]] = 1

    return ProtectionTable(schema, bits)
