"""Distribution parameters for the persona samplers.

The numeric defaults below are uncalibrated placeholders: plausible shapes
chosen for testing, not published statistics. Every run should treat them as
a starting point and override whatever matters via the run configuration.
Monetary quantities are integer cents throughout.
"""

from __future__ import annotations

from dataclasses import dataclass, field, fields

import numpy as np

from riscgen.errors import InvalidConfig
from riscgen.protection.schema import PROPERTY_COLUMNS

_PROB_SUM_TOL = 1e-9

SEXES = ("female", "male")
MOTOR_TYPES = ("gasoline", "diesel", "electric", "hybrid")
PURCHASE_CONDITIONS = ("new", "used")


def _default_premium_ranges() -> dict[str, tuple[int, int]]:
    return {
        "SectionA": (250_00, 900_00),
        "SectionB1": (150_00, 450_00),
        "SectionB2": (100_00, 350_00),
        "SectionB3": (80_00, 300_00),
        "SectionB4": (40_00, 150_00),
        "endorsement": (5_00, 120_00),  # fallback for QEF_* columns
    }


@dataclass(frozen=True)
class DistributionConfig:
    sex_probs: dict[str, float] = field(default_factory=lambda: {"female": 0.5, "male": 0.5})
    claims_probs: dict[int, float] = field(
        default_factory=lambda: {0: 0.70, 1: 0.20, 2: 0.08, 3: 0.02}
    )
    suspensions_probs: dict[int, float] = field(
        default_factory=lambda: {0: 0.87, 1: 0.09, 2: 0.03, 3: 0.01}
    )
    purchase_condition_probs: dict[str, float] = field(
        default_factory=lambda: {"new": 0.55, "used": 0.45}
    )
    motor_type_probs: dict[str, float] = field(
        default_factory=lambda: {"gasoline": 0.70, "diesel": 0.05, "electric": 0.12, "hybrid": 0.13}
    )
    liability_limit_menu: tuple[tuple[int, float], ...] = (
        (1_000_000_00, 0.8),
        (2_000_000_00, 0.2),
    )
    deductible_menu: tuple[tuple[int, float], ...] = (
        (250_00, 0.20),
        (500_00, 0.55),
        (1_000_00, 0.25),
    )
    premium_ranges: dict[str, tuple[int, int]] = field(default_factory=_default_premium_ranges)
    financing_prob: float = 0.45
    association_rebate_prob: float = 0.25
    association_rebate_percents: tuple[tuple[int, float], ...] = ((5, 0.7), (10, 0.3))
    birth_age_range: tuple[int, int] = (18, 80)

    def __post_init__(self):
        self.validate()

    def validate(self) -> None:
        def check_probs(name: str, probs: dict) -> None:
            if not probs:
                raise InvalidConfig(f"{name} must be non-empty")
            values = list(probs.values())
            if any(p < 0 for p in values):
                raise InvalidConfig(f"{name} has a negative probability")
            if abs(sum(values) - 1.0) > _PROB_SUM_TOL:
                raise InvalidConfig(f"{name} probabilities must sum to 1")

        check_probs("sex_probs", self.sex_probs)
        if set(self.sex_probs) != set(SEXES):
            raise InvalidConfig(f"sex_probs keys must be {SEXES}")
        check_probs("claims_probs", self.claims_probs)
        check_probs("suspensions_probs", self.suspensions_probs)
        for name, probs in (("claims_probs", self.claims_probs), ("suspensions_probs", self.suspensions_probs)):
            if any(not isinstance(k, int) or k < 0 for k in probs):
                raise InvalidConfig(f"{name} categories must be non-negative integers")
        check_probs("purchase_condition_probs", self.purchase_condition_probs)
        if set(self.purchase_condition_probs) != set(PURCHASE_CONDITIONS):
            raise InvalidConfig(f"purchase_condition_probs keys must be {PURCHASE_CONDITIONS}")
        check_probs("motor_type_probs", self.motor_type_probs)
        if set(self.motor_type_probs) != set(MOTOR_TYPES):
            raise InvalidConfig(f"motor_type_probs keys must be {MOTOR_TYPES}")
        check_probs("liability_limit_menu", dict(self.liability_limit_menu))
        check_probs("deductible_menu", dict(self.deductible_menu))
        check_probs("association_rebate_percents", dict(self.association_rebate_percents))
        if not self.premium_ranges:
            raise InvalidConfig("premium_ranges must be non-empty")
        if "endorsement" not in self.premium_ranges and not all(
            c in self.premium_ranges for c in ("SectionA", *PROPERTY_COLUMNS)
        ):
            raise InvalidConfig("premium_ranges needs base coverages or an 'endorsement' fallback")
        for col, (lo, hi) in self.premium_ranges.items():
            if lo < 0 or hi < lo:
                raise InvalidConfig(f"premium range for {col!r} must satisfy 0 <= min <= max")
        if not 0.0 <= self.financing_prob <= 1.0:
            raise InvalidConfig("financing_prob must lie in [0, 1]")
        if not 0.0 <= self.association_rebate_prob <= 1.0:
            raise InvalidConfig("association_rebate_prob must lie in [0, 1]")
        lo, hi = self.birth_age_range
        if lo < 16 or hi <= lo:
            raise InvalidConfig("birth_age_range must satisfy 16 <= min < max")

    def premium_range_for(self, column: str) -> tuple[int, int]:
        if column in self.premium_ranges:
            return self.premium_ranges[column]
        if column.startswith("QEF_") and "endorsement" in self.premium_ranges:
            return self.premium_ranges["endorsement"]
        raise InvalidConfig(f"no premium range configured for column {column!r}")


def categorical(rng: np.random.Generator, menu) -> object:
    """Draw one value from [(value, prob), ...] using a single uniform."""
    items = list(menu.items()) if isinstance(menu, dict) else list(menu)
    u = rng.random()
    acc = 0.0
    for value, prob in items:
        acc += prob
        if u < acc:
            return value
    return items[-1][0]


def config_from_mapping(overrides: dict) -> DistributionConfig:
    """Build a config from a JSON-style mapping layered over the defaults.

    JSON object keys are strings, so integer-keyed tables (claims,
    suspensions) are converted back; menus arrive as [[value, prob], ...].
    """
    kwargs = {}
    known = {f.name for f in fields(DistributionConfig)}
    for key, value in overrides.items():
        if key not in known:
            raise InvalidConfig(f"unknown distribution key {key!r}")
        if key in ("claims_probs", "suspensions_probs"):
            value = {int(k): float(v) for k, v in value.items()}
        elif key in ("sex_probs", "purchase_condition_probs", "motor_type_probs"):
            value = {str(k): float(v) for k, v in value.items()}
        elif key in ("liability_limit_menu", "deductible_menu"):
            value = tuple((int(v), float(p)) for v, p in value)
        elif key == "association_rebate_percents":
            value = tuple((int(v), float(p)) for v, p in value)
        elif key == "premium_ranges":
            value = {str(k): (int(v[0]), int(v[1])) for k, v in value.items()}
        elif key in ("financing_prob", "association_rebate_prob"):
            value = float(value)
        elif key == "birth_age_range":
            value = (int(value[0]), int(value[1]))
        kwargs[key] = value
    return DistributionConfig(**kwargs)
