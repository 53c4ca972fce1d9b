"""Realism rules for protection sets and the rejection-sampling wrapper.

Five rules constrain which coverage combinations count as a plausible
contract:

* R1 — the mandatory SectionA liability coverage must be included.
* R2 — SectionB1 covers everything the other B sections do, so it must not
  co-occur with B2, B3 or B4.
* R3 — SectionB3 covers B4's perils, so B3 and B4 must not co-occur.
* R4 — endorsement 41 (deductible removal) is unavailable to drivers with
  claims or licence suspensions; in "strict" mode it is never allowed.
* R5 — endorsement 43 (replacement value) modifies property damage coverage,
  so it requires at least one of B1-B4.

``sample_valid`` draws from a dependency model until a draw passes all rules,
using one derived random stream per attempt so the result is reproducible
regardless of how many attempts earlier seeds consumed.
"""

from __future__ import annotations

from dataclasses import dataclass

from riscgen.errors import MissingColumn, RejectionBudgetExhausted
from riscgen.protection.model import DependencyModel, sample
from riscgen.protection.schema import (
    LIABILITY_COLUMN,
    PROPERTY_COLUMNS,
    ProtectionSet,
)
from riscgen.rng import derive_seed

RULE_IDS = ("R1", "R2", "R3", "R4", "R5")
QEF41_COLUMN = "QEF_41"
QEF43_COLUMN = "QEF_43"

DEFAULT_MAX_ATTEMPTS = 10_000


@dataclass(frozen=True)
class DrivingRecord:
    """Claims over the past five years and licence suspensions."""

    claims: int = 0
    suspensions: int = 0

    def __post_init__(self):
        if self.claims < 0 or self.suspensions < 0:
            raise ValueError("claims and suspensions must be >= 0")


@dataclass(frozen=True)
class RuleViolation:
    rule_id: str
    message: str

    def __post_init__(self):
        if self.rule_id not in RULE_IDS:
            raise ValueError(f"unknown rule id {self.rule_id!r}")


def validate(
    protection_set: ProtectionSet,
    driving_record: DrivingRecord | None = None,
    *,
    qef41_mode: str = "conditional",
    missing_columns: str = "lenient",
) -> list[RuleViolation]:
    """Return every violated rule, in fixed R1..R5 order (empty = valid).

    ``qef41_mode`` selects how R4 reads: "conditional" forbids endorsement 41
    only when the driving record shows claims or suspensions, "strict"
    forbids it always. A rule whose column is absent from the schema is
    skipped under ``missing_columns="lenient"`` and raises MissingColumn
    under "strict".
    """
    if qef41_mode not in ("conditional", "strict"):
        raise ValueError(f"unknown qef41_mode {qef41_mode!r}")
    if missing_columns not in ("lenient", "strict"):
        raise ValueError(f"unknown missing_columns mode {missing_columns!r}")

    names = set(protection_set.schema.names)
    rule_columns = {
        "R1": (LIABILITY_COLUMN,),
        "R2": PROPERTY_COLUMNS,
        "R3": ("SectionB3", "SectionB4"),
        "R4": (QEF41_COLUMN,),
        "R5": (QEF43_COLUMN, *PROPERTY_COLUMNS),
    }

    def applicable(rule_id: str) -> bool:
        missing = [c for c in rule_columns[rule_id] if c not in names]
        if not missing:
            return True
        if missing_columns == "strict":
            raise MissingColumn(f"rule {rule_id} needs absent column(s) {missing}")
        return False

    violations: list[RuleViolation] = []

    if applicable("R1") and protection_set[LIABILITY_COLUMN] != 1:
        violations.append(RuleViolation("R1", "mandatory SectionA coverage is missing"))

    if applicable("R2"):
        b1, b2, b3, b4 = (protection_set[c] for c in PROPERTY_COLUMNS)
        if b1 == 1 and (b2 == 1 or b3 == 1 or b4 == 1):
            violations.append(
                RuleViolation("R2", "SectionB1 must not co-occur with another Section B coverage")
            )

    if applicable("R3"):
        if protection_set["SectionB3"] == 1 and protection_set["SectionB4"] == 1:
            violations.append(RuleViolation("R3", "SectionB3 and SectionB4 must not co-occur"))

    if applicable("R4") and protection_set[QEF41_COLUMN] == 1:
        if qef41_mode == "strict":
            violations.append(RuleViolation("R4", "endorsement 41 not allowed (strict mode)"))
        elif driving_record is not None and (
            driving_record.claims > 0 or driving_record.suspensions > 0
        ):
            violations.append(
                RuleViolation(
                    "R4",
                    "endorsement 41 not allowed with claims or licence suspensions",
                )
            )

    if applicable("R5") and protection_set[QEF43_COLUMN] == 1:
        if all(protection_set[c] == 0 for c in PROPERTY_COLUMNS):
            violations.append(
                RuleViolation("R5", "endorsement 43 requires a Section B coverage")
            )

    return violations


@dataclass(frozen=True)
class ValidDraw:
    """A rule-compliant protection set plus how many attempts it took."""

    protections: ProtectionSet
    attempts: int


def sample_valid(
    model: DependencyModel,
    driving_record: DrivingRecord | None,
    rng_seed: int,
    max_attempts: int = DEFAULT_MAX_ATTEMPTS,
    *,
    qef41_mode: str = "conditional",
) -> ValidDraw:
    """Rejection-sample one protection set that passes every rule.

    Attempt k draws from the stream keyed by (rng_seed, "attempt", k), so a
    given seed always replays the same attempt sequence. Raises
    RejectionBudgetExhausted after max_attempts failed draws.
    """
    if max_attempts < 1:
        raise ValueError("max_attempts must be >= 1")
    for attempt in range(max_attempts):
        drawn = sample(model, 1, derive_seed(rng_seed, "attempt", attempt))
        candidate = drawn.row_set(0)
        if not validate(candidate, driving_record, qef41_mode=qef41_mode):
            return ValidDraw(protections=candidate, attempts=attempt + 1)
    raise RejectionBudgetExhausted(max_attempts)
