"""Language-neutral contract data.

A ContractRecord holds everything that fills one contract's templates except
the template text itself. Values that come from paired preset lists are
stored as LocalizedText so a single record renders in either language with
the same underlying choice. Money is integer cents.
"""

from __future__ import annotations

import datetime as dt
from dataclasses import dataclass

from riscgen.persona.presets import LocalizedText
from riscgen.protection.rules import DrivingRecord
from riscgen.protection.schema import PROPERTY_COLUMNS, ProtectionSet


def add_one_year(day: dt.date) -> dt.date:
    """Same calendar date next year; Feb 29 maps to Feb 28."""
    try:
        return day.replace(year=day.year + 1)
    except ValueError:
        return dt.date(day.year + 1, 2, 28)


@dataclass(frozen=True)
class Insured:
    first_name: str
    last_name: str
    civic_number: int
    street: LocalizedText
    municipality: LocalizedText
    postal_code: str
    date_of_birth: dt.date
    sex: str
    client_id: str
    association_rebate: bool
    rebate_percent: int | None

    @property
    def full_name(self) -> str:
        return f"{self.first_name} {self.last_name}"


@dataclass(frozen=True)
class Vehicle:
    year: int
    maker: str
    model: str
    motor_type: str
    purchase_condition: str
    financing_institution: LocalizedText | None


@dataclass(frozen=True)
class Financials:
    liability_limit_cents: int
    deductibles_cents: dict[str, int]  # one entry per included Section B
    premiums_cents: dict[str, int]  # one entry per included protection
    total_premium_cents: int


@dataclass(frozen=True)
class ContractTerms:
    start_date: dt.date
    end_date: dt.date


@dataclass(frozen=True)
class ContractRecord:
    insured: Insured
    driving: DrivingRecord
    vehicle: Vehicle
    financials: Financials
    terms: ContractTerms
    protections: ProtectionSet
    generation_date: dt.date

    def check_invariants(self) -> None:
        """Raise AssertionError when any structural invariant is broken."""
        assert self.terms.end_date == add_one_year(self.terms.start_date)
        age_days = (self.generation_date - self.terms.start_date).days
        assert 0 <= age_days <= 365
        included = set(self.protections.included_columns())
        assert set(self.financials.premiums_cents) == included
        included_b = {c for c in included if c in PROPERTY_COLUMNS}
        assert set(self.financials.deductibles_cents) == included_b
        assert self.financials.total_premium_cents == sum(
            self.financials.premiums_cents.values()
        )
        assert len(self.insured.client_id) == 10 and self.insured.client_id.isdigit()
        if self.insured.association_rebate:
            assert self.insured.rebate_percent is not None
        else:
            assert self.insured.rebate_percent is None
