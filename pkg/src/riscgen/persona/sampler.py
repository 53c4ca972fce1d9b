"""Stochastic samplers for contract personas.

Each field draws from its own named sub-stream of ``rng_seed``, so the draw
for one field never depends on how many values another field consumed:
adding a preset entry or a new sampled field perturbs only its own stream.
"""

from __future__ import annotations

import datetime as dt

from riscgen.errors import EmptyPresets
from riscgen.persona.config import DistributionConfig, categorical
from riscgen.persona.presets import PresetLibrary
from riscgen.persona.records import (
    ContractRecord,
    ContractTerms,
    Financials,
    Insured,
    Vehicle,
    add_one_year,
)
from riscgen.protection.rules import DrivingRecord
from riscgen.protection.schema import PROPERTY_COLUMNS, ProtectionSet
from riscgen.rng import substream

# Letters valid in Canadian postal codes (no D, F, I, O, Q, U).
_POSTAL_LETTERS = "ABCEGHJKLMNPRSTVWXYZ"
_POSTAL_FIRST = "GHJ"  # Quebec codes start with G, H or J


def sample_driving_record(config: DistributionConfig, rng_seed: int) -> DrivingRecord:
    """Categorical draws for claims and suspensions; the top category is open-ended."""
    claims = categorical(substream(rng_seed, "driving.claims"), config.claims_probs)
    suspensions = categorical(
        substream(rng_seed, "driving.suspensions"), config.suspensions_probs
    )
    return DrivingRecord(claims=int(claims), suspensions=int(suspensions))


def sample_financials(
    config: DistributionConfig, protections: ProtectionSet, rng_seed: int
) -> Financials:
    """Liability limit, per-coverage deductibles and per-protection premiums.

    Premiums are drawn uniformly in integer cents over the configured range,
    one independent stream per column, so totals are exact sums.
    """
    liability = categorical(
        substream(rng_seed, "financial.liability"), config.liability_limit_menu
    )
    deductibles: dict[str, int] = {}
    premiums: dict[str, int] = {}
    for column in protections.included_columns():
        lo, hi = config.premium_range_for(column)
        rng = substream(rng_seed, "financial.premium", column)
        premiums[column] = int(rng.integers(lo, hi + 1))
        if column in PROPERTY_COLUMNS:
            d_rng = substream(rng_seed, "financial.deductible", column)
            deductibles[column] = int(categorical(d_rng, config.deductible_menu))
    return Financials(
        liability_limit_cents=int(liability),
        deductibles_cents=deductibles,
        premiums_cents=premiums,
        total_premium_cents=sum(premiums.values()),
    )


def _pick(presets: PresetLibrary, name: str, rng_seed: int, stream: str) -> int:
    size = presets.size(name)
    if size == 0:
        raise EmptyPresets(f"preset list {name!r} is empty")
    return int(substream(rng_seed, stream).integers(0, size))


def sample_record(
    config: DistributionConfig,
    presets: PresetLibrary,
    protections: ProtectionSet,
    generation_date: dt.date,
    rng_seed: int,
    driving: DrivingRecord | None = None,
) -> ContractRecord:
    """Populate a full ContractRecord for an already-chosen protection set.

    The pipeline draws the driving record before the protection set (the
    rules depend on it) and passes it in; standalone callers may leave
    ``driving`` unset to have it drawn from this record's own streams.
    """
    first_i = _pick(presets, "first_names", rng_seed, "insured.first_name")
    last_i = _pick(presets, "last_names", rng_seed, "insured.last_name")
    street_i = _pick(presets, "street_names", rng_seed, "insured.street")
    muni_i = _pick(presets, "municipalities", rng_seed, "insured.municipality")

    civic = int(substream(rng_seed, "insured.civic_number").integers(100, 10_000))
    postal_rng = substream(rng_seed, "insured.postal_code")
    postal = "{}{}{} {}{}{}".format(
        _POSTAL_FIRST[postal_rng.integers(0, len(_POSTAL_FIRST))],
        postal_rng.integers(0, 10),
        _POSTAL_LETTERS[postal_rng.integers(0, len(_POSTAL_LETTERS))],
        postal_rng.integers(0, 10),
        _POSTAL_LETTERS[postal_rng.integers(0, len(_POSTAL_LETTERS))],
        postal_rng.integers(0, 10),
    )

    age_lo, age_hi = config.birth_age_range
    dob_days = int(substream(rng_seed, "insured.birth").integers(age_lo * 365, age_hi * 365))
    sex = str(categorical(substream(rng_seed, "insured.sex"), config.sex_probs))
    client_id = f"{int(substream(rng_seed, 'insured.client_id').integers(0, 10**10)):010d}"

    rebate_rng = substream(rng_seed, "insured.rebate")
    has_rebate = bool(rebate_rng.random() < config.association_rebate_prob)
    rebate_pct = (
        int(categorical(rebate_rng, config.association_rebate_percents)) if has_rebate else None
    )

    insured = Insured(
        first_name=presets.entry("first_names", "fr", first_i),
        last_name=presets.entry("last_names", "fr", last_i),
        civic_number=civic,
        street=presets.localized("street_names", street_i),
        municipality=presets.localized("municipalities", muni_i),
        postal_code=postal,
        date_of_birth=generation_date - dt.timedelta(days=dob_days),
        sex=sex,
        client_id=client_id,
        association_rebate=has_rebate,
        rebate_percent=rebate_pct,
    )

    if driving is None:
        driving = sample_driving_record(config, rng_seed)

    vehicle_i = _pick(presets, "vehicles", rng_seed, "vehicle.choice")
    maker, model, year = presets.vehicle_triple(vehicle_i)
    motor = str(categorical(substream(rng_seed, "vehicle.motor"), config.motor_type_probs))
    condition = str(
        categorical(substream(rng_seed, "vehicle.condition"), config.purchase_condition_probs)
    )
    financed = bool(substream(rng_seed, "vehicle.financed").random() < config.financing_prob)
    financing = None
    if financed:
        fin_i = _pick(presets, "financing_institutions", rng_seed, "vehicle.financing")
        financing = presets.localized("financing_institutions", fin_i)
    vehicle = Vehicle(
        year=year,
        maker=maker,
        model=model,
        motor_type=motor,
        purchase_condition=condition,
        financing_institution=financing,
    )

    offset = int(substream(rng_seed, "contract.start").integers(0, 366))
    start = generation_date - dt.timedelta(days=offset)
    terms = ContractTerms(start_date=start, end_date=add_one_year(start))

    financials = sample_financials(config, protections, rng_seed)

    return ContractRecord(
        insured=insured,
        driving=driving,
        vehicle=vehicle,
        financials=financials,
        terms=terms,
        protections=protections,
        generation_date=generation_date,
    )
