"""Placeholder catalogue and value resolution.

Templates mark fillable data as ``<Title Case Name>``. The catalogue below is
the complete set of legal names; loading a template that uses any other name
fails. Values are resolved from a ContractRecord and formatted with the
target language's locale rules.
"""

from __future__ import annotations

from riscgen.errors import MissingValue
from riscgen.persona.records import ContractRecord
from riscgen.protection.schema import PROPERTY_COLUMNS, endorsement_sort_key
from riscgen.rendering import locale

CATALOGUE = (
    "Insured Full Name",
    "Insured Civic Address",
    "Insured Date Of Birth",
    "Insured Sex",
    "Insured Client Id",
    "Association Rebate",
    "Driver Claims Count",
    "Driver Suspensions Count",
    "Vehicle Year",
    "Vehicle Maker",
    "Vehicle Model",
    "Vehicle Motor Type",
    "Vehicle Purchase Condition",
    "Vehicle Financing Institution",
    "Contract Start Date",
    "Contract End Date",
    "Liability Limit",
    "Coverage Summary Table",
    "Total Premium",
)

_B_NAMES = {
    "en": {
        "SectionB1": "all perils",
        "SectionB2": "collision and upset",
        "SectionB3": "all perils other than collision",
        "SectionB4": "specified perils",
    },
    "fr": {
        "SectionB1": "tous risques",
        "SectionB2": "collision et versement",
        "SectionB3": "tous risques sauf collision",
        "SectionB4": "risques spécifiés",
    },
}


def civic_address(record: ContractRecord, language: str) -> str:
    ins = record.insured
    return (
        f"{ins.civic_number} {ins.street.for_lang(language)}, "
        f"{ins.municipality.for_lang(language)} (Québec) {ins.postal_code}"
    )


def coverage_table(record: ContractRecord, language: str) -> str:
    """One line per included protection, in schema order.

    Line shapes (en / fr):
      Section A (civil liability): limit $X, premium $Y
      Chapitre A (responsabilité civile) : montant X $, prime Y $
      Section B2 (collision and upset): deductible $X, premium $Y
      QEF 20a (endorsement): premium $Y
    """
    fin = record.financials
    lines = []
    for column in record.protections.included_columns():
        premium = locale.format_money(fin.premiums_cents[column], language)
        if column == "SectionA":
            limit = locale.format_money(fin.liability_limit_cents, language)
            if language == "en":
                lines.append(f"Section A (civil liability): limit {limit}, premium {premium}")
            else:
                lines.append(
                    f"Chapitre A (responsabilité civile) : montant {limit}, prime {premium}"
                )
        elif column in PROPERTY_COLUMNS:
            deductible = locale.format_money(fin.deductibles_cents[column], language)
            b = column[7:]  # B1..B4
            name = _B_NAMES[language][column]
            if language == "en":
                lines.append(
                    f"Section {b} ({name}): deductible {deductible}, premium {premium}"
                )
            else:
                lines.append(
                    f"Chapitre {b} ({name}) : franchise {deductible}, prime {premium}"
                )
        else:
            endorsement = column[4:]
            if language == "en":
                lines.append(f"QEF {endorsement} (endorsement): premium {premium}")
            else:
                lines.append(f"FAQ {endorsement} (avenant) : prime {premium}")
    return "\n".join(lines)


def resolve(record: ContractRecord, name: str, language: str) -> str:
    """Render one catalogue placeholder for the given language."""
    ins, veh = record.insured, record.vehicle
    if name == "Insured Full Name":
        if not ins.first_name or not ins.last_name:
            raise MissingValue("insured name is not populated")
        return ins.full_name
    if name == "Insured Civic Address":
        return civic_address(record, language)
    if name == "Insured Date Of Birth":
        return locale.format_date(ins.date_of_birth, language)
    if name == "Insured Sex":
        return locale.SEX_LABELS[language][ins.sex]
    if name == "Insured Client Id":
        return ins.client_id
    if name == "Association Rebate":
        return locale.format_rebate(ins.association_rebate, ins.rebate_percent, language)
    if name == "Driver Claims Count":
        return str(record.driving.claims)
    if name == "Driver Suspensions Count":
        return str(record.driving.suspensions)
    if name == "Vehicle Year":
        return str(veh.year)
    if name == "Vehicle Maker":
        return veh.maker
    if name == "Vehicle Model":
        return veh.model
    if name == "Vehicle Motor Type":
        return locale.MOTOR_LABELS[language][veh.motor_type]
    if name == "Vehicle Purchase Condition":
        return locale.CONDITION_LABELS[language][veh.purchase_condition]
    if name == "Vehicle Financing Institution":
        if veh.financing_institution is None:
            return locale.NONE_LABELS[language]
        return veh.financing_institution.for_lang(language)
    if name == "Contract Start Date":
        return locale.format_date(record.terms.start_date, language)
    if name == "Contract End Date":
        return locale.format_date(record.terms.end_date, language)
    if name == "Liability Limit":
        return locale.format_money(record.financials.liability_limit_cents, language)
    if name == "Coverage Summary Table":
        return coverage_table(record, language)
    if name == "Total Premium":
        return locale.format_money(record.financials.total_premium_cents, language)
    raise MissingValue(f"no value mapping for placeholder {name!r}")


def sorted_included_endorsements(record: ContractRecord) -> tuple[str, ...]:
    return tuple(
        sorted(record.protections.included_endorsement_ids(), key=endorsement_sort_key)
    )
