"""Locale-specific formatting and parsing of contract values.

Standard Canadian conventions: English dates "June 1, 2023" and currency
"$1,234.56"; French dates "1 juin 2023" and currency "1 234,56 $". Whole
currency amounts drop the decimal part ("$1,000,000", "1 000 000 $"). Every
formatter has a matching parser so rendered documents can be inverted back to
canonical values.
"""

from __future__ import annotations

import datetime as dt
import re

MONTHS_EN = (
    "January", "February", "March", "April", "May", "June",
    "July", "August", "September", "October", "November", "December",
)
MONTHS_FR = (
    "janvier", "février", "mars", "avril", "mai", "juin",
    "juillet", "août", "septembre", "octobre", "novembre", "décembre",
)

SEX_LABELS = {
    "en": {"female": "Female", "male": "Male"},
    "fr": {"female": "Féminin", "male": "Masculin"},
}
MOTOR_LABELS = {
    "en": {"gasoline": "Gasoline", "diesel": "Diesel", "electric": "Electric", "hybrid": "Hybrid"},
    "fr": {"gasoline": "Essence", "diesel": "Diesel", "electric": "Électrique", "hybrid": "Hybride"},
}
CONDITION_LABELS = {
    "en": {"new": "New", "used": "Used"},
    "fr": {"new": "Neuf", "used": "Usagé"},
}
NONE_LABELS = {"en": "None", "fr": "Aucune"}

_DATE_RE = {
    "en": re.compile(r"^([A-Z][a-zé]+) (\d{1,2}), (\d{4})$"),
    "fr": re.compile(r"^(\d{1,2}) ([a-zûé]+) (\d{4})$"),
}
_MONEY_RE = {
    "en": re.compile(r"^\$([\d,]+)(?:\.(\d{2}))?$"),
    "fr": re.compile(r"^([\d ]+)(?:,(\d{2}))? \$$"),
}


def format_date(day: dt.date, language: str) -> str:
    if language == "en":
        return f"{MONTHS_EN[day.month - 1]} {day.day}, {day.year}"
    if language == "fr":
        return f"{day.day} {MONTHS_FR[day.month - 1]} {day.year}"
    raise ValueError(f"unsupported language {language!r}")


def parse_date(text: str, language: str) -> dt.date:
    m = _DATE_RE[language].match(text.strip())
    if m is None:
        raise ValueError(f"cannot parse {language} date {text!r}")
    if language == "en":
        month_name, day, year = m.groups()
        return dt.date(int(year), MONTHS_EN.index(month_name) + 1, int(day))
    day, month_name, year = m.groups()
    return dt.date(int(year), MONTHS_FR.index(month_name) + 1, int(day))


def format_money(cents: int, language: str) -> str:
    if cents < 0:
        raise ValueError("amounts are non-negative")
    dollars, remainder = divmod(cents, 100)
    if language == "en":
        body = f"{dollars:,}"
        return f"${body}.{remainder:02d}" if remainder else f"${body}"
    if language == "fr":
        body = f"{dollars:,}".replace(",", " ")
        return f"{body},{remainder:02d} $" if remainder else f"{body} $"
    raise ValueError(f"unsupported language {language!r}")


def parse_money(text: str, language: str) -> int:
    m = _MONEY_RE[language].match(text.strip())
    if m is None:
        raise ValueError(f"cannot parse {language} amount {text!r}")
    whole, cents = m.groups()
    dollars = int(whole.replace(",", "").replace(" ", ""))
    return dollars * 100 + (int(cents) if cents else 0)


def format_rebate(has_rebate: bool, percent: int | None, language: str) -> str:
    if not has_rebate:
        return "No" if language == "en" else "Non"
    if language == "en":
        return f"Yes ({percent}%)"
    return f"Oui ({percent} %)"


def parse_rebate(text: str, language: str) -> tuple[bool, int | None]:
    text = text.strip()
    if text in ("No", "Non"):
        return False, None
    m = re.match(r"^(?:Yes|Oui) \((\d+)\s?%\)$", text)
    if m is None:
        raise ValueError(f"cannot parse rebate {text!r}")
    return True, int(m.group(1))


def invert_label(table: dict[str, dict[str, str]], language: str, label: str) -> str:
    for canonical, rendered in table[language].items():
        if rendered == label:
            return canonical
    raise ValueError(f"unknown {language} label {label!r}")
