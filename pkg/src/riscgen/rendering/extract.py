"""Inverting rendered documents back to canonical values.

Because a document is a deterministic concatenation of filled templates, each
template body doubles as an extraction pattern: literal text anchors the
match and placeholder spans become capture groups. This is how the bilingual
parity checks re-read the values embedded in emitted files without any
sidecar metadata.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from riscgen.errors import DataError
from riscgen.persona.presets import PresetLibrary
from riscgen.rendering import locale
from riscgen.rendering.assemble import PAGE_BREAK
from riscgen.rendering.templates import PLACEHOLDER_RE, Template, TemplateSet
from riscgen.protection.schema import endorsement_sort_key

_ADDRESS_RE = re.compile(r"^(\d+) (.+), (.+) \(Québec\) ([A-Z]\d[A-Z] \d[A-Z]\d)$")

_TABLE_LINE_RES = {
    "en": (
        re.compile(r"^Section A \([^)]*\): limit (.+), premium (.+)$"),
        re.compile(r"^Section (B[1-4]) \([^)]*\): deductible (.+), premium (.+)$"),
        re.compile(r"^QEF ([0-9a-z]+) \([^)]*\): premium (.+)$"),
    ),
    "fr": (
        re.compile(r"^Chapitre A \([^)]*\) : montant (.+), prime (.+)$"),
        re.compile(r"^Chapitre (B[1-4]) \([^)]*\) : franchise (.+), prime (.+)$"),
        re.compile(r"^FAQ ([0-9a-z]+) \([^)]*\) : prime (.+)$"),
    ),
}


def template_pattern(template: Template) -> tuple[re.Pattern, list[str]]:
    """Regex matching the filled body, one non-greedy group per placeholder."""
    names: list[str] = []
    chunks: list[str] = []
    pos = 0
    for m in PLACEHOLDER_RE.finditer(template.body):
        literal = template.body[pos : m.start()].replace("\\<", "<")
        chunks.append(re.escape(literal))
        chunks.append("(.+?)")
        names.append(m.group(1))
        pos = m.end()
    chunks.append(re.escape(template.body[pos:].replace("\\<", "<")))
    return re.compile("".join(chunks), re.DOTALL), names


@dataclass(frozen=True)
class ExtractedDocument:
    language: str
    values: dict[str, list[str]]  # placeholder name -> raw strings, in document order
    endorsement_ids: tuple[str, ...]


def extract_strings(document: str, template_set: TemplateSet) -> ExtractedDocument:
    """Re-read every placeholder value from a rendered document."""
    values: dict[str, list[str]] = {}
    pos = 0

    def consume(template: Template) -> bool:
        nonlocal pos
        pattern, names = template_pattern(template)
        m = pattern.match(document, pos)
        if m is None:
            return False
        for name, raw in zip(names, m.groups()):
            values.setdefault(name, []).append(raw)
        pos = m.end()
        return True

    for part in ("introductory", "declaration", "qpf"):
        if part != "introductory":
            if not document.startswith(PAGE_BREAK, pos):
                raise DataError(f"expected a page break before the {part} part")
            pos += 1
        for template in template_set.part(part):
            if not consume(template):
                raise DataError(f"document does not match template {template.id!r}")

    endorsement_ids: list[str] = []
    if pos < len(document):
        if not document.startswith(PAGE_BREAK, pos):
            raise DataError("expected a page break before the endorsement part")
        pos += 1
        ordered = sorted(
            (t for t in template_set.part("endorsement")),
            key=lambda t: endorsement_sort_key(t.endorsement_id),
        )
        for template in ordered:
            if consume(template):
                endorsement_ids.append(template.endorsement_id)
        if pos != len(document):
            raise DataError("unmatched trailing content in the endorsement part")
        if not endorsement_ids:
            raise DataError("endorsement part present but no endorsement template matched")

    return ExtractedDocument(
        language=template_set.language,
        values=values,
        endorsement_ids=tuple(endorsement_ids),
    )


def _parse_table(raw: str, language: str) -> tuple:
    line_a, line_b, line_q = _TABLE_LINE_RES[language]
    rows = []
    for line in raw.split("\n"):
        if m := line_a.match(line):
            rows.append(
                ("SectionA", locale.parse_money(m.group(1), language),
                 locale.parse_money(m.group(2), language))
            )
        elif m := line_b.match(line):
            rows.append(
                (f"Section{m.group(1)}", locale.parse_money(m.group(2), language),
                 locale.parse_money(m.group(3), language))
            )
        elif m := line_q.match(line):
            rows.append((f"QEF_{m.group(1)}", locale.parse_money(m.group(2), language)))
        else:
            raise DataError(f"unparseable coverage line {line!r}")
    return tuple(rows)


def canonicalize(
    extracted: ExtractedDocument, presets: PresetLibrary
) -> dict[str, object]:
    """Reduce extracted strings to language-independent canonical values.

    Preset-backed text fields canonicalize to their index in that language's
    preset list, so the French and English documents of one contract must
    agree index-by-index. Every repeated occurrence of a placeholder must
    canonicalize identically.
    """
    lang = extracted.language

    def canon(name: str, raw: str) -> object:
        if name in ("Insured Date Of Birth", "Contract Start Date", "Contract End Date"):
            return locale.parse_date(raw, lang).isoformat()
        if name in ("Liability Limit", "Total Premium"):
            return locale.parse_money(raw, lang)
        if name in ("Driver Claims Count", "Driver Suspensions Count", "Vehicle Year"):
            return int(raw)
        if name == "Insured Sex":
            return locale.invert_label(locale.SEX_LABELS, lang, raw)
        if name == "Vehicle Motor Type":
            return locale.invert_label(locale.MOTOR_LABELS, lang, raw)
        if name == "Vehicle Purchase Condition":
            return locale.invert_label(locale.CONDITION_LABELS, lang, raw)
        if name == "Association Rebate":
            return locale.parse_rebate(raw, lang)
        if name == "Insured Civic Address":
            m = _ADDRESS_RE.match(raw)
            if m is None:
                raise DataError(f"unparseable address {raw!r}")
            return (
                int(m.group(1)),
                presets.index_of("street_names", lang, m.group(2)),
                presets.index_of("municipalities", lang, m.group(3)),
                m.group(4),
            )
        if name == "Vehicle Financing Institution":
            if raw == locale.NONE_LABELS[lang]:
                return None
            return presets.index_of("financing_institutions", lang, raw)
        if name == "Coverage Summary Table":
            return _parse_table(raw, lang)
        return raw  # names, ids, maker/model are language-neutral strings

    out: dict[str, object] = {}
    for name, raws in extracted.values.items():
        canons = [canon(name, raw) for raw in raws]
        if any(c != canons[0] for c in canons[1:]):
            raise DataError(f"inconsistent occurrences of placeholder {name!r}: {canons}")
        out[name] = canons[0]
    out["Included Endorsements"] = extracted.endorsement_ids
    return out
