"""Filling templates and assembling full contract documents.

A document is the concatenation of the filled introductory, declaration and
base-form parts, then the endorsement templates for exactly the endorsements
the record includes, in ascending endorsement order. A form-feed character
separates consecutive parts; template bodies may carry their own internal
form feeds for multi-page content.
"""

from __future__ import annotations

from riscgen.errors import MissingEndorsementTemplate
from riscgen.persona.records import ContractRecord
from riscgen.rendering.placeholders import resolve, sorted_included_endorsements
from riscgen.rendering.templates import PLACEHOLDER_RE, Template, TemplateSet

PAGE_BREAK = "\f"


def fill(template: Template, record: ContractRecord, language: str | None = None) -> str:
    """Replace every placeholder with its locale-formatted value.

    The output is byte-identical to the body outside placeholder spans;
    escaped ``\\<`` becomes a literal ``<``.
    """
    lang = language or template.language
    filled = PLACEHOLDER_RE.sub(lambda m: resolve(record, m.group(1), lang), template.body)
    return filled.replace("\\<", "<")


def assemble(record: ContractRecord, template_set: TemplateSet) -> str:
    """Render the full document for one record in the set's language."""
    parts: list[str] = []
    for part in ("introductory", "declaration", "qpf"):
        parts.append("".join(fill(t, record) for t in template_set.part(part)))

    endorsement_ids = sorted_included_endorsements(record)
    if endorsement_ids:
        chunks = []
        for endorsement_id in endorsement_ids:
            template = template_set.endorsement_template(endorsement_id)
            if template is None:
                raise MissingEndorsementTemplate(
                    f"no {template_set.language} template for endorsement {endorsement_id}"
                )
            chunks.append(fill(template, record))
        parts.append("".join(chunks))

    return PAGE_BREAK.join(parts)
