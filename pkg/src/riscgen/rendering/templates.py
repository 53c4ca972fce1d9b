"""Template loading and validation.

A template directory holds one subdirectory per language, each with a
``manifest.json`` whose ordered entries list the template files, the contract
part each belongs to, and (for endorsement templates) the endorsement id:

    {"templates": [
        {"id": "intro-cover", "file": "intro_01_cover.txt", "part": "introductory"},
        ...
        {"id": "qef-20a", "file": "qef_20a.txt", "part": "endorsement",
         "endorsement_id": "20a"}
    ]}

Placeholders are ``<Title Case Name>`` tokens; a literal ``<`` is escaped as
``\\<``. Every placeholder must belong to the published catalogue.
"""

from __future__ import annotations

import hashlib
import json
import re
from dataclasses import dataclass
from pathlib import Path

from riscgen.errors import (
    DuplicateTemplateId,
    MissingManifest,
    SchemaError,
    UnknownPlaceholder,
)
from riscgen.rendering.placeholders import CATALOGUE

PARTS = ("introductory", "declaration", "qpf", "endorsement")

PLACEHOLDER_RE = re.compile(r"(?<!\\)<([A-Z][A-Za-z0-9 ]{0,60}?)>")


def placeholders_in(body: str) -> list[str]:
    return PLACEHOLDER_RE.findall(body)


@dataclass(frozen=True)
class Template:
    id: str
    language: str
    part: str
    endorsement_id: str | None
    body: str

    def __post_init__(self):
        if self.part not in PARTS:
            raise SchemaError(f"template {self.id!r} has unknown part {self.part!r}")
        if (self.part == "endorsement") != (self.endorsement_id is not None):
            raise SchemaError(
                f"template {self.id!r}: endorsement_id is required exactly for endorsement parts"
            )
        for name in placeholders_in(self.body):
            if name not in CATALOGUE:
                raise UnknownPlaceholder(self.id, name)


@dataclass(frozen=True)
class TemplateSet:
    language: str
    templates: tuple[Template, ...]  # manifest order
    manifest_sha256: str

    def part(self, part: str) -> tuple[Template, ...]:
        return tuple(t for t in self.templates if t.part == part)

    def endorsement_template(self, endorsement_id: str) -> Template | None:
        for t in self.templates:
            if t.part == "endorsement" and t.endorsement_id == endorsement_id:
                return t
        return None

    def counts(self) -> dict[str, int]:
        return {p: len(self.part(p)) for p in PARTS}


def load_template_set(directory: str | Path, language: str) -> TemplateSet:
    """Load and validate one language's templates in manifest order."""
    lang_dir = Path(directory) / language
    manifest_path = lang_dir / "manifest.json"
    if not manifest_path.is_file():
        raise MissingManifest(f"no manifest.json under {lang_dir}")
    manifest_bytes = manifest_path.read_bytes()
    entries = json.loads(manifest_bytes.decode("utf-8"))["templates"]

    templates: list[Template] = []
    seen_ids: set[str] = set()
    part_rank = -1
    for entry in entries:
        tid = entry["id"]
        if tid in seen_ids:
            raise DuplicateTemplateId(f"template id {tid!r} appears twice in the manifest")
        seen_ids.add(tid)
        part = entry["part"]
        if part not in PARTS:
            raise SchemaError(f"manifest entry {tid!r} has unknown part {part!r}")
        rank = PARTS.index(part)
        if rank < part_rank:
            raise SchemaError(
                f"manifest entry {tid!r}: parts must appear in contract order {PARTS}"
            )
        part_rank = rank
        body = (lang_dir / entry["file"]).read_text(encoding="utf-8")
        templates.append(
            Template(
                id=tid,
                language=language,
                part=part,
                endorsement_id=entry.get("endorsement_id"),
                body=body,
            )
        )
    return TemplateSet(
        language=language,
        templates=tuple(templates),
        manifest_sha256=hashlib.sha256(manifest_bytes).hexdigest(),
    )


def bundled_template_dir() -> Path:
    return Path(__file__).resolve().parent.parent / "data" / "templates"
