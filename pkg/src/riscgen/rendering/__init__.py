from riscgen.rendering.assemble import PAGE_BREAK, assemble, fill
from riscgen.rendering.extract import (
    ExtractedDocument,
    canonicalize,
    extract_strings,
    template_pattern,
)
from riscgen.rendering.placeholders import CATALOGUE, coverage_table, resolve
from riscgen.rendering.templates import (
    PARTS,
    Template,
    TemplateSet,
    bundled_template_dir,
    load_template_set,
    placeholders_in,
)

__all__ = [
    "CATALOGUE",
    "ExtractedDocument",
    "PAGE_BREAK",
    "PARTS",
    "Template",
    "TemplateSet",
    "assemble",
    "bundled_template_dir",
    "canonicalize",
    "coverage_table",
    "extract_strings",
    "fill",
    "load_template_set",
    "placeholders_in",
    "resolve",
    "template_pattern",
]
