"""Column schema and binary protection tables.

A protection table is the tabular view of which coverages and endorsements a
set of contracts includes: one row per contract, one 0/1 cell per column.
Columns follow a fixed naming convention:

* ``SectionA`` — the mandatory civil liability coverage (always first).
* ``SectionB1`` .. ``SectionB4`` — the four property damage coverages.
* ``QEF_<id>`` — one column per endorsement, e.g. ``QEF_20a``.

The on-disk format is a plain UTF-8 CSV: a header line of column names, then
comma-separated 0/1 cells, LF line endings, no quoting.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from riscgen.errors import EmptyTable, NonBinaryCell, SchemaError

LIABILITY_COLUMN = "SectionA"
PROPERTY_COLUMNS = ("SectionB1", "SectionB2", "SectionB3", "SectionB4")

# Default endorsement identifiers. The five-rule engine only needs 41 and 43;
# the rest are a configurable stand-in list, not an authoritative catalogue.
DEFAULT_ENDORSEMENT_IDS = (
    "2", "3", "5a", "8", "13c", "16", "19", "20a", "21b", "23a",
    "25", "27", "28", "31", "33", "34", "37", "38", "40", "41",
    "43", "44", "45", "47", "48", "48a",
)

_ENDORSEMENT_ID_RE = re.compile(r"^(\d+)([a-z]*)$")


def endorsement_sort_key(endorsement_id: str) -> tuple[int, str]:
    """Ascending order: numeric part first, then letter suffix (20a < 27)."""
    m = _ENDORSEMENT_ID_RE.match(endorsement_id)
    if m is None:
        raise SchemaError(f"malformed endorsement id {endorsement_id!r}")
    return int(m.group(1)), m.group(2)


def _role_of(name: str) -> str:
    if name == LIABILITY_COLUMN:
        return "liability"
    if name in PROPERTY_COLUMNS:
        return "property"
    if name.startswith("QEF_") and len(name) > 4:
        endorsement_sort_key(name[4:])
        return "endorsement"
    raise SchemaError(f"unrecognized column name {name!r}")


@dataclass(frozen=True)
class ColumnSchema:
    """Ordered column names plus the role each column plays.

    Order is significant and must be identical across fitting, sampling and
    evaluation. Model fitting and the fidelity metrics accept any column
    subset; operations that need a full contract shape (rules, rendering,
    generation) additionally call ``require_contract_schema``.
    """

    names: tuple[str, ...]
    roles: tuple[str, ...] = field(init=False)

    def __post_init__(self):
        if not self.names:
            raise SchemaError("schema needs at least one column")
        if len(set(self.names)) != len(self.names):
            raise SchemaError("duplicate column names")
        object.__setattr__(self, "roles", tuple(_role_of(n) for n in self.names))

    def __len__(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        return self.names.index(name)

    @property
    def endorsement_columns(self) -> tuple[str, ...]:
        return tuple(n for n, r in zip(self.names, self.roles) if r == "endorsement")

    @property
    def endorsement_ids(self) -> tuple[str, ...]:
        return tuple(n[4:] for n in self.endorsement_columns)

    def sorted_endorsement_ids(self) -> tuple[str, ...]:
        return tuple(sorted(self.endorsement_ids, key=endorsement_sort_key))


def require_contract_schema(schema: "ColumnSchema") -> None:
    """Enforce the full contract shape: one SectionA and all four SectionB columns."""
    if schema.roles.count("liability") != 1:
        raise SchemaError("contract schema must contain exactly one SectionA column")
    if schema.roles.count("property") != 4:
        raise SchemaError("contract schema must contain exactly four SectionB columns")


def default_schema(endorsement_ids: tuple[str, ...] = DEFAULT_ENDORSEMENT_IDS) -> ColumnSchema:
    names = (LIABILITY_COLUMN, *PROPERTY_COLUMNS) + tuple(f"QEF_{e}" for e in endorsement_ids)
    return ColumnSchema(names)


@dataclass(frozen=True)
class ProtectionSet:
    """One contract's coverage: a 0/1 cell per schema column."""

    schema: ColumnSchema
    bits: tuple[int, ...]

    def __post_init__(self):
        if len(self.bits) != len(self.schema):
            raise SchemaError(
                f"protection set has {len(self.bits)} cells for {len(self.schema)} columns"
            )
        for i, b in enumerate(self.bits):
            if b not in (0, 1):
                raise NonBinaryCell(0, self.schema.names[i], b)

    def __getitem__(self, column: str) -> int:
        return self.bits[self.schema.index(column)]

    def included_columns(self) -> tuple[str, ...]:
        return tuple(n for n, b in zip(self.schema.names, self.bits) if b == 1)

    def included_endorsement_ids(self) -> tuple[str, ...]:
        ids = [
            n[4:]
            for n, r, b in zip(self.schema.names, self.schema.roles, self.bits)
            if r == "endorsement" and b == 1
        ]
        return tuple(sorted(ids, key=endorsement_sort_key))


class ProtectionTable:
    """A schema plus an immutable (rows, columns) 0/1 matrix."""

    def __init__(self, schema: ColumnSchema, rows: np.ndarray):
        rows = np.asarray(rows, dtype=np.uint8)
        if rows.ndim != 2 or rows.shape[1] != len(schema):
            raise SchemaError(
                f"row matrix shape {rows.shape} does not fit {len(schema)} columns"
            )
        rows.flags.writeable = False
        self.schema = schema
        self.rows = rows

    @classmethod
    def from_rows(cls, schema: ColumnSchema, rows) -> "ProtectionTable":
        mat = np.zeros((len(rows), len(schema)), dtype=np.uint8)
        for i, row in enumerate(rows):
            if len(row) != len(schema):
                raise SchemaError(f"row {i} has {len(row)} cells for {len(schema)} columns")
            for j, cell in enumerate(row):
                if cell not in (0, 1):
                    raise NonBinaryCell(i, schema.names[j], cell)
                mat[i, j] = cell
        return cls(schema, mat)

    def __len__(self) -> int:
        return self.rows.shape[0]

    def row_set(self, index: int) -> ProtectionSet:
        return ProtectionSet(self.schema, tuple(int(b) for b in self.rows[index]))

    def column_means(self) -> np.ndarray:
        if len(self) == 0:
            raise EmptyTable("table has no rows")
        return self.rows.mean(axis=0, dtype=np.float64)

    def distinct_rows(self) -> set[bytes]:
        return {row.tobytes() for row in self.rows}


def read_csv(path: str | Path) -> ProtectionTable:
    """Load a protection table, validating every cell is exactly 0 or 1."""
    text = Path(path).read_text(encoding="utf-8")
    lines = [ln for ln in text.split("\n") if ln != ""]
    if not lines:
        raise EmptyTable(f"{path}: empty file")
    schema = ColumnSchema(tuple(lines[0].split(",")))
    mat = np.zeros((len(lines) - 1, len(schema)), dtype=np.uint8)
    for i, line in enumerate(lines[1:]):
        cells = line.split(",")
        if len(cells) != len(schema):
            raise SchemaError(f"{path}: row {i} has {len(cells)} cells for {len(schema)} columns")
        for j, cell in enumerate(cells):
            if cell == "0":
                continue
            if cell == "1":
                mat[i, j] = 1
            else:
                raise NonBinaryCell(i, schema.names[j], cell)
    return ProtectionTable(schema, mat)


def write_csv(table: ProtectionTable, path: str | Path) -> None:
    out = [",".join(table.schema.names)]
    out.extend(",".join(str(int(c)) for c in row) for row in table.rows)
    Path(path).write_bytes(("\n".join(out) + "\n").encode("utf-8"))
