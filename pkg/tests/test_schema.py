import numpy as np
import pytest

from riscgen.errors import EmptyTable, NonBinaryCell, SchemaError
from riscgen.protection.schema import (
    ColumnSchema,
    ProtectionSet,
    ProtectionTable,
    default_schema,
    endorsement_sort_key,
    read_csv,
    require_contract_schema,
    write_csv,
)


def test_default_schema_layout():
    schema = default_schema()
    assert schema.names[0] == "SectionA"
    assert schema.names[1:5] == ("SectionB1", "SectionB2", "SectionB3", "SectionB4")
    assert len(schema.endorsement_columns) == 26
    assert schema.roles.count("liability") == 1
    assert schema.roles.count("property") == 4


def test_named_endorsements_present():
    ids = set(default_schema().endorsement_ids)
    assert {"2", "3", "20a", "27", "41", "43", "48a"} <= ids


def test_schema_rejects_duplicates_and_unknown_names():
    with pytest.raises(SchemaError):
        ColumnSchema(("SectionA", "SectionA", "SectionB1", "SectionB2", "SectionB3", "SectionB4"))
    with pytest.raises(SchemaError):
        ColumnSchema(("SectionA", "SectionB1", "SectionB2", "SectionB3", "SectionB4", "Bogus"))


def test_contract_schema_requires_full_coverage_columns():
    require_contract_schema(default_schema())
    with pytest.raises(SchemaError):
        require_contract_schema(ColumnSchema(("SectionB1", "SectionB2", "SectionB3", "SectionB4", "QEF_2")))
    with pytest.raises(SchemaError):
        require_contract_schema(ColumnSchema(("SectionA", "SectionB1", "QEF_2")))


def test_endorsement_ordering():
    ids = ["48a", "2", "27", "20a", "13c", "3", "48"]
    assert sorted(ids, key=endorsement_sort_key) == ["2", "3", "13c", "20a", "27", "48", "48a"]


def test_protection_set_validation(small_schema):
    bits = (1, 0, 1, 1, 0, 0, 1, 0)
    pset = ProtectionSet(small_schema, bits)
    assert pset["SectionA"] == 1
    assert pset.included_endorsement_ids() == ("3",)
    with pytest.raises(NonBinaryCell):
        ProtectionSet(small_schema, (1, 0, 2, 0, 0, 0, 0, 0))
    with pytest.raises(SchemaError):
        ProtectionSet(small_schema, (1, 0))


def test_from_rows_reports_cell_location(small_schema):
    with pytest.raises(NonBinaryCell) as err:
        ProtectionTable.from_rows(small_schema, [[1, 0, 0, 0, 0, 0, 0, 0],
                                                 [1, 0, 3, 0, 0, 0, 0, 0]])
    assert err.value.row == 1
    assert err.value.column == "SectionB2"


def test_csv_round_trip(tmp_path, small_schema):
    table = ProtectionTable.from_rows(
        small_schema,
        [[1, 0, 1, 1, 0, 0, 1, 0], [1, 1, 0, 0, 0, 1, 0, 1]],
    )
    path = tmp_path / "table.csv"
    write_csv(table, path)
    raw = path.read_bytes()
    assert b"\r" not in raw  # LF endings, no quoting
    assert raw.decode("utf-8").splitlines()[0] == ",".join(small_schema.names)
    loaded = read_csv(path)
    assert loaded.schema.names == table.schema.names
    assert np.array_equal(loaded.rows, table.rows)


def test_read_csv_rejects_non_binary_cell(tmp_path, small_schema):
    path = tmp_path / "bad.csv"
    header = ",".join(small_schema.names)
    path.write_text(header + "\n1,0,2,0,0,0,0,0\n", encoding="utf-8")
    with pytest.raises(NonBinaryCell) as err:
        read_csv(path)
    assert err.value.row == 0
    assert err.value.column == "SectionB2"
    assert err.value.value == "2"


def test_read_csv_empty_file(tmp_path):
    path = tmp_path / "empty.csv"
    path.write_text("", encoding="utf-8")
    with pytest.raises(EmptyTable):
        read_csv(path)


def test_column_means_requires_rows(small_schema):
    table = ProtectionTable(small_schema, np.zeros((0, 8), dtype=np.uint8))
    with pytest.raises(EmptyTable):
        table.column_means()
