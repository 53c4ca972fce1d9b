"""Exception hierarchy.

Two broad families map onto CLI exit codes: ``UsageError`` (bad invocation or
configuration, exit 1) and ``DataError`` (malformed or inconsistent input
data, exit 2). ``RejectionBudgetExhausted`` gets its own exit code (3) because
it signals a sampler/rule incompatibility rather than bad input.
"""


class RiscgenError(Exception):
    """Base class for all package errors."""


class UsageError(RiscgenError):
    """Invalid invocation or configuration; CLI exit code 1."""


class DataError(RiscgenError):
    """Malformed or inconsistent data; CLI exit code 2."""


class InvalidConfig(UsageError):
    pass


class EmptyPresets(UsageError):
    pass


class OutputDirNotEmpty(UsageError):
    pass


class InfeasibleSpec(UsageError):
    pass


class EmptyTable(DataError):
    pass


class NonBinaryCell(DataError):
    """A table cell held something other than 0 or 1."""

    def __init__(self, row: int, column: str, value: object):
        self.row = row
        self.column = column
        self.value = value
        super().__init__(f"non-binary cell at row {row}, column {column!r}: {value!r}")


class SchemaError(DataError):
    """A column layout violates the schema conventions."""


class SchemaMismatch(DataError):
    pass


class EmptyScores(DataError):
    pass


class MissingColumn(DataError):
    pass


class RejectionBudgetExhausted(RiscgenError):
    """No rule-compliant draw within the attempt budget; CLI exit code 3."""

    def __init__(self, attempts: int):
        self.attempts = attempts
        super().__init__(f"no rule-compliant protection set after {attempts} attempts")


class MissingManifest(DataError):
    pass


class UnknownPlaceholder(DataError):
    def __init__(self, template_id: str, placeholder: str):
        self.template_id = template_id
        self.placeholder = placeholder
        super().__init__(f"template {template_id!r} uses unknown placeholder <{placeholder}>")


class DuplicateTemplateId(DataError):
    pass


class MissingValue(DataError):
    pass


class MissingEndorsementTemplate(DataError):
    pass


class DegenerateText(DataError):
    pass


class EmptyCorpus(DataError):
    pass
