from riscgen.protection.bootstrap import BootstrapSpec, bootstrap_seed_data
from riscgen.protection.metrics import (
    UcStats,
    ZTestResult,
    Z_CRITICAL,
    inverted_ks,
    new_uc_count,
    per_column_inverted_ks,
    uc_stats,
    z_test,
)
from riscgen.protection.model import (
    DependencyModel,
    TreeEdge,
    enumerate_joint,
    fit,
    load_model,
    sample,
    save_model,
)
from riscgen.protection.rules import (
    DrivingRecord,
    RuleViolation,
    ValidDraw,
    sample_valid,
    validate,
)
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

__all__ = [
    "BootstrapSpec",
    "ColumnSchema",
    "DependencyModel",
    "DrivingRecord",
    "ProtectionSet",
    "ProtectionTable",
    "RuleViolation",
    "TreeEdge",
    "UcStats",
    "ValidDraw",
    "ZTestResult",
    "Z_CRITICAL",
    "bootstrap_seed_data",
    "default_schema",
    "endorsement_sort_key",
    "enumerate_joint",
    "fit",
    "inverted_ks",
    "load_model",
    "new_uc_count",
    "per_column_inverted_ks",
    "read_csv",
    "require_contract_schema",
    "sample",
    "sample_valid",
    "save_model",
    "uc_stats",
    "validate",
    "write_csv",
    "z_test",
]
