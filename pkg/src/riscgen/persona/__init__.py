from riscgen.persona.config import (
    DistributionConfig,
    categorical,
    config_from_mapping,
)
from riscgen.persona.presets import LANGUAGES, LocalizedText, PresetLibrary
from riscgen.persona.records import (
    ContractRecord,
    ContractTerms,
    Financials,
    Insured,
    Vehicle,
    add_one_year,
)
from riscgen.persona.sampler import (
    sample_driving_record,
    sample_financials,
    sample_record,
)

__all__ = [
    "ContractRecord",
    "ContractTerms",
    "DistributionConfig",
    "Financials",
    "Insured",
    "LANGUAGES",
    "LocalizedText",
    "PresetLibrary",
    "Vehicle",
    "add_one_year",
    "categorical",
    "config_from_mapping",
    "sample_driving_record",
    "sample_financials",
    "sample_record",
]
