import datetime as dt

import pytest
from hypothesis import HealthCheck, settings

from riscgen.persona.config import DistributionConfig
from riscgen.persona.presets import PresetLibrary
from riscgen.pipeline import bundled_preset_dir
from riscgen.protection.bootstrap import BootstrapSpec, bootstrap_seed_data
from riscgen.protection.model import fit
from riscgen.protection.schema import ColumnSchema, default_schema
from riscgen.rendering.templates import bundled_template_dir, load_template_set

settings.register_profile(
    "riscgen", deadline=None, suppress_health_check=(HealthCheck.too_slow,)
)
settings.load_profile("riscgen")

GENERATION_DATE = dt.date(2023, 6, 1)


@pytest.fixture(scope="session")
def schema() -> ColumnSchema:
    return default_schema()


@pytest.fixture(scope="session")
def small_schema() -> ColumnSchema:
    """A compact schema for tests that enumerate joint distributions."""
    return ColumnSchema(
        (
            "SectionA", "SectionB1", "SectionB2", "SectionB3", "SectionB4",
            "QEF_2", "QEF_3", "QEF_48a",
        )
    )


@pytest.fixture(scope="session")
def bootstrap_table():
    return bootstrap_seed_data(BootstrapSpec(), rows=10_000, seed=7)


@pytest.fixture(scope="session")
def fitted_model(bootstrap_table):
    return fit(bootstrap_table, rng_seed=42)


@pytest.fixture(scope="session")
def presets() -> PresetLibrary:
    return PresetLibrary.load(bundled_preset_dir())


@pytest.fixture(scope="session")
def template_sets():
    root = bundled_template_dir()
    return {lang: load_template_set(root, lang) for lang in ("fr", "en")}


@pytest.fixture(scope="session")
def dist_config() -> DistributionConfig:
    return DistributionConfig()


@pytest.fixture()
def generation_date() -> dt.date:
    return GENERATION_DATE
