"""riscgen: seed-deterministic synthetic bilingual automobile insurance contracts.

The package fits a dependency model on a binary protection table, rejection-
samples rule-compliant coverage combinations, samples contract personas from
preset lists and configured distributions, renders fillable bilingual
templates into full contract documents, and profiles the resulting corpora.
"""

from riscgen.pipeline import RunConfig, RunManifest, generate, load_run_config

__version__ = "0.1.0"

__all__ = ["RunConfig", "RunManifest", "generate", "load_run_config", "__version__"]
