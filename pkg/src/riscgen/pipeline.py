"""End-to-end corpus generation.

For each contract index the pipeline draws a driving record, rejection-samples
a rule-compliant protection set, then samples one language-neutral contract
record and renders it once per requested language. All randomness derives
from (master seed, contract index, domain label), so a run is byte-identical
when repeated and contracts are independent of each other.

A run writes ``contract_{i:05d}_{lang}.txt`` files plus a ``manifest.json``
recording the configuration digest, per-contract rejection attempt counts and
the SHA-256 of every emitted file.
"""

from __future__ import annotations

import datetime as dt
import hashlib
import json
from dataclasses import dataclass, field
from pathlib import Path

from riscgen.errors import InvalidConfig, OutputDirNotEmpty
from riscgen.persona.config import DistributionConfig, config_from_mapping
from riscgen.persona.presets import PresetLibrary
from riscgen.persona.sampler import sample_driving_record, sample_record
from riscgen.protection.model import DependencyModel, fit, load_model
from riscgen.protection.rules import DEFAULT_MAX_ATTEMPTS, sample_valid
from riscgen.protection.schema import read_csv, require_contract_schema
from riscgen.rendering.assemble import assemble
from riscgen.rendering.templates import bundled_template_dir, load_template_set
from riscgen.rng import derive_seed

TOOL_VERSION = "0.1.0"


def bundled_preset_dir() -> Path:
    return Path(__file__).resolve().parent / "data" / "presets"


@dataclass(frozen=True)
class RunConfig:
    seed: int = 42
    count: int = 1
    languages: tuple[str, ...] = ("fr", "en")
    template_dir: Path = field(default_factory=bundled_template_dir)
    preset_dir: Path = field(default_factory=bundled_preset_dir)
    output_dir: Path = Path("corpus")
    generation_date: dt.date = field(default_factory=dt.date.today)
    distributions: DistributionConfig = field(default_factory=DistributionConfig)
    qef41_mode: str = "conditional"
    max_attempts: int = DEFAULT_MAX_ATTEMPTS
    model_path: Path | None = None
    seed_table_path: Path | None = None
    force: bool = False

    def __post_init__(self):
        if self.count < 1:
            raise InvalidConfig("count must be >= 1")
        if not self.languages or any(lang not in ("fr", "en") for lang in self.languages):
            raise InvalidConfig("languages must be a non-empty subset of {fr, en}")
        if self.qef41_mode not in ("conditional", "strict"):
            raise InvalidConfig("rules.qef41_mode must be 'conditional' or 'strict'")
        if self.max_attempts < 1:
            raise InvalidConfig("rules.max_attempts must be >= 1")
        if self.model_path is None and self.seed_table_path is None:
            raise InvalidConfig("either model_path or seed_table_path is required")
        for label, path in (("template_dir", self.template_dir), ("preset_dir", self.preset_dir)):
            if not Path(path).is_dir():
                raise InvalidConfig(f"{label} {path} does not exist")

    def digest(self) -> str:
        """Stable digest of everything that determines the run's output."""
        doc = {
            "seed": self.seed,
            "count": self.count,
            "languages": list(self.languages),
            "template_dir": str(self.template_dir),
            "preset_dir": str(self.preset_dir),
            "generation_date": self.generation_date.isoformat(),
            "qef41_mode": self.qef41_mode,
            "max_attempts": self.max_attempts,
            "model_path": str(self.model_path) if self.model_path else None,
            "seed_table_path": str(self.seed_table_path) if self.seed_table_path else None,
            "distributions": repr(self.distributions),
            "tool_version": TOOL_VERSION,
        }
        return hashlib.sha256(json.dumps(doc, sort_keys=True).encode("utf-8")).hexdigest()


def load_run_config(path: str | Path, overrides: dict | None = None) -> RunConfig:
    """Read a JSON run configuration; CLI flag overrides win over file keys."""
    try:
        doc = json.loads(Path(path).read_text(encoding="utf-8"))
    except FileNotFoundError as exc:
        raise InvalidConfig(f"config file {path} not found") from exc
    except json.JSONDecodeError as exc:
        raise InvalidConfig(f"config file {path} is not valid JSON: {exc}") from exc
    doc.update(overrides or {})
    rules = doc.get("rules", {})
    kwargs = {}
    if "seed" in doc:
        kwargs["seed"] = int(doc["seed"])
    if "count" in doc:
        kwargs["count"] = int(doc["count"])
    if "languages" in doc:
        langs = doc["languages"]
        if isinstance(langs, str):
            langs = [v for v in langs.split(",") if v]
        kwargs["languages"] = tuple(langs)
    if doc.get("template_dir"):
        kwargs["template_dir"] = Path(doc["template_dir"])
    if doc.get("preset_dir"):
        kwargs["preset_dir"] = Path(doc["preset_dir"])
    if doc.get("output_dir"):
        kwargs["output_dir"] = Path(doc["output_dir"])
    if doc.get("generation_date"):
        kwargs["generation_date"] = dt.date.fromisoformat(doc["generation_date"])
    if doc.get("distributions"):
        kwargs["distributions"] = config_from_mapping(doc["distributions"])
    if "qef41_mode" in rules:
        kwargs["qef41_mode"] = rules["qef41_mode"]
    if "max_attempts" in rules:
        kwargs["max_attempts"] = int(rules["max_attempts"])
    if doc.get("model_path"):
        kwargs["model_path"] = Path(doc["model_path"])
    if doc.get("seed_table_path"):
        kwargs["seed_table_path"] = Path(doc["seed_table_path"])
    if "force" in doc:
        kwargs["force"] = bool(doc["force"])
    return RunConfig(**kwargs)


@dataclass(frozen=True)
class RunManifest:
    tool_version: str
    master_seed: int
    config_digest: str
    generation_date: str
    languages: tuple[str, ...]
    count: int
    attempts: tuple[int, ...]  # per contract index
    files: tuple[tuple[str, str], ...]  # (name, sha256), sorted by name

    def as_dict(self) -> dict:
        return {
            "tool_version": self.tool_version,
            "master_seed": self.master_seed,
            "config_digest": self.config_digest,
            "generation_date": self.generation_date,
            "languages": list(self.languages),
            "count": self.count,
            "contracts": [
                {"index": i, "attempts": a} for i, a in enumerate(self.attempts)
            ],
            "files": [{"name": n, "sha256": h} for n, h in self.files],
        }

    def check_coverage(self) -> None:
        expected = self.count * len(self.languages)
        if len(self.files) != expected:
            raise InvalidConfig(
                f"manifest lists {len(self.files)} files, expected {expected}"
            )


def resolve_model(config: RunConfig) -> DependencyModel:
    if config.model_path is not None:
        return load_model(config.model_path)
    table = read_csv(config.seed_table_path)
    return fit(table, rng_seed=derive_seed(config.seed, "fit"))


def generate(config: RunConfig) -> RunManifest:
    out_dir = Path(config.output_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    if any(out_dir.iterdir()) and not config.force:
        raise OutputDirNotEmpty(f"{out_dir} is not empty (use --force to overwrite)")

    model = resolve_model(config)
    require_contract_schema(model.schema)
    presets = PresetLibrary.load(config.preset_dir)
    template_sets = {
        lang: load_template_set(config.template_dir, lang) for lang in config.languages
    }

    attempts: list[int] = []
    files: list[tuple[str, str]] = []
    for index in range(config.count):
        driving = sample_driving_record(
            config.distributions, derive_seed(config.seed, "contract", index, "driving")
        )
        draw = sample_valid(
            model,
            driving,
            derive_seed(config.seed, "contract", index, "protections"),
            config.max_attempts,
            qef41_mode=config.qef41_mode,
        )
        attempts.append(draw.attempts)
        record = sample_record(
            config.distributions,
            presets,
            draw.protections,
            config.generation_date,
            derive_seed(config.seed, "contract", index, "record"),
            driving=driving,
        )
        for lang in config.languages:
            document = assemble(record, template_sets[lang])
            name = f"contract_{index:05d}_{lang}.txt"
            payload = document.encode("utf-8")
            (out_dir / name).write_bytes(payload)
            files.append((name, hashlib.sha256(payload).hexdigest()))

    manifest = RunManifest(
        tool_version=TOOL_VERSION,
        master_seed=config.seed,
        config_digest=config.digest(),
        generation_date=config.generation_date.isoformat(),
        languages=tuple(config.languages),
        count=config.count,
        attempts=tuple(attempts),
        files=tuple(sorted(files)),
    )
    manifest.check_coverage()
    (out_dir / "manifest.json").write_bytes(
        (json.dumps(manifest.as_dict(), indent=2) + "\n").encode("utf-8")
    )
    return manifest
