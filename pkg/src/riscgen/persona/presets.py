"""Preset lists backing the persona samplers.

Presets live in editable UTF-8 text files, one entry per line, laid out as
``presets/{fr,en}/<list>.txt``. The two language files of a list must have
the same length: a sampled index selects the paired entries, which is what
guarantees that the French and English renderings of one contract carry the
same underlying values even when spelling differs (e.g. bank names).

Lines starting with ``#`` and blank lines are ignored.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

from riscgen.errors import EmptyPresets

LANGUAGES = ("fr", "en")
PRESET_LISTS = (
    "first_names",
    "last_names",
    "street_names",
    "municipalities",
    "vehicles",
    "financing_institutions",
)


@dataclass(frozen=True)
class LocalizedText:
    """The same underlying value in both contract languages."""

    fr: str
    en: str

    def for_lang(self, language: str) -> str:
        if language == "fr":
            return self.fr
        if language == "en":
            return self.en
        raise ValueError(f"unsupported language {language!r}")


def _read_list(path: Path) -> tuple[str, ...]:
    if not path.is_file():
        raise EmptyPresets(f"missing preset file {path}")
    entries = tuple(
        line.strip()
        for line in path.read_text(encoding="utf-8").splitlines()
        if line.strip() and not line.lstrip().startswith("#")
    )
    if not entries:
        raise EmptyPresets(f"preset file {path} has no entries")
    return entries


@dataclass(frozen=True)
class PresetLibrary:
    lists: dict[str, dict[str, tuple[str, ...]]]

    @classmethod
    def load(cls, directory: str | Path) -> "PresetLibrary":
        directory = Path(directory)
        lists: dict[str, dict[str, tuple[str, ...]]] = {}
        for name in PRESET_LISTS:
            per_lang = {lang: _read_list(directory / lang / f"{name}.txt") for lang in LANGUAGES}
            lengths = {lang: len(v) for lang, v in per_lang.items()}
            if len(set(lengths.values())) != 1:
                raise EmptyPresets(
                    f"preset list {name!r} must have equal length in all languages, got {lengths}"
                )
            lists[name] = per_lang
        return cls(lists=lists)

    def size(self, name: str) -> int:
        return len(self.lists[name]["fr"])

    def localized(self, name: str, index: int) -> LocalizedText:
        return LocalizedText(fr=self.lists[name]["fr"][index], en=self.lists[name]["en"][index])

    def entry(self, name: str, language: str, index: int) -> str:
        return self.lists[name][language][index]

    def index_of(self, name: str, language: str, value: str) -> int:
        return self.lists[name][language].index(value)

    def vehicle_triple(self, index: int) -> tuple[str, str, int]:
        """Vehicle entries are language-neutral 'maker|model|year' triples."""
        raw = self.lists["vehicles"]["fr"][index]
        maker, model, year = raw.split("|")
        return maker, model, int(year)
