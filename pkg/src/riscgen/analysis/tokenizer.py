"""Tokenization, lexical-word filtering and sentence splitting.

Tokens are lower-cased maximal runs of letters and digits. Everything else is
dropped: newlines, whitespace, punctuation, the special characters < > | $,
and any token made of digits only. Lexical words are tokens that are not
stopwords; the stopword lists are vendored snapshots under data/stopwords.

Sentences split on ., ! and ? with per-language abbreviation exceptions and
a guard for decimal numbers; text without a terminator counts as one
sentence.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from pathlib import Path

EXCLUDED_SPECIALS = frozenset("<>|$")

_TOKEN_RE = re.compile(r"[^\W_]+", re.UNICODE)
_TERMINATOR_RE = re.compile(r"[.!?]+")
_WORD_BEFORE_RE = re.compile(r"([^\W\d_]+)$", re.UNICODE)

ABBREVIATIONS = {
    "en": frozenset({"mr", "mrs", "ms", "dr", "st", "no", "art", "inc", "ltd", "co", "vs", "etc", "p", "pp"}),
    "fr": frozenset({"m", "mm", "mme", "mmes", "mlle", "dr", "me", "st", "ste", "art", "no", "tél", "etc", "p", "pp", "ex"}),
}


def _stopword_path(language: str) -> Path:
    return Path(__file__).resolve().parent.parent / "data" / "stopwords" / f"{language}.txt"


def load_stopwords(language: str) -> frozenset[str]:
    path = _stopword_path(language)
    words = {
        line.strip()
        for line in path.read_text(encoding="utf-8").splitlines()
        if line.strip() and not line.lstrip().startswith("#")
    }
    return frozenset(words)


@dataclass(frozen=True)
class TokenizationRules:
    language: str
    stopwords: frozenset[str]

    def __post_init__(self):
        if not self.stopwords:
            raise ValueError("stopword list must be non-empty")


def rules_for(language: str) -> TokenizationRules:
    if language not in ("fr", "en"):
        raise ValueError(f"unsupported language {language!r}")
    return TokenizationRules(language=language, stopwords=load_stopwords(language))


def tokenize(text: str, rules: TokenizationRules) -> list[str]:
    """Lower-cased word tokens with every excluded class removed."""
    return [t for t in _TOKEN_RE.findall(text.lower()) if not t.isdigit()]


def lexical_words(tokens: list[str], rules: TokenizationRules) -> list[str]:
    return [t for t in tokens if t not in rules.stopwords]


def split_sentences(text: str, language: str) -> list[str]:
    abbreviations = ABBREVIATIONS[language]
    sentences: list[str] = []
    start = 0
    for m in _TERMINATOR_RE.finditer(text):
        end = m.end()
        nxt = text[end : end + 1]
        if nxt and not nxt.isspace():
            continue  # mid-token terminator, e.g. a decimal number or an initialism
        if m.group().startswith("."):
            prev = _WORD_BEFORE_RE.search(text, 0, m.start())
            if prev and prev.group(1).lower() in abbreviations:
                continue
        chunk = text[start:end].strip()
        if chunk:
            sentences.append(chunk)
        start = end
    tail = text[start:].strip()
    if tail:
        sentences.append(tail)
    return sentences
