"""Readability scores: Flesch reading ease, Gunning fog and SMOG.

Words are whitespace chunks containing at least one letter; syllables come
from a vowel-group heuristic (English drops a silent trailing "e", French
counts accented vowel groups as written; every word has at least one
syllable). Complex or polysyllabic words are those with three syllables or
more.

Formulas:
    reading ease = 206.835 - 1.015 * (words / sentences)
                           - 84.6 * (syllables / words)
    fog          = 0.4 * (words / sentences + 100 * complex / words)
    smog         = 1.0430 * sqrt(polysyllables * 30 / sentences) + 3.1291
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass

from riscgen.analysis.tokenizer import split_sentences
from riscgen.errors import DegenerateText

_VOWELS = {
    "en": "aeiouy",
    "fr": "aeiouyàâäéèêëîïôöùûüÿœæ",
}
_LETTERS_RE = re.compile(r"[^\W\d_]+", re.UNICODE)


def count_syllables(word: str, language: str) -> int:
    """Vowel-group count of the word's letters; minimum one syllable."""
    letters = "".join(_LETTERS_RE.findall(word.lower()))
    if not letters:
        return 0
    vowels = _VOWELS[language]
    groups = 0
    in_group = False
    for ch in letters:
        if ch in vowels:
            if not in_group:
                groups += 1
            in_group = True
        else:
            in_group = False
    if language == "en" and letters.endswith("e"):
        groups -= 1
    return max(groups, 1)


@dataclass(frozen=True)
class ReadabilityScores:
    flesch_reading_ease: float
    gunning_fog: float
    smog: float


def readability(text: str, language: str) -> ReadabilityScores:
    words = [w for w in text.split() if _LETTERS_RE.search(w)]
    sentences = split_sentences(text, language)
    if not words or not sentences:
        raise DegenerateText("readability needs at least one word and one sentence")
    syllables = sum(count_syllables(w, language) for w in words)
    polysyllables = sum(1 for w in words if count_syllables(w, language) >= 3)
    n_words, n_sentences = len(words), len(sentences)
    return ReadabilityScores(
        flesch_reading_ease=206.835
        - 1.015 * (n_words / n_sentences)
        - 84.6 * (syllables / n_words),
        gunning_fog=0.4 * (n_words / n_sentences + 100.0 * polysyllables / n_words),
        smog=1.0430 * math.sqrt(polysyllables * 30.0 / n_sentences) + 3.1291,
    )
