"""Corpus-level aggregate statistics.

Per-document measurements merge associatively (counts and sums plus a
vocabulary set union), so any document ordering or parallel partitioning
produces the identical report. Pages are form-feed-delimited segments; a
document without form feeds falls back to ceil(lines / 60). Documents with
no words contribute to the token statistics but are excluded from the
readability averages.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from pathlib import Path

from riscgen.analysis.readability import readability
from riscgen.analysis.tokenizer import (
    TokenizationRules,
    lexical_words,
    split_sentences,
    tokenize,
)
from riscgen.errors import DegenerateText, EmptyCorpus

LINES_PER_PAGE_FALLBACK = 60


def page_count(text: str) -> int:
    if "\f" in text:
        return text.count("\f") + 1
    lines = text.count("\n") + (0 if text.endswith("\n") or not text else 1)
    return max(1, math.ceil(lines / LINES_PER_PAGE_FALLBACK))


@dataclass
class CorpusAccumulator:
    """Associatively mergeable per-document totals."""

    documents: int = 0
    tokens: int = 0
    lw: int = 0
    sentences: int = 0
    pages: int = 0
    vocabulary: set[str] = field(default_factory=set)
    readability_documents: int = 0
    fre_sum: float = 0.0
    fog_sum: float = 0.0
    smog_sum: float = 0.0

    def add_document(self, text: str, rules: TokenizationRules) -> None:
        doc_tokens = tokenize(text, rules)
        self.documents += 1
        self.tokens += len(doc_tokens)
        self.lw += len(lexical_words(doc_tokens, rules))
        self.sentences += len(split_sentences(text, rules.language))
        self.pages += page_count(text)
        self.vocabulary.update(doc_tokens)
        try:
            scores = readability(text, rules.language)
        except DegenerateText:
            return
        self.readability_documents += 1
        self.fre_sum += scores.flesch_reading_ease
        self.fog_sum += scores.gunning_fog
        self.smog_sum += scores.smog

    def merge(self, other: "CorpusAccumulator") -> "CorpusAccumulator":
        return CorpusAccumulator(
            documents=self.documents + other.documents,
            tokens=self.tokens + other.tokens,
            lw=self.lw + other.lw,
            sentences=self.sentences + other.sentences,
            pages=self.pages + other.pages,
            vocabulary=self.vocabulary | other.vocabulary,
            readability_documents=self.readability_documents + other.readability_documents,
            fre_sum=self.fre_sum + other.fre_sum,
            fog_sum=self.fog_sum + other.fog_sum,
            smog_sum=self.smog_sum + other.smog_sum,
        )


@dataclass(frozen=True)
class CorpusReport:
    document_count: int
    vocabulary_size: int
    avg_tokens: float
    avg_lexical_words: float
    avg_sentences: float
    avg_sentence_len_tokens: float
    avg_sentence_len_lw: float
    avg_pages: float
    lexical_richness: float
    avg_flesch_reading_ease: float | None
    avg_gunning_fog: float | None
    avg_smog: float | None

    def as_dict(self) -> dict:
        return {
            "document_count": self.document_count,
            "vocabulary_size": self.vocabulary_size,
            "avg_tokens": self.avg_tokens,
            "avg_lexical_words": self.avg_lexical_words,
            "avg_sentences": self.avg_sentences,
            "avg_sentence_len_tokens": self.avg_sentence_len_tokens,
            "avg_sentence_len_lw": self.avg_sentence_len_lw,
            "avg_pages": self.avg_pages,
            "lexical_richness": self.lexical_richness,
            "avg_flesch_reading_ease": self.avg_flesch_reading_ease,
            "avg_gunning_fog": self.avg_gunning_fog,
            "avg_smog": self.avg_smog,
        }


def lexical_richness(vocabulary_size: int, total_lexical_words: float) -> float:
    """Corpus vocabulary size divided by the total lexical-word count."""
    if total_lexical_words <= 0:
        return 0.0
    return vocabulary_size / total_lexical_words


def report_from_accumulator(acc: CorpusAccumulator) -> CorpusReport:
    n = acc.documents
    if n == 0:
        raise EmptyCorpus("no documents accumulated")
    r = acc.readability_documents
    return CorpusReport(
        document_count=n,
        vocabulary_size=len(acc.vocabulary),
        avg_tokens=acc.tokens / n,
        avg_lexical_words=acc.lw / n,
        avg_sentences=acc.sentences / n,
        avg_sentence_len_tokens=acc.tokens / acc.sentences if acc.sentences else 0.0,
        avg_sentence_len_lw=acc.lw / acc.sentences if acc.sentences else 0.0,
        avg_pages=acc.pages / n,
        lexical_richness=lexical_richness(len(acc.vocabulary), acc.lw),
        avg_flesch_reading_ease=acc.fre_sum / r if r else None,
        avg_gunning_fog=acc.fog_sum / r if r else None,
        avg_smog=acc.smog_sum / r if r else None,
    )


def analyze_corpus(directory: str | Path, rules: TokenizationRules) -> CorpusReport:
    """Analyze every UTF-8 .txt file under the directory (sorted by name)."""
    paths = sorted(Path(directory).glob("*.txt"))
    if not paths:
        raise EmptyCorpus(f"no .txt documents in {directory}")
    acc = CorpusAccumulator()
    for path in paths:
        acc.add_document(path.read_text(encoding="utf-8"), rules)
    return report_from_accumulator(acc)


_TABLE_ROWS = (
    ("Number of documents", "document_count", "{:,}"),
    ("Vocabulary size", "vocabulary_size", "{:,}"),
    ("Avg number of tokens", "avg_tokens", "{:,.2f}"),
    ("Avg number of LW", "avg_lexical_words", "{:,.2f}"),
    ("Avg number of sentences", "avg_sentences", "{:,.2f}"),
    ("Avg sentence length (tokens)", "avg_sentence_len_tokens", "{:,.2f}"),
    ("Avg sentence length (LW)", "avg_sentence_len_lw", "{:,.2f}"),
    ("Avg number of pages", "avg_pages", "{:,.2f}"),
    ("Lexical richness", "lexical_richness", "{:.5f}"),
    ("Avg Flesch reading ease", "avg_flesch_reading_ease", "{:,.2f}"),
    ("Avg Gunning fog score", "avg_gunning_fog", "{:,.2f}"),
    ("Avg SMOG score", "avg_smog", "{:,.2f}"),
)


def report_table(report: CorpusReport) -> str:
    data = report.as_dict()
    width = max(len(label) for label, _, _ in _TABLE_ROWS)
    lines = []
    for label, key, fmt in _TABLE_ROWS:
        value = data[key]
        rendered = "n/a" if value is None else fmt.format(value)
        lines.append(f"{label:<{width}}  {rendered}")
    return "\n".join(lines)


def report_json(report: CorpusReport) -> str:
    return json.dumps(report.as_dict(), indent=2) + "\n"
