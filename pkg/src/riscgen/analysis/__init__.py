from riscgen.analysis.corpus import (
    CorpusAccumulator,
    CorpusReport,
    analyze_corpus,
    lexical_richness,
    page_count,
    report_from_accumulator,
    report_json,
    report_table,
)
from riscgen.analysis.readability import ReadabilityScores, count_syllables, readability
from riscgen.analysis.tokenizer import (
    ABBREVIATIONS,
    EXCLUDED_SPECIALS,
    TokenizationRules,
    lexical_words,
    load_stopwords,
    rules_for,
    split_sentences,
    tokenize,
)

__all__ = [
    "ABBREVIATIONS",
    "CorpusAccumulator",
    "CorpusReport",
    "EXCLUDED_SPECIALS",
    "ReadabilityScores",
    "TokenizationRules",
    "analyze_corpus",
    "count_syllables",
    "lexical_richness",
    "lexical_words",
    "load_stopwords",
    "page_count",
    "readability",
    "report_from_accumulator",
    "report_json",
    "report_table",
    "rules_for",
    "split_sentences",
    "tokenize",
]
