"""Word-frequency statistics over caption corpora.

Counts are per token: a term's relative frequency is its count divided by
the total number of non-punctuation tokens in the corpus. Surface forms are
counted as-is (no stemming), so "has" and "have" stay separate.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .text import tokenize

DEFAULT_INDICATORS = ("with", "has", "have", "on", "in")


@dataclass(frozen=True)
class FrequencyReport:
    corpus_id: str
    total_tokens: int
    term_counts: tuple[tuple[str, int, float], ...]
    indicator_frequencies: dict[str, float] = field(default_factory=dict)


def corpus_tokens(caption: str) -> list[str]:
    """Lowercased tokens with punctuation tokens excluded."""
    return [
        t.lower
        for t in tokenize(caption)
        if any(c.isalnum() for c in t.surface)
    ]


def _count(captions: Iterable[str]) -> tuple[Counter, int]:
    counts: Counter = Counter()
    total = 0
    for caption in captions:
        toks = corpus_tokens(caption)
        counts.update(toks)
        total += len(toks)
    return counts, total


def term_frequencies(
    captions: Sequence[str], top_k: int, corpus_id: str = "corpus"
) -> FrequencyReport:
    """Top ``top_k`` terms by count (ties alphabetical), with relative
    frequencies. An empty corpus yields a zero report."""
    if top_k < 1:
        raise ValueError("top_k must be >= 1")
    counts, total = _count(captions)
    ordered = sorted(counts.items(), key=lambda kv: (-kv[1], kv[0]))[:top_k]
    return FrequencyReport(
        corpus_id=corpus_id,
        total_tokens=total,
        term_counts=tuple((t, c, c / total) for t, c in ordered),
    )


def semantic_indicator_frequencies(
    captions: Sequence[str], indicators: Sequence[str] = DEFAULT_INDICATORS
) -> dict[str, float]:
    """Per-token relative frequency of each indicator word."""
    if not indicators:
        raise ValueError("indicators must be non-empty")
    for w in indicators:
        if w != w.lower():
            raise ValueError(f"indicators must be lowercase: {w!r}")
    counts, total = _count(captions)
    return {w: (counts[w] / total if total else 0.0) for w in indicators}


def build_report(
    captions: Sequence[str],
    top_k: int,
    indicators: Sequence[str] = DEFAULT_INDICATORS,
    corpus_id: str = "corpus",
) -> FrequencyReport:
    """Term and indicator frequencies in one report."""
    report = term_frequencies(captions, top_k, corpus_id)
    return FrequencyReport(
        corpus_id=report.corpus_id,
        total_tokens=report.total_tokens,
        term_counts=report.term_counts,
        indicator_frequencies=semantic_indicator_frequencies(captions, indicators),
    )
