"""Summary evaluation: ROUGE-n, redundancy, and coverage.

ROUGE-n uses clipped n-gram counts against a gold token stream and keeps
stopwords (the conventional setting); redundancy and coverage are content
metrics, computed after stopword removal.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Sequence

DEFAULT_WORD_BUDGET = 100


@dataclass(frozen=True)
class NgramProfile:
    """Counts of the order-n grams of one token stream."""

    n: int
    counts: dict[tuple[str, ...], int]
    total: int

    @classmethod
    def from_tokens(cls, tokens: Sequence[str], n: int) -> "NgramProfile":
        if n < 1:
            raise ValueError(f"n must be >= 1, got {n}")
        grams = Counter(
            tuple(tokens[i : i + n]) for i in range(len(tokens) - n + 1)
        )
        return cls(n=n, counts=dict(grams), total=sum(grams.values()))


@dataclass(frozen=True)
class RougeScore:
    precision: float
    recall: float
    f_score: float


def rouge_n(candidate: Sequence[str], reference: Sequence[str], n: int) -> RougeScore:
    """Clipped n-gram overlap: recall over the reference, precision over
    the candidate, F as their harmonic mean (0 when both are 0).  A
    denominator of 0 (stream shorter than n) yields 0 for that side.
    """
    cand = NgramProfile.from_tokens(candidate, n)
    ref = NgramProfile.from_tokens(reference, n)
    overlap = sum(
        min(count, ref.counts[gram])
        for gram, count in cand.counts.items()
        if gram in ref.counts
    )
    precision = overlap / cand.total if cand.total else 0.0
    recall = overlap / ref.total if ref.total else 0.0
    f_score = 2.0 * precision * recall / (precision + recall) if precision + recall else 0.0
    return RougeScore(precision=precision, recall=recall, f_score=f_score)


def truncate(tokens: Sequence[str], budget: int = DEFAULT_WORD_BUDGET) -> list[str]:
    """First `budget` tokens of a stream (the evaluation word budget)."""
    if budget < 0:
        raise ValueError(f"budget must be >= 0, got {budget}")
    return list(tokens[:budget])


def redundancy(tokens: Sequence[str], stopwords: frozenset[str] | set[str] = frozenset()) -> float:
    """Term repetition in a summary: 1 - distinct/total after stopword
    removal.  An empty (or all-stopword) stream scores 0.
    """
    content = [t for t in tokens if t not in stopwords]
    if not content:
        return 0.0
    return 1.0 - len(set(content)) / len(content)


def coverage(
    summary: Sequence[str],
    sources: Iterable[Sequence[str]],
    stopwords: frozenset[str] | set[str] = frozenset(),
) -> float:
    """Fraction of the summary's distinct content terms found in the
    union of the source streams.  An empty summary scores 0.
    """
    terms = {t for t in summary if t not in stopwords}
    if not terms:
        return 0.0
    source_vocab = set()
    for stream in sources:
        source_vocab.update(stream)
    return len(terms & source_vocab) / len(terms)


@dataclass(frozen=True)
class EvalReport:
    """ROUGE-n P/R/F per order, redundancy, coverage, and summary length."""

    rouge: dict[int, RougeScore]
    redundancy: float
    coverage: float
    summary_words: int

    def as_items(self) -> list[tuple[str, float]]:
        """Flatten to ordered (metric, value) pairs for serialization."""
        items: list[tuple[str, float]] = [("summary_words", float(self.summary_words))]
        for n in sorted(self.rouge):
            score = self.rouge[n]
            items.append((f"rouge_{n}_precision", score.precision))
            items.append((f"rouge_{n}_recall", score.recall))
            items.append((f"rouge_{n}_f_score", score.f_score))
        items.append(("redundancy", self.redundancy))
        items.append(("coverage", self.coverage))
        return items


def format_report(report: EvalReport, config: dict[str, object] | None = None) -> str:
    """Key/value text rendering of a report, machine-parseable one per line."""
    lines = []
    if config:
        lines.extend(f"config.{key} {config[key]}" for key in sorted(config))
    lines.extend(f"{key} {value!r}" for key, value in report.as_items())
    return "\n".join(lines) + "\n"


def aggregate_reports(reports: dict[str, EvalReport]) -> list[tuple[str, float]]:
    """Per-metric means across a corpus of per-set reports."""
    if not reports:
        return []
    sums: dict[str, float] = {}
    order: list[str] = []
    for report in reports.values():
        for key, value in report.as_items():
            if key not in sums:
                sums[key] = 0.0
                order.append(key)
            sums[key] += value
    return [(key, sums[key] / len(reports)) for key in order]
