"""Keyword extraction from a bias corpus and harmonic-mean re-scoring.

The bias corpus contributes a keyword table (co-occurrence graph over its
tokens, ranked by the same PageRank used for sentences).  Each target
sentence then gets a keyword score K = occurrences of table terms, and the
final score O combines centrality P and K as n * P * K / (P + K): zero
keyword mass annihilates a sentence no matter how central it is.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from . import simgraph
from .textprep import DataError, Document, SentenceRecord, ingest

DEFAULT_WINDOW = 2


@dataclass(frozen=True)
class KeywordTable:
    """Bias-corpus keywords with positive scores, normalized like tokens."""

    keywords: dict[str, float]
    source: str = ""

    def __contains__(self, term: str) -> bool:
        return term in self.keywords

    def __len__(self) -> int:
        return len(self.keywords)


@dataclass(frozen=True)
class BiasedScores:
    """Centrality P, keyword counts K, and the combined final scores O."""

    centrality: np.ndarray
    keyword_score: np.ndarray
    final: np.ndarray


def default_top_t(n_distinct_terms: int) -> int:
    """Keyword cap used when none is configured: max(10, ceil(terms / 3))."""
    return max(10, math.ceil(n_distinct_terms / 3))


def extract_keywords(
    bias_corpus: list[Document],
    window: int = DEFAULT_WINDOW,
    top_t: int | None = None,
    stopwords: frozenset[str] | set[str] = frozenset(),
    damping: float = simgraph.DEFAULT_DAMPING,
    tol: float = simgraph.DEFAULT_TOL,
    max_iter: int = simgraph.DEFAULT_MAX_ITER,
) -> KeywordTable:
    """Rank bias-corpus terms by PageRank over their co-occurrence graph.

    Two distinct terms are linked when they appear within `window`
    consecutive tokens of one sentence (window=2 links adjacent tokens);
    edges are unweighted and windows never cross sentence boundaries.
    The top_t highest-scoring terms are returned, ties broken
    alphabetically.
    """
    if not bias_corpus:
        raise DataError("empty bias corpus")
    if window < 2:
        raise ValueError(f"window must be >= 2, got {window}")
    sentences = ingest(bias_corpus, stopwords)
    token_streams = [s.tokens for s in sentences if s.tokens]
    vocab = sorted({t for stream in token_streams for t in stream})
    if not vocab:
        raise DataError("empty bias corpus")

    index = {term: i for i, term in enumerate(vocab)}
    adjacency = np.zeros((len(vocab), len(vocab)))
    for stream in token_streams:
        for i, term in enumerate(stream):
            for j in range(i + 1, min(i + window, len(stream))):
                other = stream[j]
                if other != term:
                    adjacency[index[term], index[other]] = 1.0
                    adjacency[index[other], index[term]] = 1.0

    centrality = simgraph.pagerank_matrix(
        adjacency, damping=damping, tol=tol, max_iter=max_iter
    )
    if top_t is None:
        top_t = default_top_t(len(vocab))
    ranked = sorted(zip(vocab, centrality.scores), key=lambda kv: (-kv[1], kv[0]))
    source = ",".join(doc.id for doc in bias_corpus)
    return KeywordTable(
        keywords={term: float(score) for term, score in ranked[:top_t]},
        source=source,
    )


def sim_keyword(x: SentenceRecord, table: KeywordTable) -> float:
    """Total occurrences in x of terms present in the keyword table."""
    return float(sum(tf for term, tf in x.term_freqs.items() if term in table.keywords))


def keyword_vector(sentences: list[SentenceRecord], table: KeywordTable) -> np.ndarray:
    """Per-sentence keyword scores K as a length-n vector."""
    return np.array([sim_keyword(s, table) for s in sentences])


def rescore(
    centrality: simgraph.CentralityVector | np.ndarray,
    keyword_score: np.ndarray,
    n_sentences: int,
    normalize_keywords: bool = False,
) -> BiasedScores:
    """Combine centrality P and keyword score K into final scores O.

    O[u] = n_sentences * P[u] * K[u] / (P[u] + K[u]) when P[u] + K[u] > 0,
    else 0.  With normalize_keywords, K is first rescaled to sum to 1 to
    match P's probability scale (off by default: the raw-count form is the
    printed algorithm).
    """
    p = np.asarray(
        centrality.scores if isinstance(centrality, simgraph.CentralityVector) else centrality,
        dtype=float,
    )
    k = np.asarray(keyword_score, dtype=float)
    if p.shape != (n_sentences,) or k.shape != (n_sentences,):
        raise ValueError(
            f"length mismatch: P has {p.shape}, K has {k.shape}, expected ({n_sentences},)"
        )
    if normalize_keywords and k.sum() > 0.0:
        k = k / k.sum()
    denom = p + k
    with np.errstate(invalid="ignore", divide="ignore"):
        final = np.where(denom > 0.0, n_sentences * p * k / np.where(denom > 0, denom, 1.0), 0.0)
    return BiasedScores(centrality=p, keyword_score=k, final=final)


def write_keyword_table(table: KeywordTable, path: str | Path) -> None:
    """Write a keyword table as two-column "term score" lines."""
    with open(path, "w", encoding="utf-8") as fh:
        for term, score in table.keywords.items():
            fh.write(f"{term} {float(score)!r}\n")


def read_keyword_table(path: str | Path, source: str = "") -> KeywordTable:
    """Read a two-column "term score" keyword table file."""
    keywords: dict[str, float] = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            if not line.strip():
                continue
            parts = line.split()
            if len(parts) != 2:
                raise DataError(f"{path}:{lineno}: expected 'term score'")
            term, score_text = parts
            try:
                score = float(score_text)
            except ValueError:
                raise DataError(f"{path}:{lineno}: bad score {score_text!r}") from None
            if score <= 0.0:
                raise DataError(f"{path}:{lineno}: keyword scores must be positive")
            keywords[term] = score
    if not keywords:
        raise DataError(f"no keywords in {path}")
    return KeywordTable(keywords=keywords, source=source or str(path))
