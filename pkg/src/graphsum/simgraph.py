"""Sentence-similarity graph construction, pruning, and PageRank centrality.

The graph holds two views of the same sentence pool: the raw symmetric
weight matrix W of pairwise tf-idf cosine similarities, and the pruned
binary matrix W' that keeps an (unweighted) edge wherever the similarity
reaches the threshold beta.  Centrality is computed on W' by damped
PageRank; the raw W also feeds the weighted-vote baseline and the
clustering distance matrix.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .textprep import CorpusStats, DataError, SentenceRecord

DEFAULT_BETA = 0.1
DEFAULT_DAMPING = 0.85
DEFAULT_TOL = 1e-8
DEFAULT_MAX_ITER = 100

# Dense n x n matrices are the only representation implemented; beyond this
# the memory cost is no longer desk-scale.
MAX_DENSE_SENTENCES = 5000


@dataclass(frozen=True)
class SentenceGraph:
    """Weighted similarity matrix W plus its beta-pruned binary view W'.

    Invariants: W is symmetric with entries in [0, 1] and unit diagonal for
    non-degenerate sentences; W'[u][v] = 1 iff W[u][v] >= beta for u != v,
    with a zero diagonal (no self-votes).
    """

    n: int
    weights: np.ndarray
    pruned: np.ndarray
    beta: float


@dataclass(frozen=True)
class CentralityVector:
    """PageRank scores: non-negative, summing to 1 at every iteration."""

    scores: np.ndarray
    converged: bool
    n_iter: int


def idf_modified_cosine(x: SentenceRecord, y: SentenceRecord, stats: CorpusStats) -> float:
    """Cosine similarity between the tf-idf vectors of two sentences.

    numerator = sum over shared terms of tf_x * tf_y * idf^2, divided by
    the product of the Euclidean norms of the tf*idf vectors.  Returns 0
    when either vector has zero norm (degenerate sentence, or all shared
    mass on idf-0 terms).
    """
    norm_x = _tfidf_norm(x, stats)
    norm_y = _tfidf_norm(y, stats)
    if norm_x == 0.0 or norm_y == 0.0:
        return 0.0
    numerator = 0.0
    for term, tf_x in x.term_freqs.items():
        tf_y = y.term_freqs.get(term)
        if tf_y:
            numerator += tf_x * tf_y * stats.idf[term] ** 2
    return min(1.0, max(0.0, numerator / (norm_x * norm_y)))


def _tfidf_norm(sentence: SentenceRecord, stats: CorpusStats) -> float:
    return math.sqrt(
        sum((tf * stats.idf[term]) ** 2 for term, tf in sentence.term_freqs.items())
    )


def build_graph(
    sentences: list[SentenceRecord],
    stats: CorpusStats,
    beta: float = DEFAULT_BETA,
) -> SentenceGraph:
    """Build W over all sentence pairs and prune it at threshold beta."""
    if not sentences:
        raise DataError("empty corpus")
    if not 0.0 <= beta <= 1.0:
        raise ValueError(f"beta must be in [0, 1], got {beta}")
    n = len(sentences)
    if n > MAX_DENSE_SENTENCES:
        raise DataError(
            f"{n} sentences exceeds the {MAX_DENSE_SENTENCES}-sentence dense cap"
        )

    vocab = sorted({term for s in sentences for term in s.term_freqs})
    index = {term: j for j, term in enumerate(vocab)}
    tfidf = np.zeros((n, len(vocab)))
    for i, sentence in enumerate(sentences):
        for term, tf in sentence.term_freqs.items():
            tfidf[i, index[term]] = tf * stats.idf[term]

    norms = np.sqrt((tfidf**2).sum(axis=1))
    denom = np.outer(norms, norms)
    with np.errstate(invalid="ignore", divide="ignore"):
        weights = np.where(denom > 0.0, tfidf @ tfidf.T / np.where(denom > 0, denom, 1.0), 0.0)
    weights = np.clip((weights + weights.T) / 2.0, 0.0, 1.0)
    np.fill_diagonal(weights, np.where(norms > 0.0, 1.0, 0.0))

    pruned = (weights >= beta).astype(float)
    np.fill_diagonal(pruned, 0.0)
    return SentenceGraph(n=n, weights=weights, pruned=pruned, beta=beta)


def pagerank_matrix(
    adjacency: np.ndarray,
    damping: float = DEFAULT_DAMPING,
    tol: float = DEFAULT_TOL,
    max_iter: int = DEFAULT_MAX_ITER,
) -> CentralityVector:
    """Damped PageRank over a non-negative symmetric adjacency matrix.

    Iterates P(u) = (1-d)/n + d * sum_v A[u,v] * P(v) / strength(v), where
    strength(v) is v's (weighted) degree; a zero-strength node spreads its
    whole mass uniformly over all n nodes, which keeps P a probability
    distribution at every sweep.  A binary adjacency gives the classic
    unweighted vote; a weighted one splits each vote proportionally to
    edge weight.  Stops when the L1 change drops below tol; if max_iter
    sweeps pass first, the last iterate is returned with converged=False.
    """
    if not 0.0 < damping < 1.0:
        raise ValueError(f"damping must be in (0, 1), got {damping}")
    if tol <= 0.0:
        raise ValueError(f"tol must be positive, got {tol}")
    if max_iter < 1:
        raise ValueError(f"max_iter must be >= 1, got {max_iter}")
    adjacency = np.asarray(adjacency, dtype=float)
    if adjacency.ndim != 2 or adjacency.shape[0] != adjacency.shape[1]:
        raise ValueError("adjacency must be a square matrix")
    if adjacency.size and adjacency.min() < 0.0:
        raise ValueError("adjacency must be non-negative")

    n = adjacency.shape[0]
    if n == 0:
        raise DataError("empty graph")
    strength = adjacency.sum(axis=0)
    dangling = strength == 0.0
    safe_strength = np.where(dangling, 1.0, strength)

    scores = np.full(n, 1.0 / n)
    converged = False
    iterations = 0
    for iterations in range(1, max_iter + 1):
        votes = adjacency @ (scores / safe_strength) + scores[dangling].sum() / n
        new_scores = (1.0 - damping) / n + damping * votes
        delta = np.abs(new_scores - scores).sum()
        scores = new_scores
        if delta < tol:
            converged = True
            break
    return CentralityVector(scores=scores, converged=converged, n_iter=iterations)


def pagerank(
    graph: SentenceGraph,
    damping: float = DEFAULT_DAMPING,
    tol: float = DEFAULT_TOL,
    max_iter: int = DEFAULT_MAX_ITER,
) -> CentralityVector:
    """PageRank centrality of the pruned (binary, undirected) graph."""
    return pagerank_matrix(graph.pruned, damping=damping, tol=tol, max_iter=max_iter)


def write_edge_list(graph: SentenceGraph, path: str | Path, pruned: bool = False) -> None:
    """Debug dump: one "u v weight" line per off-diagonal upper-triangle pair."""
    matrix = graph.pruned if pruned else graph.weights
    with open(path, "w", encoding="utf-8") as fh:
        for u in range(graph.n):
            for v in range(u + 1, graph.n):
                fh.write(f"{u} {v} {float(matrix[u, v])!r}\n")


def write_scores(centrality: CentralityVector, path: str | Path) -> None:
    """Debug dump: one "u score" line per node."""
    with open(path, "w", encoding="utf-8") as fh:
        for u, score in enumerate(centrality.scores):
            fh.write(f"{u} {float(score)!r}\n")
