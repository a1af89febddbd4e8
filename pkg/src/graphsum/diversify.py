"""Redundancy post-processing: complete-link clustering + per-cluster picks.

Sentences are agglomerated on the distance matrix 1 - W (raw similarities,
not the pruned view: pruning would destroy the metric information), then
the highest-scoring member of each of the k clusters becomes the summary.
Near-duplicate sentences share a cluster, so at most one of them survives.

All tie-breaking is by smallest sentence id, which makes the whole module
deterministic: equal merge distances pick the pair with the smallest
(min-member of first cluster, min-member of second) and equal scores pick
the earlier sentence.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .simgraph import SentenceGraph

_SYMMETRY_TOL = 1e-12


@dataclass(frozen=True)
class Dendrogram:
    """Full agglomeration history: n - 1 merges with non-decreasing distances.

    Clusters are identified by their smallest member index, so a merge
    (a, b, d) with a < b joins the cluster containing a with the cluster
    containing b at complete-link distance d; the merged cluster keeps key a.
    """

    n: int
    merges: tuple[tuple[int, int, float], ...]

    def cut(self, k: int) -> "ClusterLabels":
        """Labels after stopping the agglomeration at k clusters."""
        if not 1 <= k <= self.n:
            raise ValueError(f"k must be in [1, {self.n}], got {k}")
        component = list(range(self.n))
        for a, b, _ in self.merges[: self.n - k]:
            for i in range(self.n):
                if component[i] == b:
                    component[i] = a
        order = {root: rank for rank, root in enumerate(sorted(set(component)))}
        return ClusterLabels(labels=np.array([order[c] for c in component]), k=k)


@dataclass(frozen=True)
class ClusterLabels:
    """Per-sentence cluster ids in [0, k), ordered by smallest member id."""

    labels: np.ndarray
    k: int


def complete_link(distance: np.ndarray, k: int) -> tuple[ClusterLabels, Dendrogram]:
    """Complete-link agglomerative clustering down to k clusters.

    Starts from singletons and repeatedly merges the pair of clusters with
    the minimum complete-link distance (the maximum pairwise distance over
    their members).  The full dendrogram is built (n - 1 merges) and the
    labels are read off after n - k of them; the prefix of a complete-link
    agglomeration is the same no matter where it stops.
    """
    distance = np.asarray(distance, dtype=float)
    if distance.ndim != 2 or distance.shape[0] != distance.shape[1]:
        raise ValueError("distance must be a square matrix")
    n = distance.shape[0]
    if n == 0:
        raise ValueError("distance matrix is empty")
    if np.abs(distance - distance.T).max(initial=0.0) > _SYMMETRY_TOL:
        raise ValueError("distance matrix must be symmetric")
    if np.abs(np.diagonal(distance)).max(initial=0.0) > _SYMMETRY_TOL:
        raise ValueError("distance matrix must have a zero diagonal")
    if not 1 <= k <= n:
        raise ValueError(f"k must be in [1, {n}], got {k}")

    active = list(range(n))
    cdist = {(a, b): float(distance[a, b]) for a in range(n) for b in range(a + 1, n)}
    merges: list[tuple[int, int, float]] = []
    while len(active) > 1:
        best_a, best_b = min(
            ((a, b) for i, a in enumerate(active) for b in active[i + 1 :]),
            key=lambda pair: (cdist[pair], pair),
        )
        merges.append((best_a, best_b, cdist[(best_a, best_b)]))
        for c in active:
            if c == best_a or c == best_b:
                continue
            key_a = (min(best_a, c), max(best_a, c))
            key_b = (min(best_b, c), max(best_b, c))
            cdist[key_a] = max(cdist[key_a], cdist.pop(key_b))
        del cdist[(best_a, best_b)]
        active.remove(best_b)

    dendrogram = Dendrogram(n=n, merges=tuple(merges))
    return dendrogram.cut(k), dendrogram


def select_representatives(labels: ClusterLabels, scores: np.ndarray) -> list[int]:
    """Pick the highest-scoring member of each cluster, most salient first.

    Within a cluster, score ties go to the smaller sentence id; the k
    selected sentences are then ordered by descending score, again with
    id as the tie-break.
    """
    scores = np.asarray(scores, dtype=float)
    if scores.shape != labels.labels.shape:
        raise ValueError(
            f"scores length {scores.shape} does not match labels {labels.labels.shape}"
        )
    chosen = []
    for cluster in range(labels.k):
        members = np.flatnonzero(labels.labels == cluster)
        best = members[0]
        for member in members[1:]:
            if scores[member] > scores[best]:
                best = member
        chosen.append(int(best))
    chosen.sort(key=lambda i: (-scores[i], i))
    return chosen


@dataclass(frozen=True)
class DiverseSelection:
    """Selected sentence indexes plus the clustering that produced them."""

    selected: list[int]
    labels: ClusterLabels
    dendrogram: Dendrogram


def summarize_diverse(graph: SentenceGraph, scores: np.ndarray, k: int) -> DiverseSelection:
    """Cluster the sentence graph into k groups and keep one sentence each.

    Distances are 1 - W over the raw similarity matrix; degenerate
    sentences sit at distance 1 from everything.
    """
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    distance = 1.0 - graph.weights
    np.fill_diagonal(distance, 0.0)
    labels, dendrogram = complete_link(distance, k)
    selected = select_representatives(labels, scores)
    return DiverseSelection(selected=selected, labels=labels, dendrogram=dendrogram)


def write_dendrogram(dendrogram: Dendrogram, path: str | Path) -> None:
    """Debug dump: one "a b distance" line per merge."""
    with open(path, "w", encoding="utf-8") as fh:
        for a, b, dist in dendrogram.merges:
            fh.write(f"{a} {b} {dist!r}\n")
