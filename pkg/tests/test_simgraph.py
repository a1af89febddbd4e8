"""Similarity graph and PageRank tests.

Two independent oracles live here and are reused by the acceptance suite:
a dict-arithmetic tf-idf cosine (no shared code with the vectorized
implementation) and a dense power-iteration PageRank built directly from
the column-stochastic transition definition.
"""

import math

import numpy as np
import pytest

from graphsum import (
    DataError,
    build_graph,
    build_stats,
    idf_modified_cosine,
    pagerank,
    pagerank_matrix,
)
from graphsum.simgraph import MAX_DENSE_SENTENCES, write_edge_list, write_scores

from helpers import make_records, random_token_lists


def cosine_oracle(x, y, stats):
    """Brute-force tf-idf dot/norm with explicit per-term arithmetic."""
    shared = set(x.term_freqs) & set(y.term_freqs)
    dot = sum(
        x.term_freqs[t] * y.term_freqs[t] * stats.idf[t] * stats.idf[t] for t in shared
    )
    norm_x = math.sqrt(sum((tf * stats.idf[t]) ** 2 for t, tf in x.term_freqs.items()))
    norm_y = math.sqrt(sum((tf * stats.idf[t]) ** 2 for t, tf in y.term_freqs.items()))
    if norm_x == 0.0 or norm_y == 0.0:
        return 0.0
    return dot / (norm_x * norm_y)


def pagerank_oracle(adjacency, damping=0.85, tol=1e-12, max_iter=100000):
    """Dense power iteration on the explicit transition matrix.

    M[u][v] is the probability that v passes its mass to u: edge weight
    over v's total strength, or 1/n uniformly when v has no edges.  The
    fixed point of p = (1-d)/n + d * M p is the reference answer.
    """
    n = len(adjacency)
    transition = [[0.0] * n for _ in range(n)]
    for v in range(n):
        strength = sum(adjacency[u][v] for u in range(n))
        for u in range(n):
            if strength > 0.0:
                transition[u][v] = adjacency[u][v] / strength
            else:
                transition[u][v] = 1.0 / n
    p = [1.0 / n] * n
    for _ in range(max_iter):
        new_p = [
            (1.0 - damping) / n
            + damping * sum(transition[u][v] * p[v] for v in range(n))
            for u in range(n)
        ]
        delta = sum(abs(a - b) for a, b in zip(new_p, p))
        p = new_p
        if delta < tol:
            break
    return p


class TestIdfModifiedCosine:
    def make_fixture(self):
        sentences = make_records(
            [["apple", "banana"], ["apple", "cherry"], ["durian", "fig", "apple"]]
        )
        return sentences, build_stats(sentences)

    def test_identical_sentences_score_one(self):
        sentences, stats = self.make_fixture()
        for s in sentences:
            np.testing.assert_allclose(idf_modified_cosine(s, s, stats), 1.0)

    def test_disjoint_term_sets_score_zero(self):
        sentences = make_records([["left", "side"], ["right", "part"]])
        stats = build_stats(sentences)
        assert idf_modified_cosine(sentences[0], sentences[1], stats) == 0.0

    def test_shared_term_pair_matches_dense_oracle(self):
        """apple/banana vs apple/cherry, by explicit vector arithmetic."""
        sentences, stats = self.make_fixture()
        got = idf_modified_cosine(sentences[0], sentences[1], stats)
        want = cosine_oracle(sentences[0], sentences[1], stats)
        np.testing.assert_allclose(got, want, atol=1e-12)
        # the shared term is "apple" with idf ln(3/3) = 0, so the whole
        # numerator vanishes even though the term sets intersect
        assert got == 0.0

    def test_degenerate_sentence_scores_zero_everywhere(self):
        sentences = make_records([[], ["word", "here"]])
        stats = build_stats(sentences)
        assert idf_modified_cosine(sentences[0], sentences[1], stats) == 0.0
        assert idf_modified_cosine(sentences[0], sentences[0], stats) == 0.0

    def test_random_pairs_match_oracle(self):
        rng = np.random.default_rng(101)
        for _ in range(30):
            sentences = make_records(random_token_lists(rng, 6))
            stats = build_stats(sentences)
            for x in sentences:
                for y in sentences:
                    got = idf_modified_cosine(x, y, stats)
                    np.testing.assert_allclose(
                        got, min(1.0, cosine_oracle(x, y, stats)), atol=1e-9
                    )

    def test_symmetry(self):
        sentences, stats = self.make_fixture()
        for x in sentences:
            for y in sentences:
                assert idf_modified_cosine(x, y, stats) == idf_modified_cosine(
                    y, x, stats
                )


class TestBuildGraph:
    def test_beta_zero_keeps_every_pair(self):
        """At threshold 0 every off-diagonal entry of W' is 1."""
        rng = np.random.default_rng(3)
        sentences = make_records(random_token_lists(rng, 5))
        graph = build_graph(sentences, build_stats(sentences), beta=0.0)
        off_diag = graph.pruned[~np.eye(graph.n, dtype=bool)]
        assert (off_diag == 1.0).all()

    def test_beta_one_keeps_only_exact_duplicates(self):
        sentences = make_records(
            [["twin", "pair"], ["twin", "pair"], ["other", "words"]]
        )
        graph = build_graph(sentences, build_stats(sentences), beta=1.0)
        expect = np.zeros((3, 3))
        expect[0, 1] = expect[1, 0] = 1.0
        np.testing.assert_array_equal(graph.pruned, expect)

    def test_beta_above_one_rejected(self):
        sentences = make_records([["a"], ["b"]])
        stats = build_stats(sentences)
        with pytest.raises(ValueError):
            build_graph(sentences, stats, beta=1.0 + 1e-9)
        with pytest.raises(ValueError):
            build_graph(sentences, stats, beta=-0.1)

    def test_four_sentence_edge_set_matches_pairwise_oracle(self):
        """All 6 pairs recomputed one by one and thresholded at 0.1."""
        sentences = make_records(
            [
                ["game", "night", "fun"],
                ["game", "night", "long"],
                ["quiet", "morning", "walk"],
                ["quiet", "morning", "game"],
            ]
        )
        stats = build_stats(sentences)
        graph = build_graph(sentences, stats, beta=0.1)
        for u in range(4):
            for v in range(4):
                if u == v:
                    continue
                sim = cosine_oracle(sentences[u], sentences[v], stats)
                np.testing.assert_allclose(graph.weights[u, v], sim, atol=1e-12)
                assert graph.pruned[u, v] == (1.0 if sim >= 0.1 else 0.0)

    def test_matrix_invariants(self):
        rng = np.random.default_rng(11)
        for _ in range(10):
            sentences = make_records(random_token_lists(rng, 8))
            graph = build_graph(sentences, build_stats(sentences), beta=0.2)
            W, P = graph.weights, graph.pruned
            np.testing.assert_array_equal(W, W.T)
            assert W.min() >= 0.0 and W.max() <= 1.0
            np.testing.assert_array_equal(np.diag(P), np.zeros(graph.n))
            assert set(np.unique(P)) <= {0.0, 1.0}
            mask = ~np.eye(graph.n, dtype=bool)
            np.testing.assert_array_equal(P[mask], (W[mask] >= 0.2).astype(float))

    def test_non_degenerate_diagonal_is_one(self):
        sentences = make_records([["solo"], [], ["duet", "voice"]])
        graph = build_graph(sentences, build_stats(sentences))
        np.testing.assert_array_equal(np.diag(graph.weights), [1.0, 0.0, 1.0])

    def test_pruning_monotone_in_beta(self):
        """Raising beta never adds an edge."""
        rng = np.random.default_rng(17)
        sentences = make_records(random_token_lists(rng, 10))
        stats = build_stats(sentences)
        lo = build_graph(sentences, stats, beta=0.05).pruned
        hi = build_graph(sentences, stats, beta=0.35).pruned
        assert ((hi == 1.0) <= (lo == 1.0)).all()

    def test_permutation_equivariance(self):
        rng = np.random.default_rng(23)
        lists = random_token_lists(rng, 7)
        order = list(rng.permutation(7))
        a = build_graph(make_records(lists), build_stats(make_records(lists)))
        shuffled = make_records([lists[i] for i in order])
        b = build_graph(shuffled, build_stats(shuffled))
        np.testing.assert_allclose(
            b.weights, a.weights[np.ix_(order, order)], atol=1e-12
        )

    def test_empty_pool_raises(self):
        with pytest.raises(DataError):
            build_graph([], build_stats(make_records([["x"]])))

    def test_dense_cap_enforced(self):
        sentences = make_records([["w"]] * (MAX_DENSE_SENTENCES + 1))
        stats = build_stats(sentences[:1])
        with pytest.raises(DataError):
            build_graph(sentences, stats)


class TestPagerank:
    def test_complete_graph_is_uniform(self):
        adjacency = np.ones((4, 4)) - np.eye(4)
        result = pagerank_matrix(adjacency)
        np.testing.assert_allclose(result.scores, 0.25, atol=1e-9)
        assert result.converged

    def test_single_edge_pair_splits_evenly(self):
        adjacency = np.array([[0.0, 1.0], [1.0, 0.0]])
        result = pagerank_matrix(adjacency)
        np.testing.assert_allclose(result.scores, [0.5, 0.5], atol=1e-9)

    def test_three_node_path_matches_dense_oracle(self):
        """0 - 1 - 2: the middle node collects both neighbours' votes."""
        adjacency = np.array(
            [[0.0, 1.0, 0.0], [1.0, 0.0, 1.0], [0.0, 1.0, 0.0]]
        )
        result = pagerank_matrix(adjacency, damping=0.85, tol=1e-12)
        oracle = pagerank_oracle(adjacency.tolist(), damping=0.85)
        np.testing.assert_allclose(result.scores, oracle, atol=1e-8)
        assert result.scores[1] > result.scores[0]

    def test_sum_is_one_at_every_iteration(self):
        """Truncating at any sweep count still returns a distribution."""
        rng = np.random.default_rng(31)
        adjacency = (rng.random((8, 8)) < 0.3).astype(float)
        adjacency = np.triu(adjacency, 1)
        adjacency = adjacency + adjacency.T
        for max_iter in range(1, 12):
            result = pagerank_matrix(adjacency, max_iter=max_iter, tol=1e-15)
            np.testing.assert_allclose(result.scores.sum(), 1.0, atol=1e-9)
            assert result.scores.min() >= 0.0

    def test_isolated_node_gets_teleport_share(self):
        """A node with no edges keeps a positive score below the others."""
        adjacency = np.zeros((3, 3))
        adjacency[0, 1] = adjacency[1, 0] = 1.0
        result = pagerank_matrix(adjacency, tol=1e-13)
        oracle = pagerank_oracle(adjacency.tolist())
        np.testing.assert_allclose(result.scores, oracle, atol=1e-8)
        assert 0.0 < result.scores[2] < result.scores[0]

    def test_all_isolated_is_uniform(self):
        result = pagerank_matrix(np.zeros((5, 5)))
        np.testing.assert_allclose(result.scores, 0.2, atol=1e-12)

    def test_non_convergence_is_flagged(self):
        adjacency = np.array([[0.0, 1.0, 0.0], [1.0, 0.0, 1.0], [0.0, 1.0, 0.0]])
        result = pagerank_matrix(adjacency, max_iter=1, tol=1e-15)
        assert not result.converged
        assert result.n_iter == 1
        np.testing.assert_allclose(result.scores.sum(), 1.0, atol=1e-9)

    def test_weighted_votes_match_dense_oracle(self):
        """Votes split proportionally to edge weight, not edge count."""
        rng = np.random.default_rng(37)
        for _ in range(10):
            n = int(rng.integers(2, 9))
            raw = rng.random((n, n)) * (rng.random((n, n)) < 0.5)
            adjacency = np.triu(raw, 1)
            adjacency = adjacency + adjacency.T
            result = pagerank_matrix(adjacency, tol=1e-13, max_iter=5000)
            oracle = pagerank_oracle(adjacency.tolist())
            np.testing.assert_allclose(result.scores, oracle, atol=1e-8)

    def test_dominant_weighted_edge_attracts_mass(self):
        adjacency = np.array(
            [[0.0, 10.0, 0.1], [10.0, 0.0, 0.1], [0.1, 0.1, 0.0]]
        )
        result = pagerank_matrix(adjacency, tol=1e-13)
        assert result.scores[2] < result.scores[0]
        np.testing.assert_allclose(result.scores[0], result.scores[1], atol=1e-9)

    def test_parameter_validation(self):
        adjacency = np.zeros((2, 2))
        with pytest.raises(ValueError):
            pagerank_matrix(adjacency, damping=1.0)
        with pytest.raises(ValueError):
            pagerank_matrix(adjacency, damping=0.0)
        with pytest.raises(ValueError):
            pagerank_matrix(adjacency, tol=0.0)
        with pytest.raises(ValueError):
            pagerank_matrix(adjacency, max_iter=0)
        with pytest.raises(ValueError):
            pagerank_matrix(np.zeros((2, 3)))
        with pytest.raises(ValueError):
            pagerank_matrix(np.array([[0.0, -1.0], [-1.0, 0.0]]))

    def test_graph_entry_point_uses_pruned_view(self):
        sentences = make_records(
            [["same", "words"], ["same", "words"], ["unrelated", "thing"]]
        )
        graph = build_graph(sentences, build_stats(sentences), beta=0.5)
        result = pagerank(graph)
        oracle = pagerank_oracle(graph.pruned.tolist())
        np.testing.assert_allclose(result.scores, oracle, atol=1e-8)


class TestDumps:
    def test_edge_list_roundtrip(self, tmp_path):
        sentences = make_records([["a", "b"], ["b", "c"], ["c", "d"]])
        graph = build_graph(sentences, build_stats(sentences))
        path = tmp_path / "edges.txt"
        write_edge_list(graph, path)
        lines = path.read_text(encoding="utf-8").splitlines()
        assert len(lines) == 3
        for line in lines:
            u, v, w = line.split()
            np.testing.assert_allclose(float(w), graph.weights[int(u), int(v)])

    def test_score_dump(self, tmp_path):
        result = pagerank_matrix(np.ones((3, 3)) - np.eye(3))
        path = tmp_path / "scores.txt"
        write_scores(result, path)
        lines = path.read_text(encoding="utf-8").splitlines()
        assert [int(line.split()[0]) for line in lines] == [0, 1, 2]
        total = sum(float(line.split()[1]) for line in lines)
        np.testing.assert_allclose(total, 1.0, atol=1e-9)
