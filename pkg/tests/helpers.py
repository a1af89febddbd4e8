"""Shared fixture builders for the test suite.

Only construction helpers live here; every brute-force oracle is written
inline in the test module that uses it, so each check stays independent
of the code path it verifies.
"""

from collections import Counter

from graphsum import Document, SentenceRecord


def make_records(token_lists):
    """Build sentence records straight from token lists (no segmentation)."""
    records = []
    for i, tokens in enumerate(token_lists):
        records.append(
            SentenceRecord(
                sentence_id=i,
                doc_id="synthetic",
                position=i,
                raw=" ".join(tokens) + ".",
                tokens=tuple(tokens),
                term_freqs=dict(Counter(tokens)),
            )
        )
    return records


def random_token_lists(rng, n_sentences, vocab_size=30, max_len=15, min_len=1):
    """Random sentences over a small vocabulary w0..w{vocab_size-1}."""
    vocab = [f"w{i}" for i in range(vocab_size)]
    lists = []
    for _ in range(n_sentences):
        length = int(rng.integers(min_len, max_len + 1))
        lists.append([vocab[int(j)] for j in rng.integers(0, vocab_size, size=length)])
    return lists


def corpus_from_sentences(raw_sentences, doc_id="doc"):
    """One document whose body is the given sentences joined by spaces."""
    return [Document(id=doc_id, body=" ".join(raw_sentences))]
