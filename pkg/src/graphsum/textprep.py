"""Document ingestion: sentence segmentation, tokenization, corpus statistics.

Everything downstream (similarity graph, keyword biasing, clustering,
metrics) consumes the sentence records and tf/idf statistics produced here.
All functions are pure and deterministic: identical input bytes plus an
identical stopword set yield identical records and statistics.
"""

from __future__ import annotations

import json
import math
import re
from collections import Counter
from dataclasses import dataclass, field
from pathlib import Path

TARGET_CORPUS = "target_corpus"
BIAS_CORPUS = "bias_corpus"

# Sentence terminators: a run of .!? followed by whitespace or end of text.
_BOUNDARY = re.compile(r"[.!?]+(?=\s|$)")

# Trailing word before a candidate boundary, dots allowed inside ("e.g").
_TRAILING_WORD = re.compile(r"[A-Za-z](?:[A-Za-z.]*[A-Za-z])?$")

# Closed abbreviation list; a '.' directly after one of these never splits.
_ABBREVIATIONS = frozenset({"mr", "mrs", "dr", "etc", "vs", "e.g", "i.e"})

# Unicode alphanumeric runs (underscore excluded).
_TOKEN = re.compile(r"[^\W_]+", re.UNICODE)


class DataError(ValueError):
    """Raised for malformed or empty input data (CLI exit code 2)."""


@dataclass(frozen=True)
class Document:
    """One raw input document."""

    id: str
    body: str
    origin: str = TARGET_CORPUS


@dataclass(frozen=True)
class SentenceRecord:
    """A segmented sentence with its normalized token stream.

    sentence_id is a global, stable index assigned in ingestion order;
    position is the 0-based index within the owning document.  term_freqs
    keys are exactly the distinct tokens; a sentence whose token list is
    empty is degenerate and takes similarity 0 to every other sentence.
    """

    sentence_id: int
    doc_id: str
    position: int
    raw: str
    tokens: tuple[str, ...]
    term_freqs: dict[str, int] = field(repr=False)

    @property
    def is_degenerate(self) -> bool:
        return not self.tokens


@dataclass(frozen=True)
class CorpusStats:
    """Sentence-level document frequencies and idf weights.

    idf[t] = ln(n_sentences / doc_freq[t]); zero exactly when the term
    occurs in every sentence.
    """

    n_sentences: int
    doc_freq: dict[str, int]
    idf: dict[str, float]


def split_sentences(body: str) -> list[str]:
    """Split raw text into sentence strings.

    Boundaries are runs of ".", "!", "?" followed by whitespace or end of
    text; a "." directly after a closed-list abbreviation (mr, mrs, dr,
    etc, vs, e.g, i.e) does not split.  Text with no terminator is one
    sentence.  Returned strings are whitespace-stripped and non-empty.
    """
    cuts = []
    for match in _BOUNDARY.finditer(body):
        if match.group().startswith("."):
            word = _TRAILING_WORD.search(body, 0, match.start())
            if word and word.group().lower() in _ABBREVIATIONS:
                continue
        cuts.append(match.end())
    pieces = []
    start = 0
    for cut in cuts:
        pieces.append(body[start:cut])
        start = cut
    pieces.append(body[start:])
    return [p for p in (piece.strip() for piece in pieces) if p]


def tokenize(raw: str, stopwords: frozenset[str] | set[str] = frozenset()) -> list[str]:
    """Normalize a sentence to an ordered term list.

    Lowercases, splits on any non-alphanumeric character, drops empty
    fragments, then drops stopwords.  May return an empty list.
    """
    return [t for t in _TOKEN.findall(raw.lower()) if t not in stopwords]


def segment(
    document: Document,
    stopwords: frozenset[str] | set[str] = frozenset(),
    start_id: int = 0,
) -> list[SentenceRecord]:
    """Segment one document into sentence records.

    sentence_ids are assigned consecutively from start_id so that a
    corpus-level caller can keep them globally increasing.
    """
    if not document.body.strip():
        raise DataError(f"document {document.id!r} has empty body")
    records = []
    for position, raw in enumerate(split_sentences(document.body)):
        tokens = tokenize(raw, stopwords)
        records.append(
            SentenceRecord(
                sentence_id=start_id + position,
                doc_id=document.id,
                position=position,
                raw=raw,
                tokens=tuple(tokens),
                term_freqs=dict(Counter(tokens)),
            )
        )
    return records


def ingest(
    documents: list[Document],
    stopwords: frozenset[str] | set[str] = frozenset(),
) -> list[SentenceRecord]:
    """Segment a document list into one sentence pool with global ids."""
    sentences: list[SentenceRecord] = []
    for document in documents:
        sentences.extend(segment(document, stopwords, start_id=len(sentences)))
    return sentences


def build_stats(sentences: list[SentenceRecord]) -> CorpusStats:
    """Compute sentence-level doc_freq and idf over a sentence pool."""
    if not sentences:
        raise DataError("empty corpus")
    n = len(sentences)
    doc_freq: dict[str, int] = {}
    for sentence in sentences:
        for term in sentence.term_freqs:
            doc_freq[term] = doc_freq.get(term, 0) + 1
    idf = {term: math.log(n / df) for term, df in doc_freq.items()}
    return CorpusStats(n_sentences=n, doc_freq=doc_freq, idf=idf)


# ---------------------------------------------------------------------------
# Corpus loading
# ---------------------------------------------------------------------------


def load_directory(path: str | Path, origin: str = TARGET_CORPUS) -> list[Document]:
    """Load a directory of UTF-8 ".txt" files, one document per file.

    Files named "*.gold.txt" are gold standards, not corpus documents,
    and are skipped.  Documents are ordered by filename.
    """
    directory = Path(path)
    if not directory.is_dir():
        raise DataError(f"not a directory: {directory}")
    documents = []
    for file in sorted(directory.glob("*.txt")):
        if file.name.endswith(".gold.txt"):
            continue
        body = file.read_text(encoding="utf-8")
        if body.strip():
            documents.append(Document(id=file.stem, body=body, origin=origin))
    if not documents:
        raise DataError(f"no non-empty .txt documents in {directory}")
    return documents


def load_record_file(
    path: str | Path, origin: str = TARGET_CORPUS
) -> dict[str, list[Document]]:
    """Load a line-delimited record file with fields {id, body, group}.

    Each line is a JSON object; "group" is optional and selects the
    per-set pool (records without it fall into group "").  Returns a
    mapping group -> documents in file order.  Duplicate ids within a
    group are rejected.
    """
    groups: dict[str, list[Document]] = {}
    seen: set[tuple[str, str]] = set()
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            if not line.strip():
                continue
            try:
                record = json.loads(line)
            except json.JSONDecodeError as exc:
                raise DataError(f"{path}:{lineno}: invalid record: {exc}") from None
            if "id" not in record or "body" not in record:
                raise DataError(f"{path}:{lineno}: record needs 'id' and 'body'")
            group = str(record.get("group", ""))
            doc_id = str(record["id"])
            if (group, doc_id) in seen:
                raise DataError(f"{path}:{lineno}: duplicate id {doc_id!r} in group {group!r}")
            seen.add((group, doc_id))
            body = str(record["body"])
            if body.strip():
                groups.setdefault(group, []).append(
                    Document(id=doc_id, body=body, origin=origin)
                )
    if not groups:
        raise DataError(f"no records in {path}")
    return groups
