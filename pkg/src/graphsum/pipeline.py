"""End-to-end summarization runs, configuration, baselines, and evaluation.

A run wires textprep -> simgraph -> biascore -> diversify over one pool of
sentences (a "document set") and returns a ScoredSummary carrying full
provenance: every selected sentence records its centrality, keyword score,
final score, and cluster, plus the exact configuration used, so any output
can be reproduced byte for byte.

Modes
-----
centrality_only    top-k by PageRank over the pruned graph (LexRank-style)
textrank_baseline  top-k by weighted-vote PageRank over the unpruned graph
biased             cross-domain re-scoring: top-k by O = n*P*K/(P+K)
biased_diverse     biased re-scoring followed by complete-link clustering,
                   one representative per cluster
"""

from __future__ import annotations

from dataclasses import dataclass, field, fields
from pathlib import Path

import numpy as np

from . import biascore, diversify, metrics, simgraph, stopwords, textprep
from .biascore import KeywordTable
from .metrics import EvalReport
from .textprep import DataError, Document, SentenceRecord

MODES = ("centrality_only", "biased", "biased_diverse", "textrank_baseline")
BIASED_MODES = ("biased", "biased_diverse")


class ConfigError(ValueError):
    """Raised for invalid configuration (CLI exit code 1)."""


@dataclass(frozen=True)
class PipelineConfig:
    """All tunables of a run; defaults follow the module contracts."""

    beta: float = simgraph.DEFAULT_BETA
    damping: float = simgraph.DEFAULT_DAMPING
    tol: float = simgraph.DEFAULT_TOL
    max_iter: int = simgraph.DEFAULT_MAX_ITER
    k: int = 5
    word_budget: int = metrics.DEFAULT_WORD_BUDGET
    window: int = biascore.DEFAULT_WINDOW
    top_t: int | None = None
    mode: str = "centrality_only"
    stopword_path: str | None = None
    language: str = "en"
    normalize_keywords: bool = False
    strict: bool = False

    def validate(self) -> "PipelineConfig":
        if self.mode not in MODES:
            raise ConfigError(f"unknown mode {self.mode!r}; choose from {MODES}")
        if not 0.0 <= self.beta <= 1.0:
            raise ConfigError(f"beta must be in [0, 1], got {self.beta}")
        if not 0.0 < self.damping < 1.0:
            raise ConfigError(f"damping must be in (0, 1), got {self.damping}")
        if self.tol <= 0.0:
            raise ConfigError(f"tol must be positive, got {self.tol}")
        if self.max_iter < 1:
            raise ConfigError(f"max_iter must be >= 1, got {self.max_iter}")
        if self.k < 1:
            raise ConfigError(f"k must be >= 1, got {self.k}")
        if self.word_budget < 0:
            raise ConfigError(f"word_budget must be >= 0, got {self.word_budget}")
        if self.window < 2:
            raise ConfigError(f"window must be >= 2, got {self.window}")
        if self.top_t is not None and self.top_t < 1:
            raise ConfigError(f"top_t must be >= 1, got {self.top_t}")
        return self

    def as_dict(self) -> dict[str, object]:
        return {f.name: getattr(self, f.name) for f in fields(self)}

    def stopword_set(self) -> frozenset[str]:
        if self.stopword_path:
            return stopwords.load_stopwords(self.stopword_path)
        return stopwords.default_stopwords(self.language)

    @classmethod
    def from_file(cls, path: str | Path) -> "PipelineConfig":
        """Parse a "key = value" config file ('#' starts a comment)."""
        values: dict[str, object] = {}
        with open(path, encoding="utf-8") as fh:
            for lineno, line in enumerate(fh, start=1):
                text = line.split("#", 1)[0].strip()
                if not text:
                    continue
                if "=" not in text:
                    raise ConfigError(f"{path}:{lineno}: expected 'key = value'")
                key, raw = (part.strip() for part in text.split("=", 1))
                values[key] = _parse_config_value(path, lineno, key, raw)
        return cls(**values).validate()


_BOOL_WORDS = {"true": True, "1": True, "yes": True, "false": False, "0": False, "no": False}


def _parse_config_value(path, lineno, key: str, raw: str) -> object:
    spec = {f.name: f.type for f in fields(PipelineConfig)}
    if key not in spec:
        raise ConfigError(f"{path}:{lineno}: unknown config key {key!r}")
    kind = spec[key]
    try:
        if kind == "bool":
            return _BOOL_WORDS[raw.lower()]
        if kind == "int":
            return int(raw)
        if kind == "float":
            return float(raw)
        if kind == "int | None":
            return None if raw.lower() == "none" else int(raw)
        if kind == "str | None":
            return None if raw.lower() == "none" else raw
        return raw
    except (ValueError, KeyError):
        raise ConfigError(f"{path}:{lineno}: bad value {raw!r} for {key!r}") from None


@dataclass(frozen=True)
class SummarySentence:
    """One selected sentence with its scoring provenance."""

    sentence_id: int
    raw: str
    final_score: float
    centrality: float
    keyword_score: float | None = None
    cluster_id: int | None = None


@dataclass(frozen=True)
class ScoredSummary:
    """Ordered selection (at most k sentences) plus the config snapshot."""

    selected: tuple[SummarySentence, ...]
    mode: str
    config: dict[str, object]
    converged: bool = True
    warnings: tuple[str, ...] = ()

    def text(self) -> str:
        """Summary body: selected sentences joined by a single space."""
        return " ".join(s.raw for s in self.selected)

    def by_position(self) -> tuple[SummarySentence, ...]:
        """Readability ordering: original document position instead of score."""
        return tuple(sorted(self.selected, key=lambda s: s.sentence_id))


# ---------------------------------------------------------------------------
# Summarization runs
# ---------------------------------------------------------------------------


def _prepare(corpus: list[Document], config: PipelineConfig):
    stop = config.stopword_set()
    sentences = textprep.ingest(corpus, stop)
    stats = textprep.build_stats(sentences)
    graph = simgraph.build_graph(sentences, stats, config.beta)
    return sentences, stats, graph


def _rank_order(scores: np.ndarray) -> list[int]:
    return sorted(range(len(scores)), key=lambda i: (-scores[i], i))


def _top_k(
    sentences: list[SentenceRecord],
    scores: np.ndarray,
    config: PipelineConfig,
    mode: str,
    centrality: simgraph.CentralityVector,
    keywords: np.ndarray | None = None,
    warnings: tuple[str, ...] = (),
) -> ScoredSummary:
    order = _rank_order(scores)[: config.k]
    selected = tuple(
        SummarySentence(
            sentence_id=sentences[i].sentence_id,
            raw=sentences[i].raw,
            final_score=float(scores[i]),
            centrality=float(centrality.scores[i]),
            keyword_score=float(keywords[i]) if keywords is not None else None,
        )
        for i in order
    )
    if not centrality.converged:
        warnings = warnings + ("pagerank did not converge within max_iter",)
    return ScoredSummary(
        selected=selected,
        mode=mode,
        config=config.as_dict(),
        converged=centrality.converged,
        warnings=warnings,
    )


def run_lexrank_baseline(corpus: list[Document], config: PipelineConfig) -> ScoredSummary:
    """Top-k sentences by pure centrality on the pruned graph."""
    config.validate()
    sentences, _, graph = _prepare(corpus, config)
    centrality = simgraph.pagerank(graph, config.damping, config.tol, config.max_iter)
    return _top_k(sentences, centrality.scores, config, "centrality_only", centrality)


def run_textrank_baseline(corpus: list[Document], config: PipelineConfig) -> ScoredSummary:
    """Top-k by weighted-vote PageRank on the unpruned similarity graph."""
    config.validate()
    sentences, _, graph = _prepare(corpus, config)
    adjacency = graph.weights.copy()
    np.fill_diagonal(adjacency, 0.0)
    centrality = simgraph.pagerank_matrix(
        adjacency, config.damping, config.tol, config.max_iter
    )
    return _top_k(sentences, centrality.scores, config, "textrank_baseline", centrality)


def run_cross_domain(
    corpus: list[Document],
    bias_corpus: list[Document] | None,
    config: PipelineConfig,
    keyword_table: KeywordTable | None = None,
) -> ScoredSummary:
    """Full cross-domain chain; biased_diverse adds the clustering step.

    The keyword table is extracted from the bias corpus unless a
    precomputed one is supplied.
    """
    config.validate()
    if keyword_table is None:
        if not bias_corpus:
            raise ConfigError(f"mode {config.mode!r} requires a bias corpus")
        keyword_table = biascore.extract_keywords(
            bias_corpus,
            window=config.window,
            top_t=config.top_t,
            stopwords=config.stopword_set(),
            damping=config.damping,
            tol=config.tol,
            max_iter=config.max_iter,
        )
    sentences, _, graph = _prepare(corpus, config)
    centrality = simgraph.pagerank(graph, config.damping, config.tol, config.max_iter)
    keywords = biascore.keyword_vector(sentences, keyword_table)
    biased = biascore.rescore(
        centrality, keywords, len(sentences), config.normalize_keywords
    )
    warnings = ()
    if keywords.max(initial=0.0) == 0.0:
        warnings = ("no bias keyword occurs in any sentence; ranking by tie rules only",)

    if config.mode != "biased_diverse":
        return _top_k(
            sentences, biased.final, config, "biased", centrality, biased.keyword_score, warnings
        )

    selection = diversify.summarize_diverse(
        graph, biased.final, min(config.k, len(sentences))
    )
    selected = tuple(
        SummarySentence(
            sentence_id=sentences[i].sentence_id,
            raw=sentences[i].raw,
            final_score=float(biased.final[i]),
            centrality=float(centrality.scores[i]),
            keyword_score=float(biased.keyword_score[i]),
            cluster_id=int(selection.labels.labels[i]),
        )
        for i in selection.selected
    )
    if not centrality.converged:
        warnings = warnings + ("pagerank did not converge within max_iter",)
    return ScoredSummary(
        selected=selected,
        mode="biased_diverse",
        config=config.as_dict(),
        converged=centrality.converged,
        warnings=warnings,
    )


def summarize(
    corpus: list[Document],
    config: PipelineConfig,
    bias_corpus: list[Document] | None = None,
    keyword_table: KeywordTable | None = None,
) -> ScoredSummary:
    """Dispatch a run according to config.mode."""
    config.validate()
    if not corpus:
        raise DataError("empty corpus")
    if config.mode == "centrality_only":
        return run_lexrank_baseline(corpus, config)
    if config.mode == "textrank_baseline":
        return run_textrank_baseline(corpus, config)
    return run_cross_domain(corpus, bias_corpus, config, keyword_table)


# ---------------------------------------------------------------------------
# Evaluation
# ---------------------------------------------------------------------------


def evaluate(
    candidate: ScoredSummary,
    gold: Document | str,
    sources: list[Document],
    config: PipelineConfig,
) -> EvalReport:
    """Score a candidate against a gold standard.

    The candidate is truncated to the word budget first; ROUGE-1/2/3 keep
    stopwords, redundancy and coverage drop them.
    """
    gold_text = gold.body if isinstance(gold, Document) else gold
    if not gold_text.strip():
        raise DataError("empty gold standard")
    stop = config.stopword_set()
    candidate_tokens = metrics.truncate(
        textprep.tokenize(candidate.text()), config.word_budget
    )
    gold_tokens = textprep.tokenize(gold_text)
    rouge = {n: metrics.rouge_n(candidate_tokens, gold_tokens, n) for n in (1, 2, 3)}
    source_streams = [textprep.tokenize(doc.body) for doc in sources]
    return EvalReport(
        rouge=rouge,
        redundancy=metrics.redundancy(candidate_tokens, stop),
        coverage=metrics.coverage(candidate_tokens, source_streams, stop),
        summary_words=len(candidate_tokens),
    )


# ---------------------------------------------------------------------------
# Batch evaluation over a directory of document sets
# ---------------------------------------------------------------------------


def write_summary(summary: ScoredSummary, path: str | Path) -> None:
    """Plain-text summary: one selected sentence per line, rank order."""
    with open(path, "w", encoding="utf-8") as fh:
        for sentence in summary.selected:
            fh.write(sentence.raw + "\n")


def write_sidecar(summary: ScoredSummary, path: str | Path) -> None:
    """Structured companion to the plain summary: config echo, warnings,
    and one provenance row per selected sentence (tab-separated)."""
    lines = [f"# mode {summary.mode}", f"# converged {summary.converged}"]
    for key in sorted(summary.config):
        lines.append(f"# config.{key} {summary.config[key]}")
    for warning in summary.warnings:
        lines.append(f"# warning {warning}")
    lines.append("sentence_id\tcluster_id\tfinal_score\tcentrality\tkeyword_score\traw")
    for s in summary.selected:
        cluster = "" if s.cluster_id is None else str(s.cluster_id)
        keyword = "" if s.keyword_score is None else repr(s.keyword_score)
        lines.append(
            f"{s.sentence_id}\t{cluster}\t{s.final_score!r}\t{s.centrality!r}\t{keyword}\t{s.raw}"
        )
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")


def find_gold(set_dir: Path) -> Path:
    """Gold standard for a document set: <set>/<set>.gold.txt."""
    gold = set_dir / f"{set_dir.name}.gold.txt"
    if not gold.is_file():
        raise DataError(f"missing gold standard {gold}")
    return gold


@dataclass(frozen=True)
class BatchResult:
    """Per-set summaries and evaluation reports from one batch run."""

    summaries: dict[str, ScoredSummary] = field(default_factory=dict)
    reports: dict[str, EvalReport] = field(default_factory=dict)

    @property
    def converged(self) -> bool:
        return all(s.converged for s in self.summaries.values())


def batch_eval(
    parent: str | Path,
    out_dir: str | Path,
    config: PipelineConfig,
    bias_corpus: list[Document] | None = None,
    keyword_table: KeywordTable | None = None,
) -> BatchResult:
    """Summarize and evaluate every document set under a parent directory.

    Each subdirectory of `parent` is one set: its .txt files form the
    sentence pool and <set>.gold.txt is the reference.  Writes, per set,
    <set>.summary.txt, <set>.sidecar.txt and <set>.eval.txt into out_dir,
    plus an aggregate.tsv table (one row per set, one column per metric,
    final MEAN row).  Sets are processed in sorted order and all output
    is deterministic.
    """
    config.validate()
    parent = Path(parent)
    if not parent.is_dir():
        raise DataError(f"not a directory: {parent}")
    set_dirs = sorted(d for d in parent.iterdir() if d.is_dir())
    if not set_dirs:
        raise DataError(f"no document sets under {parent}")
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)

    result = BatchResult()
    for set_dir in set_dirs:
        gold_path = find_gold(set_dir)
        documents = textprep.load_directory(set_dir)
        summary = summarize(documents, config, bias_corpus, keyword_table)
        report = evaluate(
            summary, gold_path.read_text(encoding="utf-8"), documents, config
        )
        result.summaries[set_dir.name] = summary
        result.reports[set_dir.name] = report
        write_summary(summary, out / f"{set_dir.name}.summary.txt")
        write_sidecar(summary, out / f"{set_dir.name}.sidecar.txt")
        (out / f"{set_dir.name}.eval.txt").write_text(
            metrics.format_report(report, config.as_dict()), encoding="utf-8"
        )

    _write_aggregate(result.reports, out / "aggregate.tsv")
    return result


def _write_aggregate(reports: dict[str, EvalReport], path: Path) -> None:
    names = sorted(reports)
    columns = [key for key, _ in reports[names[0]].as_items()]
    lines = ["set_id\t" + "\t".join(columns)]
    for name in names:
        values = dict(reports[name].as_items())
        lines.append(name + "\t" + "\t".join(repr(values[c]) for c in columns))
    means = dict(metrics.aggregate_reports(reports))
    lines.append("MEAN\t" + "\t".join(repr(means[c]) for c in columns))
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")
