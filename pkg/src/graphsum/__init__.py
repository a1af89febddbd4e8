"""graphsum: extractive summarization on sentence-similarity graphs.

Ranks sentences by PageRank centrality over a tf-idf cosine graph, biases
the ranking toward a target domain with keywords extracted from an external
corpus, and removes redundancy by complete-link clustering of the graph,
keeping one representative sentence per cluster.  Includes LexRank- and
TextRank-style baselines and an evaluation harness (ROUGE-n, redundancy,
coverage).
"""

from .biascore import (
    BiasedScores,
    KeywordTable,
    default_top_t,
    extract_keywords,
    keyword_vector,
    read_keyword_table,
    rescore,
    sim_keyword,
    write_keyword_table,
)
from .diversify import (
    ClusterLabels,
    Dendrogram,
    DiverseSelection,
    complete_link,
    select_representatives,
    summarize_diverse,
)
from .metrics import (
    EvalReport,
    NgramProfile,
    RougeScore,
    aggregate_reports,
    coverage,
    format_report,
    redundancy,
    rouge_n,
    truncate,
)
from .pipeline import (
    BatchResult,
    ConfigError,
    PipelineConfig,
    ScoredSummary,
    SummarySentence,
    batch_eval,
    evaluate,
    run_cross_domain,
    run_lexrank_baseline,
    run_textrank_baseline,
    summarize,
)
from .simgraph import (
    CentralityVector,
    SentenceGraph,
    build_graph,
    idf_modified_cosine,
    pagerank,
    pagerank_matrix,
)
from .stopwords import default_stopwords, load_stopwords
from .textprep import (
    CorpusStats,
    DataError,
    Document,
    SentenceRecord,
    build_stats,
    ingest,
    load_directory,
    load_record_file,
    segment,
    split_sentences,
    tokenize,
)

__version__ = "0.1.0"
