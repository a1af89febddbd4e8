"""Walkthrough: scoring summaries against a reference.

Runs every mode over one document set and prints ROUGE-1/2/3 together
with the redundancy and coverage scores, all computed on the first 100
words of each candidate.  Also shows the on-disk layout that batch
evaluation expects.

Run with: python3 demos/04_evaluation.py
"""

from graphsum import Document, PipelineConfig, evaluate, summarize

corpus = [
    Document(
        id="storm-coverage",
        body=(
            "The storm closed the harbor for two days. "
            "Ferries stayed docked while the storm passed. "
            "Crews cleared fallen branches from coastal roads. "
            "The harbor reopened once inspectors cleared the docks. "
            "A bakery near the pier gave out free bread. "
            "Road crews worked through the night after the storm."
        ),
    ),
]

bias = [Document(id="b", body="Harbor closures and ferry docking. Storm damage to docks.")]
gold = (
    "A two day storm closed the harbor and docked the ferries. "
    "Crews cleared roads and the harbor reopened after inspection."
)

for mode in ("centrality_only", "textrank_baseline", "biased", "biased_diverse"):
    config = PipelineConfig(mode=mode, k=3)
    summary = summarize(corpus, config, bias_corpus=bias)
    report = evaluate(summary, gold, corpus, config)
    r1, r2 = report.rouge[1], report.rouge[2]
    print(f"{mode:<18} rouge1_f={r1.f_score:.3f} rouge2_f={r2.f_score:.3f} "
          f"redundancy={report.redundancy:.3f} coverage={report.coverage:.3f} "
          f"words={report.summary_words}")

print("""
Batch layout for the command line:

    sets/
      harbor/
        doc0.txt            documents of the set (all *.txt files)
        harbor.gold.txt     the reference summary for this set
      bakery/
        doc0.txt
        bakery.gold.txt

    graphsum batch-eval --input sets/ --out reports/ --mode biased \\
        --bias bias_docs/ -k 3

writes per-set summaries, provenance sidecars, evaluation reports, and
an aggregate.tsv of per-metric means.
""")
