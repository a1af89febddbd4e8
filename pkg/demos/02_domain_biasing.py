"""Walkthrough: steering a summary toward a target domain.

A general-interest corpus is summarized twice: once by pure centrality
and once after re-scoring against keywords extracted from a small
domain corpus.  The harmonic combination O = n*P*K/(P+K) zeroes out
every sentence that carries no domain keyword at all.

Run with: python3 demos/02_domain_biasing.py
"""

from graphsum import Document, PipelineConfig, extract_keywords, summarize

corpus = [
    Document(
        id="mixed-news",
        body=(
            "City council approved the downtown budget on Monday. "
            "The budget debate ran long into the evening. "
            "A new battery plant will open beside the river. "
            "Battery recycling targets were part of the council debate. "
            "Local teams split their weekend fixtures. "
            "The mayor thanked volunteers for the riverside cleanup."
        ),
    ),
]

bias = [
    Document(
        id="energy-report",
        body=(
            "Battery storage keeps renewable power stable. "
            "Recycling old battery cells recovers lithium. "
            "Grid planners want cheap storage near every plant."
        ),
        origin="bias_corpus",
    ),
]

table = extract_keywords(bias, stopwords=PipelineConfig().stopword_set())
print("keywords extracted from the domain corpus:")
for term, score in list(table.keywords.items())[:8]:
    print(f"  {term:<12} {score:.4f}")

plain_config = PipelineConfig(mode="centrality_only", k=3)
plain = summarize(corpus, plain_config)
print("\ncentrality-only summary:")
for s in plain.selected:
    print(f"  [{s.final_score:.4f}] {s.raw}")

biased_config = PipelineConfig(mode="biased", k=3)
biased = summarize(corpus, biased_config, bias_corpus=bias)
print("\ndomain-biased summary:")
for s in biased.selected:
    marker = "K=0" if s.keyword_score == 0 else f"K={s.keyword_score:.0f}"
    print(f"  [{s.final_score:.4f} {marker}] {s.raw}")

# Sentences about the battery plant and recycling carry keyword mass and
# move to the top; council process and sports sentences score exactly 0
# no matter how central they are.
