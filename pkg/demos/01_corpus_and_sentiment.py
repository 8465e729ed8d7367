#!/usr/bin/env python3
"""Walk through corpus loading, eligibility, and lexicon sentiment scoring.

Uses the bundled mini corpus and bundled Spanish lexicons throughout.
"""

from redlex.corpus import Role, load_corpus, role_analysis_eligibility
from redlex.pipeline import default_data_file
from redlex.sentiment import (
    load_polarity_lexicon,
    load_valence_lexicon,
    score_tokens,
    summarize_document,
)
from redlex.textprep import load_lemma_lexicon, load_stopwords, preprocess

corpus = load_corpus(default_data_file("mini_corpus.jsonl"))
print(f"loaded {len(corpus)} documents from the bundled mini corpus")
print(f"  skipped (empty transcript): {sum(1 for d in corpus if d.skipped)}")
print(f"  appearers: {corpus.count(role=Role.APPEARER)}, victims: {corpus.count(role=Role.VICTIM)}")

print("\nrole-analysis eligibility (minimum 3 documents per cell):")
for subcase, role, eligible in role_analysis_eligibility(corpus):
    n = corpus.count(subcase, role)
    marker = "ok " if eligible else "-- "
    print(f"  {marker}{subcase.value:<18} {role.value:<9} {n:>3} docs")

# Score one document end to end.
stoplist = load_stopwords(default_data_file("stopwords_es.txt"))
lemmas = load_lemma_lexicon(default_data_file("lemma_es.tsv"))
valence = load_valence_lexicon(default_data_file("valence_es.tsv"))
polarity = load_polarity_lexicon(
    default_data_file("polarity_positive_es.txt"),
    default_data_file("polarity_negative_es.txt"),
)

doc = next(d for d in corpus if not d.skipped)
print(f"\nscoring document {doc.id!r} ({doc.subcase.value}, {doc.role.value})")
seq = preprocess(doc.text, stoplist, lemmas, doc_id=doc.id)
scored = score_tokens(seq, valence, polarity)
print(f"  {len(seq)} content lemmas, {len(scored)} sentiment-bearing")
print(f"  first hits: {scored[:8]}")

summary = summarize_document([s for _, s in scored], doc.id)
print(
    f"  mean positive magnitude {summary.mean_pos:.3f}, "
    f"mean negative magnitude {summary.mean_neg:.3f}"
)
print(
    f"  positive proportion {summary.prop_pos:.3f}, "
    f"negative proportion {summary.prop_neg:.3f}"
)
