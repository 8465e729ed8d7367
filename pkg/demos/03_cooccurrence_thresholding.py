#!/usr/bin/env python3
"""Pair extraction and the skewness elbow rule for frequency thresholding.

Extracts bigrams and skipgrams from the mini corpus, scans thresholds, and
prints the skewness curve so the chosen elbow is visible.
"""

from redlex.corpus import load_corpus
from redlex.ngram import Mode, apply_threshold, extract_pairs, sorted_pairs, threshold_scan
from redlex.pipeline import default_data_file
from redlex.textprep import load_lemma_lexicon, load_stopwords, preprocess

corpus = load_corpus(default_data_file("mini_corpus.jsonl"))
stoplist = load_stopwords(default_data_file("stopwords_es.txt"))
lemmas = load_lemma_lexicon(default_data_file("lemma_es.tsv"))

sequences = [
    preprocess(d.text, stoplist, lemmas, doc_id=d.id) for d in corpus if not d.skipped
]

bigrams = extract_pairs(sequences, Mode.BIGRAM)
skipgrams = extract_pairs(sequences, Mode.SKIPGRAM, max_skip=2)
print(f"bigrams:   {len(bigrams)} distinct pairs, {bigrams.total()} total")
print(f"skipgrams: {len(skipgrams)} distinct pairs, {skipgrams.total()} total (max_skip=2)")

print("\nmost frequent bigrams:")
for w1, w2, count in sorted_pairs(bigrams)[:8]:
    print(f"  {count:>4}  {w1} -- {w2}")

scan = threshold_scan(bigrams, epsilon=0.05, window=3)
print("\nthreshold scan (skewness of surviving counts per threshold):")
for point in scan.points[:15]:
    marker = " <- chosen" if point.v == scan.chosen_v else ""
    print(f"  v={point.v:>3}  skew={point.skew:8.3f}  pairs={point.surviving_pairs:>5}{marker}")
if len(scan.points) > 15:
    print(f"  ... ({len(scan.points)} thresholds scanned)")
print(f"chosen threshold: {scan.chosen_v} (stabilized: {scan.stabilized})")

kept = apply_threshold(bigrams, scan.chosen_v)
print(f"after thresholding: {len(kept)} pairs survive")
