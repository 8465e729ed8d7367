#!/usr/bin/env python3
"""Semantic network construction, metrics, centralities, and communities.

Builds the thresholded bigram network of the mini corpus, reports the
descriptive measures of its giant component, and compares the community
detection methods by modularity.
"""

from redlex.corpus import load_corpus
from redlex.netgraph import (
    CommunityMethod,
    betweenness_centrality,
    build_graph,
    community_top_terms,
    detect_communities,
    eigenvector_centrality,
    giant_component,
    k_core_decomposition,
    network_summary,
)
from redlex.ngram import Mode, apply_threshold, extract_pairs, threshold_scan
from redlex.pipeline import default_data_file
from redlex.textprep import load_lemma_lexicon, load_stopwords, preprocess

corpus = load_corpus(default_data_file("mini_corpus.jsonl"))
stoplist = load_stopwords(default_data_file("stopwords_es.txt"))
lemmas = load_lemma_lexicon(default_data_file("lemma_es.tsv"))
sequences = [preprocess(d.text, stoplist, lemmas, doc_id=d.id) for d in corpus if not d.skipped]

pairs = extract_pairs(sequences, Mode.BIGRAM)
v = threshold_scan(pairs).chosen_v
graph = build_graph(apply_threshold(pairs, v))
print(f"network at threshold v={v}: {graph.n_vertices} vertices, {graph.n_edges} edges")

giant = giant_component(graph)
summary = network_summary(giant)
print(f"\ngiant component ({giant.n_vertices} vertices):")
print(f"  mean distance  {summary.mean_distance:.3f}")
print(f"  mean degree    {summary.mean_degree:.3f} (sd {summary.degree_sd:.3f})")
print(f"  clique number  {summary.clique_number}")
print(f"  density        {summary.density:.4f}")
print(f"  transitivity   {summary.transitivity:.4f}")
assort = "undefined" if summary.assortativity is None else f"{summary.assortativity:.4f}"
print(f"  assortativity  {assort}")

eigen = eigenvector_centrality(giant)
print("\ntop terms by eigenvector centrality:")
for label, value in sorted(eigen.items(), key=lambda kv: (-kv[1], kv[0]))[:8]:
    print(f"  {value:.3f}  {label}")

betw = betweenness_centrality(giant)
top_bridge = max(betw, key=betw.get)
print(f"highest betweenness: {top_bridge!r} ({betw[top_bridge]:.1f})")

cores = k_core_decomposition(giant)
print(f"core numbers range {min(cores.values())}..{max(cores.values())}")

detection = detect_communities(
    giant,
    [CommunityMethod.FAST_GREEDY, CommunityMethod.LOUVAIN, CommunityMethod.LABEL_PROPAGATION],
    seed=0,
)
print("\ncommunity detection (modularity per method):")
for result in detection.results:
    marker = " <- best" if result.method is detection.best.method else ""
    print(f"  {result.method.value:<18} Q={result.modularity:.4f} "
          f"k={result.partition.k}{marker}")

print("\ntop terms of the three largest communities:")
top_terms = community_top_terms(giant, detection.best, n=5, centrality=eigen)
sizes = {cid: len(members) for cid, members in enumerate(detection.best.partition.communities())}
for cid in sorted(sizes, key=sizes.get, reverse=True)[:3]:
    words = ", ".join(label for label, _ in top_terms[cid])
    print(f"  community {cid} ({sizes[cid]} words): {words}")
