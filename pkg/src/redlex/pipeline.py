"""Full analysis orchestration: scopes, reports, and deterministic exports.

A *scope* is one slice of the corpus — a (subcase, role) pair where either
side may be unset.  ``run_scope`` executes the whole chain for one scope
(preprocessing, sentiment scoring and test cascade, frequency tables, pair
extraction with threshold selection, and network analysis); ``run_all``
enumerates the general scope plus every subcase crossed with every role,
skipping ineligible cells, and assembles the cross-scope modularity
comparison table.

Reports are plain JSON-shaped dicts with all floats fixed at six significant
digits, so identical inputs produce byte-identical report files on every
platform.
"""

from __future__ import annotations

import csv
import hashlib
import json
import logging
from dataclasses import dataclass, field
from importlib import resources as importlib_resources
from pathlib import Path
from statistics import median
from typing import NamedTuple, Optional

from . import ngram, sentiment, stats, textprep
from .corpus import (
    REGIONS,
    Corpus,
    Role,
    Subcase,
    filter_corpus,
    load_corpus,
    role_analysis_eligibility,
    subcase_display,
)
from .netgraph import (
    CommunityMethod,
    Partition,
    SemanticGraph,
    betweenness_centrality,
    build_graph,
    community_top_terms,
    connected_components,
    detect_communities,
    eigenvector_centrality,
    giant_component,
    k_core_decomposition,
    network_summary,
    write_dot,
    write_graphml,
)

log = logging.getLogger("redlex")

DEFAULT_METHOD_NAMES = ("fast_greedy", "louvain", "label_propagation")


class Scope(NamedTuple):
    subcase: Optional[Subcase]
    role: Optional[Role]


_ROLE_SLUG = {None: "all", Role.APPEARER: "appearers", Role.VICTIM: "victims"}


def scope_slug(scope: Scope) -> str:
    sub = "general" if scope.subcase is None else subcase_display(scope.subcase)
    sub = sub.lower().replace(" ", "-")
    return f"{sub}-{_ROLE_SLUG[scope.role]}"


def enumerate_scopes() -> list[Scope]:
    """General plus the six subcases, each crossed with all/appearers/victims."""
    scopes = []
    for subcase in (None, *REGIONS):
        for role in (None, Role.APPEARER, Role.VICTIM):
            scopes.append(Scope(subcase, role))
    return scopes


@dataclass(frozen=True)
class AnalysisConfig:
    """Everything a run needs; echoed verbatim into the report."""

    corpus_path: str
    stopwords: Optional[str] = None
    lemma_lexicon: Optional[str] = None
    valence_lexicon: Optional[str] = None
    polarity_positive: Optional[str] = None
    polarity_negative: Optional[str] = None
    mode: ngram.Mode = ngram.Mode.BIGRAM
    max_skip: int = 2
    threshold: str | int = "auto"
    alpha: float = 0.05
    fallback_weight: int = 1
    methods: tuple[str, ...] = DEFAULT_METHOD_NAMES
    seed: int = 0
    out_dir: Optional[str] = None
    fold_diacritics: bool = False
    stopwords_first: bool = True
    use_weights: bool = True
    min_docs: int = 3
    min_graph_vertices: int = 30
    top_n: int = 20

    def __post_init__(self):
        if isinstance(self.threshold, int) and self.threshold < 1:
            raise ValueError("fixed threshold must be >= 1")
        if isinstance(self.threshold, str) and self.threshold != "auto":
            raise ValueError("threshold must be 'auto' or a positive integer")
        if self.mode is ngram.Mode.SKIPGRAM and self.max_skip < 1:
            raise ValueError("skipgram mode needs max_skip >= 1")
        for name in self.methods:
            CommunityMethod(name)

    def community_methods(self) -> tuple[CommunityMethod, ...]:
        return tuple(CommunityMethod(name) for name in self.methods)

    def to_dict(self) -> dict:
        return {
            "corpus_path": self.corpus_path,
            "stopwords": self.stopwords,
            "lemma_lexicon": self.lemma_lexicon,
            "valence_lexicon": self.valence_lexicon,
            "polarity_positive": self.polarity_positive,
            "polarity_negative": self.polarity_negative,
            "mode": self.mode.value,
            "max_skip": self.max_skip,
            "threshold": self.threshold,
            "alpha": self.alpha,
            "fallback_weight": self.fallback_weight,
            "methods": list(self.methods),
            "seed": self.seed,
            "out_dir": self.out_dir,
            "fold_diacritics": self.fold_diacritics,
            "stopwords_first": self.stopwords_first,
            "use_weights": self.use_weights,
            "min_docs": self.min_docs,
            "min_graph_vertices": self.min_graph_vertices,
            "top_n": self.top_n,
        }


@dataclass(frozen=True)
class Resources:
    corpus: Corpus
    stoplist: set[str]
    lemma_lexicon: textprep.LemmaLexicon
    valence: sentiment.ValenceLexicon
    polarity: sentiment.PolarityLexicon


def _data_path(name: str) -> Path:
    return Path(str(importlib_resources.files("redlex").joinpath("data", name)))


def default_data_file(name: str) -> Path:
    """Path of a bundled data file (lexicons, stopwords, mini corpus)."""
    return _data_path(name)


def load_resources(config: AnalysisConfig) -> Resources:
    return Resources(
        corpus=load_corpus(config.corpus_path),
        stoplist=textprep.load_stopwords(config.stopwords or _data_path("stopwords_es.txt")),
        lemma_lexicon=textprep.load_lemma_lexicon(
            config.lemma_lexicon or _data_path("lemma_es.tsv")
        ),
        valence=sentiment.load_valence_lexicon(
            config.valence_lexicon or _data_path("valence_es.tsv")
        ),
        polarity=sentiment.load_polarity_lexicon(
            config.polarity_positive or _data_path("polarity_positive_es.txt"),
            config.polarity_negative or _data_path("polarity_negative_es.txt"),
        ),
    )


def scope_seed(seed: int, scope: Scope) -> int:
    digest = hashlib.sha256(f"{seed}:{scope_slug(scope)}".encode()).digest()
    return int.from_bytes(digest[:8], "big") & ((1 << 53) - 1)


def _scope_documents(corpus: Corpus, scope: Scope):
    docs = filter_corpus(corpus, subcase=scope.subcase, role=scope.role)
    return [d for d in docs if not d.skipped]


# --- report fragments ---------------------------------------------------------


def _test_result_dict(result: Optional[stats.TestResult]) -> Optional[dict]:
    if result is None:
        return None
    return {
        "method": result.method.value,
        "alternative": result.alternative.value,
        "statistic": result.statistic,
        "p_value": result.p_value,
        "n": result.n,
    }


def _cascade_dict(decision: stats.CascadeDecision) -> dict:
    return {
        "alpha": decision.alpha,
        "n": decision.n,
        "degenerate": decision.degenerate,
        "normality": _test_result_dict(decision.normality),
        "main": _test_result_dict(decision.main),
        "branch": decision.branch.value if decision.branch else None,
        "reject_null": decision.reject_null,
    }


def _sentiment_block(summaries, pooled_pos, pooled_neg, alpha) -> dict:
    scored = [s for s in summaries if s.scored]
    neg_means = [s.mean_neg for s in scored if s.mean_neg is not None]
    pos_means = [s.mean_pos for s in scored if s.mean_pos is not None]
    block: dict = {
        "documents_scored": len(scored),
        "per_document": {
            "mean_neg": sum(neg_means) / len(neg_means) if neg_means else None,
            "mean_pos": sum(pos_means) / len(pos_means) if pos_means else None,
            "median_neg": median(neg_means) if neg_means else None,
            "median_pos": median(pos_means) if pos_means else None,
            "mean_prop_neg": sum(s.prop_neg for s in scored) / len(scored) if scored else None,
            "mean_prop_pos": sum(s.prop_pos for s in scored) / len(scored) if scored else None,
            "median_prop_neg": median(s.prop_neg for s in scored) if scored else None,
            "median_prop_pos": median(s.prop_pos for s in scored) if scored else None,
        },
        "pooled": {
            "mean_neg": pooled_neg[0] / pooled_neg[1] if pooled_neg[1] else None,
            "mean_pos": pooled_pos[0] / pooled_pos[1] if pooled_pos[1] else None,
            "n_neg": pooled_neg[1],
            "n_pos": pooled_pos[1],
        },
    }
    if len(scored) >= 3:
        block["tests"] = {
            metric.value: _cascade_dict(stats.sentiment_cascade(scored, metric, alpha))
            for metric in (stats.CascadeMetric.MEAN_MAGNITUDE, stats.CascadeMetric.PROPORTION)
        }
        block["tests_skipped_reason"] = None
    else:
        block["tests"] = None
        block["tests_skipped_reason"] = "fewer than 3 scored documents"
    return block


def _frequency_block(sequences, top_n: int) -> dict:
    def table(upos_filter):
        return [[lemma, count] for lemma, count in
                sentiment.frequency_table(sequences, upos_filter, top_n)]

    return {
        "all": table(None),
        "nouns": table({textprep.Upos.NOUN}),
        "verbs": table({textprep.Upos.VERB}),
        "adjectives": table({textprep.Upos.ADJ}),
    }


def _threshold_block(pc: ngram.PairCounts, config: AnalysisConfig) -> tuple[int, dict]:
    """Resolve the effective threshold for a scope, relaxing if needed."""
    if isinstance(config.threshold, int):
        return config.threshold, {
            "policy": "fixed",
            "chosen_v": config.threshold,
            "effective_v": config.threshold,
            "degenerate": False,
            "stabilized": None,
            "scan": None,
        }
    scan = ngram.threshold_scan(pc)
    effective = scan.chosen_v
    while effective > 1:
        g = build_graph(ngram.apply_threshold(pc, effective))
        if g.n_vertices >= config.min_graph_vertices:
            break
        effective -= 1
    return effective, {
        "policy": "auto",
        "chosen_v": scan.chosen_v,
        "effective_v": effective,
        "degenerate": scan.degenerate,
        "stabilized": scan.stabilized,
        "scan": [[p.v, p.skew, p.surviving_pairs] for p in scan.points],
    }


def _network_block(g: SemanticGraph, config: AnalysisConfig, seed: int) -> dict:
    giant = giant_component(g)
    summary = network_summary(giant)
    cores = k_core_decomposition(g)
    betweenness = betweenness_centrality(g)
    eigen: dict[str, float] = {}
    for comp in connected_components(g):
        eigen.update(eigenvector_centrality(g.induced_subgraph(comp), use_weights=False))

    detection = detect_communities(
        g, config.community_methods(), seed=seed, use_weights=config.use_weights
    )
    top_terms = community_top_terms(g, detection.best, n=config.top_n, centrality=eigen)
    giant_labels = set(giant.labels)
    eigen_top = sorted(
        ((label, value) for label, value in eigen.items() if label in giant_labels),
        key=lambda kv: (-kv[1], kv[0]),
    )[: config.top_n]

    assignment = detection.best.partition.assignment
    nodes = [
        [
            label,
            g.degree(g.index_of(label)),
            cores[label],
            eigen[label],
            betweenness[label],
            assignment[label],
        ]
        for label in sorted(g.labels)
    ]
    return {
        "n_vertices": g.n_vertices,
        "n_edges": g.n_edges,
        "giant_n_vertices": giant.n_vertices,
        "giant_n_edges": giant.n_edges,
        "summary": {
            "mean_distance": summary.mean_distance,
            "mean_degree": summary.mean_degree,
            "degree_sd": summary.degree_sd,
            "clique_number": summary.clique_number,
            "density": summary.density,
            "transitivity": summary.transitivity,
            "assortativity": summary.assortativity,
        },
        "summary_scope": "giant_component",
        "edges": [[a, b, w] for a, b, w in sorted(g.edge_labels())],
        "nodes": nodes,
        "eigen_top": [[label, value] for label, value in eigen_top],
        "communities": {
            "methods": [
                {
                    "method": r.method.value,
                    "n_communities": r.partition.k,
                    "modularity": r.modularity,
                }
                for r in detection.results
            ],
            "best": detection.best.method.value,
            "best_modularity": detection.best.modularity,
            "n_communities": detection.best.partition.k,
            "use_weights": config.use_weights,
            "top_terms": [
                {"community": cid, "terms": [[label, value] for label, value in terms]}
                for cid, terms in sorted(top_terms.items())
            ],
        },
    }


def _scope_sentiment(
    config: AnalysisConfig, scope: Scope, res: Resources
) -> tuple[dict, list[textprep.LemmaSequence]]:
    """Preprocessing, sentiment summaries/tests and frequency tables.

    Returns the partial scope report plus the lemma sequences for callers
    that continue with pair extraction.
    """
    slug = scope_slug(scope)
    base = {
        "name": slug,
        "scope": {
            "subcase": scope.subcase.value if scope.subcase else None,
            "role": scope.role.value if scope.role else None,
        },
    }
    docs = _scope_documents(res.corpus, scope)
    if len(docs) < config.min_docs:
        log.info("scope %s skipped: %d document(s) < min_docs=%d", slug, len(docs), config.min_docs)
        report = {
            **base,
            "status": "skipped",
            "skip_reason": f"{len(docs)} document(s), fewer than min_docs={config.min_docs}",
            "documents": len(docs),
        }
        return report, []

    seed = scope_seed(config.seed, scope)
    sequences = []
    summaries = []
    covered = 0
    total_tokens = 0
    pooled_pos = [0, 0]  # magnitude sum, hit count
    pooled_neg = [0, 0]
    for doc in docs:
        tokens = textprep.tokenize(
            textprep.normalize(doc.text, fold_diacritics=config.fold_diacritics)
        )
        kept = textprep.remove_stopwords(tokens, res.stoplist)
        total_tokens += len(kept)
        covered += sum(1 for t in kept if res.lemma_lexicon.get(t.surface) is not None)
        seq = textprep.lemmatize(kept, res.lemma_lexicon, doc_id=doc.id)
        sequences.append(seq)
        scores = [
            s
            for _, s in sentiment.score_tokens(
                seq, res.valence, res.polarity, config.fallback_weight
            )
        ]
        for s in scores:
            if s > 0:
                pooled_pos[0] += s
                pooled_pos[1] += 1
            else:
                pooled_neg[0] += -s
                pooled_neg[1] += 1
        summaries.append(sentiment.summarize_document(scores, doc.id))

    report = {
        **base,
        "status": "ok",
        "documents": len(docs),
        "seed": seed,
        "lexicon_coverage": covered / total_tokens if total_tokens else None,
        "sentiment": _sentiment_block(summaries, pooled_pos, pooled_neg, config.alpha),
        "frequencies": _frequency_block(sequences, config.top_n),
    }
    return report, sequences


def run_scope_sentiment(
    config: AnalysisConfig, scope: Scope, res: Optional[Resources] = None
) -> dict:
    """Sentiment summaries, test cascades and frequency tables for one scope."""
    if res is None:
        res = load_resources(config)
    report, _ = _scope_sentiment(config, scope, res)
    return report


def run_scope(config: AnalysisConfig, scope: Scope, res: Optional[Resources] = None) -> dict:
    """Run the full chain for one scope; returns the scope report dict."""
    if res is None:
        res = load_resources(config)
    report, sequences = _scope_sentiment(config, scope, res)
    if report["status"] != "ok":
        return report
    docs = _scope_documents(res.corpus, scope)
    seed = report["seed"]

    max_skip = config.max_skip if config.mode is ngram.Mode.SKIPGRAM else 0
    if config.stopwords_first:
        pc = ngram.extract_pairs(sequences, config.mode, max_skip)
    else:
        raw_sequences = [
            textprep.lemmatize(
                textprep.tokenize(
                    textprep.normalize(doc.text, fold_diacritics=config.fold_diacritics)
                ),
                res.lemma_lexicon,
                doc_id=doc.id,
            )
            for doc in docs
        ]
        pc = ngram.drop_stopword_pairs(
            ngram.extract_pairs(raw_sequences, config.mode, max_skip), res.stoplist
        )

    pairs_block: dict = {
        "mode": pc.mode.value,
        "max_skip": pc.max_skip,
        "stopwords_first": config.stopwords_first,
        "total_pairs": pc.total(),
        "distinct_pairs": len(pc),
        "counts": [[a, b, c] for a, b, c in ngram.sorted_pairs(pc)],
    }
    if not pc.counts:
        pairs_block["threshold"] = None
        report["pairs"] = pairs_block
        report["network"] = None
        report["network_skipped_reason"] = "no co-occurrence pairs"
        return report

    effective_v, threshold_info = _threshold_block(pc, config)
    pairs_block["threshold"] = threshold_info
    report["pairs"] = pairs_block

    g = build_graph(ngram.apply_threshold(pc, effective_v))
    if g.n_edges == 0:
        report["network"] = None
        report["network_skipped_reason"] = "empty graph after thresholding"
        return report

    report["network"] = _network_block(g, config, seed)
    report["network_skipped_reason"] = None
    return report


@dataclass(frozen=True)
class ReportBundle:
    """The full run report; ``data`` serializes to the canonical JSON."""

    data: dict = field(default_factory=dict)

    def to_json(self) -> str:
        return canonical_json(self.data)

    @classmethod
    def from_json(cls, text: str) -> "ReportBundle":
        return cls(data=json.loads(text))


def _corpus_block(corpus: Corpus, min_docs: int) -> dict:
    rows = []
    for subcase, role, eligible in role_analysis_eligibility(corpus, min_docs):
        rows.append(
            {
                "subcase": subcase.value,
                "role": role.value,
                "documents": corpus.count(subcase, role),
                "eligible": eligible,
            }
        )
    by_subcase = {
        subcase.value: corpus.count(subcase=subcase) for subcase in (*REGIONS, Subcase.UNASSIGNED)
    }
    return {
        "documents": len(corpus),
        "skipped_documents": sum(1 for d in corpus if d.skipped),
        "by_subcase": by_subcase,
        "by_role": {role.value: corpus.count(role=role) for role in Role},
        "eligibility": rows,
    }


def _modularity_table(scope_reports: dict[str, dict], mode: ngram.Mode) -> dict:
    def cell(scope: Scope):
        report = scope_reports[scope_slug(scope)]
        network = report.get("network")
        if report["status"] != "ok" or not network:
            return None
        return network["communities"]["best_modularity"]

    rows = []
    for subcase in (None, *REGIONS):
        rows.append(
            {
                "scope": "General" if subcase is None else subcase_display(subcase),
                "all": cell(Scope(subcase, None)),
                "appearers": cell(Scope(subcase, Role.APPEARER)),
                "victims": cell(Scope(subcase, Role.VICTIM)),
            }
        )
    return {"mode": mode.value, "columns": ["all", "appearers", "victims"], "rows": rows}


def run_all(config: AnalysisConfig) -> ReportBundle:
    """General + per-subcase + per-role analysis and the comparison table."""
    res = load_resources(config)
    scope_reports: dict[str, dict] = {}
    ordered = []
    for scope in enumerate_scopes():
        report = run_scope(config, scope, res)
        scope_reports[report["name"]] = report
        ordered.append(report)
    data = {
        "config": config.to_dict(),
        "corpus": _corpus_block(res.corpus, config.min_docs),
        "scopes": ordered,
        "modularity_table": _modularity_table(scope_reports, config.mode),
    }
    return ReportBundle(data=_round_floats(data))


# --- canonical serialization ----------------------------------------------------


def _round_floats(obj):
    """Fix every float at six significant digits (recursively)."""
    if isinstance(obj, bool):
        return obj
    if isinstance(obj, float):
        return float(format(obj, ".6g"))
    if isinstance(obj, dict):
        return {k: _round_floats(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_round_floats(v) for v in obj]
    return obj


def canonical_json(data: dict) -> str:
    return json.dumps(
        _round_floats(data), sort_keys=True, ensure_ascii=False, indent=2, allow_nan=False
    )


# --- exports ----------------------------------------------------------------------


def _graph_from_network_block(network: dict) -> tuple[SemanticGraph, dict, dict, dict, Partition]:
    g = SemanticGraph.from_edge_labels([(a, b, w) for a, b, w in network["edges"]])
    cores: dict[str, int] = {}
    eigen: dict[str, float] = {}
    betweenness: dict[str, float] = {}
    assignment: dict[str, int] = {}
    for label, _degree, core, eig, btw, community in network["nodes"]:
        cores[label] = core
        eigen[label] = eig
        betweenness[label] = btw
        assignment[label] = community
    return g, cores, eigen, betweenness, Partition(assignment=assignment)


def write_csv_rows(path: Path, header: list[str], rows) -> None:
    with path.open("w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)


def export_bundle(
    bundle: ReportBundle,
    out_dir,
    formats: tuple[str, ...] = ("json", "csv", "graph"),
) -> list[Path]:
    """Write the report JSON plus per-scope CSV tables and graph files.

    Per analysable scope: ``pairs.csv``, ``edges.csv``, ``nodes.csv`` and
    ``graph.dot`` / ``graph.graphml``.  Re-exporting the same bundle is
    byte-identical.
    """
    for fmt in formats:
        if fmt not in ("json", "csv", "graph"):
            raise ValueError(f"unknown export format {fmt!r}")
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    written: list[Path] = []

    if "json" in formats:
        path = out / "report.json"
        path.write_text(bundle.to_json() + "\n", encoding="utf-8", newline="\n")
        written.append(path)

    for scope in bundle.data.get("scopes", []):
        if scope.get("status") != "ok":
            continue
        scope_dir = out / scope["name"]
        pairs = scope.get("pairs")
        network = scope.get("network")
        if "csv" in formats and pairs:
            scope_dir.mkdir(parents=True, exist_ok=True)
            path = scope_dir / "pairs.csv"
            write_csv_rows(path, ["word1", "word2", "count"], pairs["counts"])
            written.append(path)
        if not network:
            continue
        g, cores, eigen, betweenness, partition = _graph_from_network_block(network)
        if "csv" in formats:
            scope_dir.mkdir(parents=True, exist_ok=True)
            path = scope_dir / "edges.csv"
            write_csv_rows(path, ["source", "target", "weight"], network["edges"])
            written.append(path)
            path = scope_dir / "nodes.csv"
            write_csv_rows(
                path,
                ["label", "degree", "core", "eigen", "betweenness", "community"],
                network["nodes"],
            )
            written.append(path)
        if "graph" in formats:
            scope_dir.mkdir(parents=True, exist_ok=True)
            path = scope_dir / "graph.dot"
            write_dot(g, path, cores, eigen, betweenness, partition)
            written.append(path)
            path = scope_dir / "graph.graphml"
            write_graphml(g, path, cores, eigen, betweenness, partition)
            written.append(path)
    return written
