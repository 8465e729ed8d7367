"""redlex: sentiment and co-occurrence network analysis for hearing corpora.

The package turns a corpus of transcribed hearing testimony into (a)
per-document lexicon sentiment summaries checked with a normality-gated
one-sided paired-test cascade, and (b) weighted word co-occurrence networks
(bigrams or skipgrams) pruned by a skewness elbow rule and analysed with
centralities, k-cores, and max-modularity community detection — per subcase,
per participant role, and overall.
"""

from . import corpus, netgraph, ngram, pipeline, sentiment, stats, textprep
from .corpus import Corpus, CorpusError, Document, Role, Subcase, filter_corpus, load_corpus
from .pipeline import AnalysisConfig, ReportBundle, export_bundle, run_all, run_scope

__version__ = "0.1.0"

__all__ = [
    "AnalysisConfig",
    "Corpus",
    "CorpusError",
    "Document",
    "ReportBundle",
    "Role",
    "Subcase",
    "corpus",
    "export_bundle",
    "filter_corpus",
    "load_corpus",
    "netgraph",
    "ngram",
    "pipeline",
    "run_all",
    "run_scope",
    "sentiment",
    "stats",
    "textprep",
]
