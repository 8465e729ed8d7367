"""Lexicon-based sentiment scoring of lemma sequences.

Scoring is a pure lookup: lemmas found in the valence lexicon contribute
their integer score in [-5, +5]; lemmas found only in the fallback polarity
lexicon contribute +/- ``fallback_weight``; everything else is ignored.
There is no negation or context handling, by design — this measures lexical
surface sentiment only.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Optional

from .textprep import LemmaSequence, Upos


@dataclass(frozen=True)
class ValenceLexicon:
    """lemma -> integer valence in [-5, +5], zero excluded."""

    entries: dict[str, int]

    def __post_init__(self):
        for lemma, score in self.entries.items():
            if not isinstance(score, int) or score == 0 or not -5 <= score <= 5:
                raise ValueError(f"invalid valence {score!r} for {lemma!r}")

    def __len__(self) -> int:
        return len(self.entries)


@dataclass(frozen=True)
class PolarityLexicon:
    """Fallback word lists carrying only a positive/negative label."""

    positive: frozenset[str]
    negative: frozenset[str]

    def __post_init__(self):
        overlap = self.positive & self.negative
        if overlap:
            raise ValueError(f"lemmas in both polarity lists: {sorted(overlap)[:5]}")


@dataclass(frozen=True)
class SentimentSummary:
    """Per-document sentiment aggregates.

    ``mean_pos``/``mean_neg`` are mean magnitudes of positive/negative hits,
    present only when the corresponding side has hits.  Proportions are over
    sentiment-bearing tokens only.  A document with no hits at all is
    "unscored" and excluded from hypothesis tests.
    """

    doc_id: str
    n_pos: int
    n_neg: int
    mean_pos: Optional[float]
    mean_neg: Optional[float]
    prop_pos: Optional[float]
    prop_neg: Optional[float]

    @property
    def scored(self) -> bool:
        return self.n_pos + self.n_neg > 0


def load_valence_lexicon(path) -> ValenceLexicon:
    """TSV with columns ``lemma<TAB>score`` (integer in [-5, +5], nonzero)."""
    entries: dict[str, int] = {}
    for lineno, raw in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split("\t")
        if len(parts) != 2:
            raise ValueError(f"{path}:{lineno}: expected 2 tab-separated fields")
        lemma = parts[0].strip()
        try:
            score = int(parts[1])
        except ValueError:
            raise ValueError(f"{path}:{lineno}: score must be an integer") from None
        if score == 0 or not -5 <= score <= 5:
            raise ValueError(f"{path}:{lineno}: score must be in [-5, +5], nonzero")
        entries[lemma] = score
    return ValenceLexicon(entries=entries)


def load_polarity_lexicon(positive_path, negative_path) -> PolarityLexicon:
    """Two word-list files (one word per line, ``#`` comments)."""

    def read_words(path) -> frozenset[str]:
        words = set()
        for raw in Path(path).read_text(encoding="utf-8").splitlines():
            line = raw.split("#", 1)[0].strip()
            if line:
                words.add(line)
        return frozenset(words)

    return PolarityLexicon(positive=read_words(positive_path), negative=read_words(negative_path))


def score_tokens(
    seq: LemmaSequence,
    valence: ValenceLexicon,
    fallback: Optional[PolarityLexicon] = None,
    fallback_weight: int = 1,
) -> list[tuple[str, int]]:
    """Signed score per sentiment-bearing lemma, in sequence order.

    The valence lexicon wins; the fallback only covers lemmas absent from it,
    contributing +/- ``fallback_weight``.  Lemmas in neither are omitted.
    """
    if fallback_weight < 1:
        raise ValueError("fallback_weight must be a positive integer")
    scores: list[tuple[str, int]] = []
    for item in seq.items:
        value = valence.entries.get(item.lemma)
        if value is None and fallback is not None:
            if item.lemma in fallback.positive:
                value = fallback_weight
            elif item.lemma in fallback.negative:
                value = -fallback_weight
        if value is not None:
            scores.append((item.lemma, value))
    return scores


def summarize_document(scores: Iterable[int], doc_id: str) -> SentimentSummary:
    """Collapse signed scores into the per-document summary."""
    pos = []
    neg = []
    for s in scores:
        if s > 0:
            pos.append(s)
        elif s < 0:
            neg.append(-s)
    n_pos, n_neg = len(pos), len(neg)
    total = n_pos + n_neg
    return SentimentSummary(
        doc_id=doc_id,
        n_pos=n_pos,
        n_neg=n_neg,
        mean_pos=sum(pos) / n_pos if n_pos else None,
        mean_neg=sum(neg) / n_neg if n_neg else None,
        prop_pos=n_pos / total if total else None,
        prop_neg=n_neg / total if total else None,
    )


def frequency_table(
    sequences: Iterable[LemmaSequence],
    upos_filter: Optional[set[Upos]] = None,
    top_n: int = 20,
) -> list[tuple[str, int]]:
    """Most frequent lemmas, optionally restricted to a UPOS set.

    Sorted by count descending, ties broken lexicographically.
    """
    if top_n < 1:
        raise ValueError("top_n must be >= 1")
    counts: Counter[str] = Counter()
    for seq in sequences:
        for item in seq.items:
            if upos_filter is None or item.upos in upos_filter:
                counts[item.lemma] += 1
    ranked = sorted(counts.items(), key=lambda kv: (-kv[1], kv[0]))
    return ranked[:top_n]
