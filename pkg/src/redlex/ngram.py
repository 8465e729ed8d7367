"""Bigram/skipgram pair extraction and skewness-based frequency thresholding.

Pairs are extracted from stopword-filtered lemma sequences and canonicalized
unordered, so (a, b) and (b, a) accumulate into one count.  Pairs never cross
document boundaries.  The frequency threshold is chosen where the skewness of
the surviving count distribution stops changing materially as the threshold
grows — an elbow rule on the skewness curve.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass
from enum import Enum
from pathlib import Path
from typing import Iterable, NamedTuple, Union

from . import stats
from .textprep import LemmaSequence


class Mode(str, Enum):
    BIGRAM = "bigram"
    SKIPGRAM = "skipgram"


Pair = tuple[str, str]


@dataclass(frozen=True)
class PairCounts:
    mode: Mode
    max_skip: int
    counts: dict[Pair, int]

    def total(self) -> int:
        return sum(self.counts.values())

    def max_count(self) -> int:
        return max(self.counts.values()) if self.counts else 0

    def __len__(self) -> int:
        return len(self.counts)


class ScanPoint(NamedTuple):
    v: int
    skew: float
    surviving_pairs: int


@dataclass(frozen=True)
class ThresholdScan:
    """Skewness of the surviving count distribution per candidate threshold.

    ``degenerate`` is set when skewness is undefined at every threshold
    (fewer than 3 pairs, or all counts equal); ``chosen_v`` is then 1.
    """

    points: tuple[ScanPoint, ...]
    chosen_v: int
    degenerate: bool = False
    stabilized: bool = True


def extract_pairs(
    seqs: Union[LemmaSequence, Iterable[LemmaSequence]],
    mode: Mode,
    max_skip: int = 0,
    include_self_pairs: bool = False,
) -> PairCounts:
    """Unordered co-occurrence counts over one or many lemma sequences.

    Bigram mode pairs adjacent lemmas (``max_skip`` must be 0); skipgram mode
    pairs lemmas up to ``max_skip`` intervening positions apart.  Same-lemma
    pairs are excluded unless ``include_self_pairs`` is set.
    """
    if mode is Mode.BIGRAM and max_skip != 0:
        raise ValueError("bigram mode requires max_skip = 0")
    if max_skip < 0:
        raise ValueError("max_skip must be >= 0")
    if isinstance(seqs, LemmaSequence):
        seqs = [seqs]
    window = 1 if mode is Mode.BIGRAM else max_skip + 1
    counts: dict[Pair, int] = {}
    for seq in seqs:
        lemmas = seq.lemmas()
        n = len(lemmas)
        for i in range(n):
            for j in range(i + 1, min(i + window, n - 1) + 1):
                a, b = lemmas[i], lemmas[j]
                if a == b and not include_self_pairs:
                    continue
                pair = (a, b) if a <= b else (b, a)
                counts[pair] = counts.get(pair, 0) + 1
    return PairCounts(mode=mode, max_skip=max_skip, counts=counts)


def merge_counts(parts: Iterable[PairCounts]) -> PairCounts:
    """Combine per-document counts; order-independent."""
    parts = list(parts)
    if not parts:
        raise ValueError("merge_counts needs at least one PairCounts")
    mode, max_skip = parts[0].mode, parts[0].max_skip
    counts: dict[Pair, int] = {}
    for pc in parts:
        if pc.mode is not mode or pc.max_skip != max_skip:
            raise ValueError("cannot merge PairCounts with different modes")
        for pair, c in pc.counts.items():
            counts[pair] = counts.get(pair, 0) + c
    return PairCounts(mode=mode, max_skip=max_skip, counts=counts)


def drop_stopword_pairs(pc: PairCounts, stoplist: set[str]) -> PairCounts:
    """Remove pairs touching a stopword (the pair-first alternative order)."""
    kept = {p: c for p, c in pc.counts.items() if p[0] not in stoplist and p[1] not in stoplist}
    return PairCounts(mode=pc.mode, max_skip=pc.max_skip, counts=kept)


def _valid_skew_sample(values: list[int]) -> bool:
    return len(values) >= 3 and min(values) != max(values)


def threshold_scan(pc: PairCounts, epsilon: float = 0.05, window: int = 3) -> ThresholdScan:
    """Pick the smallest threshold after which skewness has stabilized.

    For each v = 1..max count, the skewness of {count : count >= v} is
    recorded until it becomes undefined.  The chosen v is the first whose
    next ``window`` skewness steps all change by at most
    ``epsilon * |skew(1)|``; if no threshold qualifies, the v with the
    smallest windowed variation is returned instead (``stabilized`` False).
    """
    if not pc.counts:
        raise ValueError("threshold_scan needs a non-empty PairCounts")
    if epsilon <= 0.0:
        raise ValueError("epsilon must be > 0")
    if window < 1:
        raise ValueError("window must be >= 1")

    all_counts = sorted(pc.counts.values())
    points: list[ScanPoint] = []
    for v in range(1, all_counts[-1] + 1):
        surviving = [c for c in all_counts if c >= v]
        if not _valid_skew_sample(surviving):
            break
        points.append(ScanPoint(v, stats.skewness(surviving), len(surviving)))

    if not points:
        return ThresholdScan(points=(), chosen_v=1, degenerate=True, stabilized=False)

    skews = [p.skew for p in points]
    n_points = len(points)
    reference = abs(skews[0])
    steps = [abs(skews[i + 1] - skews[i]) for i in range(n_points - 1)]

    for v in range(1, n_points - window + 1):
        # steps[v-1 + k] is the change from skew(v+k) to skew(v+k+1)
        if all(steps[v - 1 + k] <= epsilon * reference for k in range(window)):
            return ThresholdScan(points=tuple(points), chosen_v=v)

    if not steps:
        return ThresholdScan(points=tuple(points), chosen_v=1, stabilized=False)
    variation = [
        max(steps[v - 1 : min(v - 1 + window, len(steps))]) for v in range(1, n_points)
    ]
    chosen = 1 + min(range(len(variation)), key=lambda i: variation[i])
    return ThresholdScan(points=tuple(points), chosen_v=chosen, stabilized=False)


def apply_threshold(pc: PairCounts, v: int) -> PairCounts:
    """Retain pairs occurring at least ``v`` times."""
    if v < 1:
        raise ValueError("threshold must be >= 1")
    kept = {pair: c for pair, c in pc.counts.items() if c >= v}
    return PairCounts(mode=pc.mode, max_skip=pc.max_skip, counts=kept)


def sorted_pairs(pc: PairCounts) -> list[tuple[str, str, int]]:
    """Pairs sorted by count descending, then lexicographically."""
    return sorted(
        ((a, b, c) for (a, b), c in pc.counts.items()),
        key=lambda row: (-row[2], row[0], row[1]),
    )


def write_pair_counts_csv(pc: PairCounts, path) -> None:
    """CSV export ``word1,word2,count``, count-descending order."""
    with Path(path).open("w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["word1", "word2", "count"])
        writer.writerows(sorted_pairs(pc))
