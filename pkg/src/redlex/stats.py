"""Sample skewness, normality and paired-location tests, and the test cascade.

The cascade mirrors common practice for paired sentiment comparisons: check
normality of the per-document differences with Shapiro-Wilk, then run either
the paired t-test (normality holds) or the Wilcoxon signed-rank test
(normality violated), both as one-sided contrasts of "negative exceeds
positive".

All tests are implemented here rather than delegated, so that the test suite
can check them against independent reference implementations:

* Shapiro-Wilk follows the Royston (1995) approximation (AS R94): normal
  order-statistic weights, W as a squared correlation, and a normalizing
  transformation of W whose parameters depend on the sample size band.
* The Wilcoxon signed-rank p-value is exact (full enumeration of sign
  assignments, ties handled through average ranks) up to m = 25 nonzero
  differences, and a tie- and continuity-corrected normal approximation
  beyond that.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Optional, Sequence

import numpy as np
from scipy import special


class Method(str, Enum):
    SHAPIRO_WILK = "shapiro_wilk"
    PAIRED_T = "paired_t"
    WILCOXON = "wilcoxon_signed_rank"


class Alternative(str, Enum):
    GREATER = "greater"
    LESS = "less"
    TWO_SIDED = "two_sided"


class CascadeMetric(str, Enum):
    MEAN_MAGNITUDE = "mean_magnitude"
    PROPORTION = "proportion"


@dataclass(frozen=True)
class TestResult:
    statistic: float
    p_value: float
    method: Method
    alternative: Alternative
    n: int


@dataclass(frozen=True)
class CascadeDecision:
    """Outcome of the normality-gated paired comparison.

    ``normality`` is None when the difference vector is constant and the
    Shapiro-Wilk test cannot run (a point mass is trivially non-normal, so
    the Wilcoxon branch is taken).  ``degenerate`` marks an all-zero
    difference vector, where no test applies and the null stands.
    """

    normality: Optional[TestResult]
    main: Optional[TestResult]
    reject_null: bool
    alpha: float
    n: int
    degenerate: bool = False

    @property
    def branch(self) -> Optional[Method]:
        return self.main.method if self.main is not None else None


def skewness(x: Sequence[float]) -> float:
    """Adjusted Fisher-Pearson skewness coefficient.

    n/((n-1)(n-2)) * sum(((x_i - mean)/s)^3) with s the sample (n-1
    denominator) standard deviation.  Requires n >= 3 and a non-constant
    sample.
    """
    a = np.asarray(x, dtype=float)
    n = a.size
    if n < 3:
        raise ValueError("skewness needs at least 3 observations")
    sd = a.std(ddof=1)
    if sd == 0.0:
        raise ValueError("skewness undefined for a zero-variance sample")
    z = (a - a.mean()) / sd
    return float(n / ((n - 1) * (n - 2)) * np.sum(z**3))


# --- Shapiro-Wilk (Royston 1995 approximation) ------------------------------

# Polynomial coefficients, ascending powers.
_SW_C1 = (0.0, 0.221157, -0.147981, -2.071190, 4.434685, -2.706056)
_SW_C2 = (0.0, 0.042981, -0.293762, -1.752461, 5.682633, -3.582633)
_SW_MU_SMALL = (0.5440, -0.39978, 0.025054, -0.0006714)     # n in 4..11, in n
_SW_SIG_SMALL = (1.3822, -0.77857, 0.062767, -0.0020322)
_SW_MU_LARGE = (-1.5861, -0.31082, -0.083751, 0.0038915)    # n >= 12, in ln n
_SW_SIG_LARGE = (-0.4803, -0.082676, 0.0030302)
_SW_GAMMA = (-2.273, 0.459)


def _poly(coefs: tuple[float, ...], x: float) -> float:
    return float(sum(c * x**k for k, c in enumerate(coefs)))


def _shapiro_weights(n: int) -> np.ndarray:
    """Approximate best linear unbiased weights for the W statistic."""
    if n == 3:
        return np.array([-math.sqrt(0.5), 0.0, math.sqrt(0.5)])
    m = special.ndtri((np.arange(1, n + 1) - 0.375) / (n + 0.25))
    ssq = float(np.sum(m * m))
    rsn = 1.0 / math.sqrt(n)
    a = np.empty(n)
    a_n = _poly(_SW_C1, rsn) + m[-1] / math.sqrt(ssq)
    if n > 5:
        a_n1 = _poly(_SW_C2, rsn) + m[-2] / math.sqrt(ssq)
        phi = (ssq - 2.0 * m[-1] ** 2 - 2.0 * m[-2] ** 2) / (
            1.0 - 2.0 * a_n**2 - 2.0 * a_n1**2
        )
        a[2:-2] = m[2:-2] / math.sqrt(phi)
        a[-2], a[1] = a_n1, -a_n1
    else:
        phi = (ssq - 2.0 * m[-1] ** 2) / (1.0 - 2.0 * a_n**2)
        a[1:-1] = m[1:-1] / math.sqrt(phi)
    a[-1], a[0] = a_n, -a_n
    return a


def shapiro_wilk(x: Sequence[float]) -> TestResult:
    """Shapiro-Wilk normality test for 3 <= n <= 5000."""
    a = np.sort(np.asarray(x, dtype=float))
    n = a.size
    if n < 3 or n > 5000:
        raise ValueError("shapiro_wilk requires 3 <= n <= 5000")
    if a[-1] == a[0]:
        raise ValueError("shapiro_wilk undefined for a constant sample")

    weights = _shapiro_weights(n)
    centered = a - a.mean()
    w = float(np.dot(weights, a) ** 2 / np.dot(centered, centered))
    w = min(w, 1.0)

    if n == 3:
        # Exact small-sample distribution.
        p = (6.0 / math.pi) * (math.asin(math.sqrt(w)) - math.asin(math.sqrt(0.75)))
        p = min(max(p, 0.0), 1.0)
        return TestResult(w, p, Method.SHAPIRO_WILK, Alternative.TWO_SIDED, n)

    if w == 1.0:
        return TestResult(w, 1.0, Method.SHAPIRO_WILK, Alternative.TWO_SIDED, n)

    if n <= 11:
        gamma = _poly(_SW_GAMMA, float(n))
        arg = gamma - math.log1p(-w)
        if arg <= 0.0:
            return TestResult(w, 0.0, Method.SHAPIRO_WILK, Alternative.TWO_SIDED, n)
        y = -math.log(arg)
        mu = _poly(_SW_MU_SMALL, float(n))
        sigma = math.exp(_poly(_SW_SIG_SMALL, float(n)))
    else:
        y = math.log1p(-w)
        ln_n = math.log(n)
        mu = _poly(_SW_MU_LARGE, ln_n)
        sigma = math.exp(_poly(_SW_SIG_LARGE, ln_n))

    p = float(special.ndtr(-(y - mu) / sigma))
    return TestResult(w, p, Method.SHAPIRO_WILK, Alternative.TWO_SIDED, n)


# --- Paired t ----------------------------------------------------------------


def _student_t_sf(t: float, df: int) -> float:
    """Upper tail P(T >= t) via the regularized incomplete beta function."""
    ib = float(special.betainc(0.5 * df, 0.5, df / (df + t * t)))
    return 0.5 * ib if t >= 0 else 1.0 - 0.5 * ib


def paired_t_test(
    x: Sequence[float],
    y: Sequence[float],
    alternative: Alternative = Alternative.GREATER,
) -> TestResult:
    """One-sample t-test on the paired differences d = x - y."""
    dx = np.asarray(x, dtype=float)
    dy = np.asarray(y, dtype=float)
    if dx.shape != dy.shape:
        raise ValueError("paired samples must have equal length")
    d = dx - dy
    n = d.size
    if n < 2:
        raise ValueError("paired_t_test needs at least 2 pairs")
    sd = d.std(ddof=1)
    if sd == 0.0:
        raise ValueError("paired_t_test undefined for identical differences")
    t = float(d.mean() / (sd / math.sqrt(n)))
    df = n - 1
    if alternative is Alternative.GREATER:
        p = _student_t_sf(t, df)
    elif alternative is Alternative.LESS:
        p = _student_t_sf(-t, df)
    else:
        p = min(1.0, 2.0 * _student_t_sf(abs(t), df))
    return TestResult(t, p, Method.PAIRED_T, alternative, n)


# --- Wilcoxon signed rank -----------------------------------------------------


def _average_ranks(values: np.ndarray) -> np.ndarray:
    """Ranks 1..n with ties receiving the average of their rank range."""
    order = np.argsort(values, kind="stable")
    ranks = np.empty(values.size, dtype=float)
    i = 0
    while i < values.size:
        j = i
        while j + 1 < values.size and values[order[j + 1]] == values[order[i]]:
            j += 1
        ranks[order[i : j + 1]] = 0.5 * (i + j) + 1.0
        i = j + 1
    return ranks


def _signed_rank_distribution(doubled_ranks: np.ndarray) -> np.ndarray:
    """Counts of each achievable doubled rank sum over all 2^m sign patterns."""
    total = int(doubled_ranks.sum())
    counts = np.zeros(total + 1, dtype=np.int64)
    counts[0] = 1
    upto = 0
    for r in doubled_ranks:
        r = int(r)
        upto += r
        counts[r : upto + 1] += counts[0 : upto - r + 1]
    return counts


def _wilcoxon_exact_p(v: float, ranks: np.ndarray, alternative: Alternative) -> float:
    m = ranks.size
    doubled = np.rint(2.0 * ranks).astype(np.int64)
    counts = _signed_rank_distribution(doubled)
    v2 = int(round(2.0 * v))
    denom = float(2**m)
    greater = float(counts[v2:].sum()) / denom
    less = float(counts[: v2 + 1].sum()) / denom
    if alternative is Alternative.GREATER:
        return greater
    if alternative is Alternative.LESS:
        return less
    return min(1.0, 2.0 * min(greater, less))


def _wilcoxon_approx_p(v: float, ranks: np.ndarray, alternative: Alternative) -> float:
    m = ranks.size
    mean = m * (m + 1) / 4.0
    var = m * (m + 1) * (2 * m + 1) / 24.0
    _, tie_counts = np.unique(ranks, return_counts=True)
    var -= float(np.sum(tie_counts**3 - tie_counts)) / 48.0
    sd = math.sqrt(var)
    if alternative is Alternative.GREATER:
        return float(special.ndtr(-(v - mean - 0.5) / sd))
    if alternative is Alternative.LESS:
        return float(special.ndtr((v - mean + 0.5) / sd))
    z = (v - mean - 0.5 * math.copysign(1.0, v - mean)) / sd if v != mean else 0.0
    return min(1.0, 2.0 * float(special.ndtr(-abs(z))))


#: Largest number of nonzero differences handled by full enumeration.
EXACT_LIMIT = 25


def wilcoxon_signed_rank(
    x: Sequence[float],
    y: Sequence[float],
    alternative: Alternative = Alternative.GREATER,
    method: str = "auto",
) -> TestResult:
    """Wilcoxon signed-rank test on paired samples.

    Zero differences are dropped; ties in |d| get average ranks.  The
    statistic V is the rank sum of positive differences.  ``method`` is
    "auto" (exact up to m = 25, normal approximation beyond), "exact", or
    "approx".
    """
    dx = np.asarray(x, dtype=float)
    dy = np.asarray(y, dtype=float)
    if dx.shape != dy.shape:
        raise ValueError("paired samples must have equal length")
    d = dx - dy
    d = d[d != 0.0]
    m = d.size
    if m == 0:
        raise ValueError("wilcoxon_signed_rank needs at least one nonzero difference")
    if method not in ("auto", "exact", "approx"):
        raise ValueError(f"unknown method {method!r}")

    ranks = _average_ranks(np.abs(d))
    v = float(ranks[d > 0].sum())
    use_exact = method == "exact" or (method == "auto" and m <= EXACT_LIMIT)
    if use_exact:
        p = _wilcoxon_exact_p(v, ranks, alternative)
    else:
        p = _wilcoxon_approx_p(v, ranks, alternative)
    return TestResult(v, p, Method.WILCOXON, alternative, m)


# --- Cascade -------------------------------------------------------------------


def sentiment_cascade(summaries, metric: CascadeMetric, alpha: float = 0.05) -> CascadeDecision:
    """Normality-gated one-sided comparison of negative vs. positive sentiment.

    Builds per-document paired vectors from the scored summaries (missing
    side of a one-sided document counts as 0), then tests
    H1: negative > positive.  Shapiro-Wilk on the differences at ``alpha``
    decides between the paired t-test and the Wilcoxon signed-rank test.
    """
    if not 0.0 < alpha < 1.0:
        raise ValueError("alpha must be in (0, 1)")
    scored = [s for s in summaries if s.scored]
    if len(scored) < 3:
        raise ValueError("sentiment_cascade needs at least 3 scored documents")

    if metric is CascadeMetric.MEAN_MAGNITUDE:
        neg = np.array([s.mean_neg if s.mean_neg is not None else 0.0 for s in scored])
        pos = np.array([s.mean_pos if s.mean_pos is not None else 0.0 for s in scored])
    elif metric is CascadeMetric.PROPORTION:
        neg = np.array([s.prop_neg for s in scored], dtype=float)
        pos = np.array([s.prop_pos for s in scored], dtype=float)
    else:
        raise ValueError(f"unknown metric {metric!r}")

    d = neg - pos
    n = d.size
    if np.all(d == 0.0):
        return CascadeDecision(None, None, False, alpha, n, degenerate=True)

    if d.std(ddof=1) == 0.0:
        # Constant nonzero differences: the normality gate cannot run, and a
        # point mass is trivially non-normal, so take the Wilcoxon branch.
        normality = None
        main = wilcoxon_signed_rank(neg, pos, Alternative.GREATER)
    else:
        normality = shapiro_wilk(d)
        if normality.p_value > alpha:
            main = paired_t_test(neg, pos, Alternative.GREATER)
        else:
            main = wilcoxon_signed_rank(neg, pos, Alternative.GREATER)
    return CascadeDecision(normality, main, main.p_value < alpha, alpha, n)
