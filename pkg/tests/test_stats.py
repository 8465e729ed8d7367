from __future__ import annotations

import math
from fractions import Fraction

import numpy as np
import pytest
import scipy.stats
from hypothesis import given
from hypothesis import strategies as st

from oracles import skewness_direct, wilcoxon_enumerate
from redlex.sentiment import summarize_document
from redlex.stats import (
    Alternative,
    CascadeMetric,
    Method,
    paired_t_test,
    sentiment_cascade,
    shapiro_wilk,
    skewness,
    wilcoxon_signed_rank,
)

# --- skewness -------------------------------------------------------------


def test_skewness_symmetric_zero():
    assert skewness([1, 2, 3]) == pytest.approx(0.0, abs=1e-12)


def test_skewness_against_direct_formula():
    # x̄ = 4, sample sd = sqrt(19); frozen from the direct evaluation
    assert skewness([1, 2, 9]) == pytest.approx(1.6300591617118863, abs=1e-12)
    assert skewness([1, 2, 9]) == pytest.approx(skewness_direct([1, 2, 9]), abs=1e-12)


def test_skewness_errors():
    with pytest.raises(ValueError):
        skewness([1, 2])
    with pytest.raises(ValueError):
        skewness([5, 5, 5])


def test_skewness_random_samples_match_oracle():
    rng = np.random.default_rng(7)
    for _ in range(50):
        x = rng.normal(size=rng.integers(3, 40)) * rng.uniform(0.1, 10)
        if np.std(x, ddof=1) == 0:
            continue
        assert skewness(x) == pytest.approx(skewness_direct(list(x)), rel=1e-9)


@given(
    st.lists(st.floats(-100, 100), min_size=4, max_size=30),
    st.floats(0.1, 50),
    st.floats(-100, 100),
)
def test_skewness_affine_invariance(xs, a, b):
    if np.std(xs, ddof=1) < 1e-6:
        return
    base = skewness(xs)
    scaled = skewness([a * x + b for x in xs])
    assert scaled == pytest.approx(base, rel=1e-6, abs=1e-9)
    negated = skewness([-x for x in xs])
    assert negated == pytest.approx(-base, rel=1e-6, abs=1e-9)


# --- Shapiro-Wilk ------------------------------------------------------------


def test_shapiro_near_normal_quantiles():
    n = 20
    x = scipy.stats.norm.ppf((np.arange(1, n + 1) - 0.5) / n)
    result = shapiro_wilk(x)
    assert result.statistic > 0.99
    assert result.method is Method.SHAPIRO_WILK


def test_shapiro_bimodal_rejects():
    rng = np.random.default_rng(3)
    x = np.concatenate([rng.normal(-4, 0.25, 15), rng.normal(4, 0.25, 15)])
    assert shapiro_wilk(x).p_value < 0.01


def test_shapiro_errors():
    with pytest.raises(ValueError):
        shapiro_wilk([1.0, 2.0])
    with pytest.raises(ValueError):
        shapiro_wilk([2.0, 2.0, 2.0])


def test_shapiro_matches_reference_implementation():
    rng = np.random.default_rng(11)
    for n in (3, 4, 5, 6, 10, 11, 12, 30, 100, 500):
        for _ in range(5):
            x = rng.normal(size=n) + rng.uniform(-1, 1)
            mine = shapiro_wilk(x)
            ref = scipy.stats.shapiro(x)
            assert mine.statistic == pytest.approx(ref.statistic, abs=1e-6)
            assert mine.p_value == pytest.approx(ref.pvalue, abs=1e-5)


# --- paired t ------------------------------------------------------------------


def test_paired_t_greater_example():
    result = paired_t_test([1, 2, 3], [0, 0, 0], Alternative.GREATER)
    assert result.statistic == pytest.approx(2 * math.sqrt(3), rel=1e-12)
    assert result.p_value == pytest.approx(0.037089950113724277, abs=1e-10)
    assert result.n == 3


def test_paired_t_zero_mean_gives_half():
    result = paired_t_test([1, -1, 2, -2], [0, 0, 0, 0], Alternative.GREATER)
    assert result.statistic == 0.0
    assert result.p_value == pytest.approx(0.5, abs=1e-12)


def test_paired_t_identical_rejected():
    with pytest.raises(ValueError):
        paired_t_test([1, 2, 3], [1, 2, 3])
    with pytest.raises(ValueError):
        paired_t_test([2, 3, 4], [1, 2, 3])  # constant nonzero differences


def test_paired_t_length_mismatch():
    with pytest.raises(ValueError):
        paired_t_test([1, 2], [1, 2, 3])


def test_paired_t_matches_scipy():
    rng = np.random.default_rng(5)
    for _ in range(50):
        n = int(rng.integers(2, 30))
        x = rng.normal(size=n)
        y = rng.normal(size=n)
        if np.std(x - y, ddof=1) == 0:
            continue
        for alt, scipy_alt in (
            (Alternative.GREATER, "greater"),
            (Alternative.LESS, "less"),
            (Alternative.TWO_SIDED, "two-sided"),
        ):
            mine = paired_t_test(x, y, alt)
            ref = scipy.stats.ttest_rel(x, y, alternative=scipy_alt)
            assert mine.statistic == pytest.approx(ref.statistic, rel=1e-12)
            assert mine.p_value == pytest.approx(ref.pvalue, abs=1e-10)


def test_paired_t_one_sided_p_sums_to_one():
    rng = np.random.default_rng(9)
    for _ in range(20):
        n = int(rng.integers(2, 20))
        x = rng.normal(size=n)
        y = rng.normal(size=n)
        if np.std(x - y, ddof=1) == 0:
            continue
        greater = paired_t_test(x, y, Alternative.GREATER).p_value
        less = paired_t_test(x, y, Alternative.LESS).p_value
        assert abs(greater + less - 1.0) < 1e-10


# --- Wilcoxon -----------------------------------------------------------------


def test_wilcoxon_exact_examples():
    result = wilcoxon_signed_rank([1, 2, 3], [0, 0, 0], Alternative.GREATER)
    assert result.statistic == 6.0
    assert result.p_value == 0.125  # 1/8, exactly representable
    result = wilcoxon_signed_rank([-1, -2, -3], [0, 0, 0], Alternative.GREATER)
    assert result.statistic == 0.0
    assert result.p_value == 1.0


def test_wilcoxon_all_zero_rejected():
    with pytest.raises(ValueError):
        wilcoxon_signed_rank([1, 2, 3], [1, 2, 3])


def test_wilcoxon_zeros_dropped():
    result = wilcoxon_signed_rank([1, 2, 5], [1, 2, 0], Alternative.GREATER)
    assert result.n == 1
    assert result.statistic == 1.0
    assert result.p_value == 0.5


def test_wilcoxon_exact_matches_enumeration_with_ties():
    rng = np.random.default_rng(13)
    for _ in range(60):
        m = int(rng.integers(1, 11))
        d = rng.integers(-4, 5, size=m).astype(float)
        d = d[d != 0]
        if d.size == 0:
            continue
        x = d
        y = np.zeros_like(d)
        for alt, name in (
            (Alternative.GREATER, "greater"),
            (Alternative.LESS, "less"),
            (Alternative.TWO_SIDED, "two_sided"),
        ):
            mine = wilcoxon_signed_rank(x, y, alt)
            v, p = wilcoxon_enumerate(list(d), name)
            assert mine.statistic == v
            assert Fraction(mine.p_value) == p  # dyadic, so exact equality holds


def test_wilcoxon_v_complement():
    rng = np.random.default_rng(17)
    for _ in range(30):
        m = int(rng.integers(1, 20))
        x = rng.normal(size=m)
        y = rng.normal(size=m)
        d = x - y
        d = d[d != 0]
        if d.size == 0:
            continue
        v1 = wilcoxon_signed_rank(x, y).statistic
        v2 = wilcoxon_signed_rank(y, x).statistic
        m_eff = d.size
        assert v1 + v2 == pytest.approx(m_eff * (m_eff + 1) / 2)


def test_wilcoxon_exact_vs_approx_agree():
    rng = np.random.default_rng(23)
    for m in range(20, 26):
        for _ in range(5):
            x = rng.normal(size=m) + 0.3
            y = np.zeros(m)
            exact = wilcoxon_signed_rank(x, y, Alternative.GREATER, method="exact").p_value
            approx = wilcoxon_signed_rank(x, y, Alternative.GREATER, method="approx").p_value
            assert abs(exact - approx) < 0.02


def test_wilcoxon_approx_matches_scipy():
    rng = np.random.default_rng(29)
    for _ in range(20):
        m = int(rng.integers(30, 60))
        x = rng.normal(size=m) + 0.2
        y = np.zeros(m)
        mine = wilcoxon_signed_rank(x, y, Alternative.GREATER, method="approx")
        ref = scipy.stats.wilcoxon(
            x, y, alternative="greater", correction=True, mode="approx"
        )
        assert mine.statistic == ref.statistic
        assert mine.p_value == pytest.approx(ref.pvalue, abs=1e-10)


# --- cascade -----------------------------------------------------------------


def summaries_from_scores(score_lists):
    return [summarize_document(scores, f"d{i}") for i, scores in enumerate(score_lists)]


def test_cascade_degenerate_all_equal():
    # every document has equal positive and negative magnitude and counts
    summaries = summaries_from_scores([[2, -2]] * 5)
    decision = sentiment_cascade(summaries, CascadeMetric.MEAN_MAGNITUDE)
    assert decision.degenerate
    assert decision.reject_null is False
    assert decision.normality is None and decision.main is None


def test_cascade_needs_three_scored():
    summaries = summaries_from_scores([[1], [], []])
    with pytest.raises(ValueError):
        sentiment_cascade(summaries, CascadeMetric.MEAN_MAGNITUDE)


def test_cascade_skewed_negative_dominance_takes_wilcoxon():
    # heavy-tailed positive differences: Shapiro-Wilk rejects, Wilcoxon fires
    score_lists = []
    for i in range(20):
        neg_mag = 2 if i < 16 else 5  # a few extreme documents skew the diffs
        score_lists.append([-neg_mag] * 4 + [1])
    decision = sentiment_cascade(summaries_from_scores(score_lists), CascadeMetric.MEAN_MAGNITUDE)
    assert decision.normality is not None and decision.normality.p_value <= 0.05
    assert decision.main.method is Method.WILCOXON
    assert decision.reject_null and decision.main.p_value < 0.01


def test_cascade_normal_differences_take_paired_t():
    # differences spread like normal quantiles: the t branch is selected
    quantiles = scipy.stats.norm.ppf((np.arange(1, 21) - 0.5) / 20)
    score_lists = []
    for q in quantiles:
        target = 2.0 + 0.25 * q  # mean_neg target; mean_pos fixed at 1
        numerator = int(round(target * 8))  # 8 negative hits summing to this
        base, extra = divmod(numerator, 8)
        score_lists.append([-(base + 1)] * extra + [-base] * (8 - extra) + [1, 1])
    decision = sentiment_cascade(summaries_from_scores(score_lists), CascadeMetric.MEAN_MAGNITUDE)
    assert decision.normality is not None and decision.normality.p_value > 0.05
    assert decision.main.method is Method.PAIRED_T
    assert decision.reject_null and decision.main.p_value < 0.01


def test_cascade_proportion_metric():
    # two thirds of sentiment-bearing words negative in every document, with
    # mild variation so the difference vector is not constant
    score_lists = [[-1] * (6 + i % 3) + [1] * 3 for i in range(12)]
    decision = sentiment_cascade(summaries_from_scores(score_lists), CascadeMetric.PROPORTION)
    assert decision.main is not None
    assert decision.reject_null


def test_cascade_alpha_validation():
    summaries = summaries_from_scores([[1, -2]] * 5)
    with pytest.raises(ValueError):
        sentiment_cascade(summaries, CascadeMetric.PROPORTION, alpha=0.0)


def test_cascade_branch_consistent_with_gate():
    rng = np.random.default_rng(37)
    for trial in range(10):
        score_lists = []
        for _ in range(15):
            n_neg = int(rng.integers(1, 6))
            n_pos = int(rng.integers(1, 6))
            score_lists.append(
                [-int(rng.integers(1, 6)) for _ in range(n_neg)]
                + [int(rng.integers(1, 6)) for _ in range(n_pos)]
            )
        decision = sentiment_cascade(summaries_from_scores(score_lists), CascadeMetric.MEAN_MAGNITUDE)
        if decision.degenerate or decision.normality is None:
            continue
        expected = (
            Method.PAIRED_T if decision.normality.p_value > decision.alpha else Method.WILCOXON
        )
        assert decision.main.method is expected
