#!/usr/bin/env python3
"""The hypothesis-test building blocks and the normality-gated cascade.

Two synthetic sentiment corpora show both branches of the cascade: one with
normal-looking paired differences (paired t branch) and one heavy-tailed
(Wilcoxon branch).
"""

import numpy as np

from redlex.sentiment import summarize_document
from redlex.stats import (
    Alternative,
    CascadeMetric,
    paired_t_test,
    sentiment_cascade,
    shapiro_wilk,
    skewness,
    wilcoxon_signed_rank,
)

print("building blocks")
print(f"  skewness of [1, 2, 9]: {skewness([1, 2, 9]):.4f} (right-skewed)")

rng = np.random.default_rng(42)
normal_sample = rng.normal(size=40)
sw = shapiro_wilk(normal_sample)
print(f"  Shapiro-Wilk on N(0,1) draws: W={sw.statistic:.4f}, p={sw.p_value:.3f}")

t = paired_t_test([2.1, 2.4, 2.0, 2.6], [1.0, 1.2, 0.9, 1.4], Alternative.GREATER)
print(f"  paired t (greater): t={t.statistic:.3f}, p={t.p_value:.4f}")

w = wilcoxon_signed_rank([1, 2, 3], [0, 0, 0], Alternative.GREATER)
print(f"  Wilcoxon exact on d=[1,2,3]: V={w.statistic:.0f}, p={w.p_value} (= 1/8)")

# Cascade, branch 1: near-normal differences -> paired t.
print("\ncascade on near-normal differences")
docs = []
for i, q in enumerate(np.linspace(-1.8, 1.8, 20)):
    magnitude = int(round((2.0 + 0.3 * q) * 6))
    base, extra = divmod(magnitude, 6)
    docs.append(summarize_document([-(base + 1)] * extra + [-base] * (6 - extra) + [1], f"n{i}"))
decision = sentiment_cascade(docs, CascadeMetric.MEAN_MAGNITUDE)
print(f"  Shapiro-Wilk p = {decision.normality.p_value:.3f} -> branch {decision.branch.value}")
print(f"  p = {decision.main.p_value:.2e}, reject H0: {decision.reject_null}")

# Cascade, branch 2: heavy-tailed differences -> Wilcoxon.
print("\ncascade on heavy-tailed differences")
docs = [
    summarize_document([-2] * 4 + [1] if i < 16 else [-5] * 4 + [1], f"s{i}") for i in range(20)
]
decision = sentiment_cascade(docs, CascadeMetric.MEAN_MAGNITUDE)
print(f"  Shapiro-Wilk p = {decision.normality.p_value:.2e} -> branch {decision.branch.value}")
print(f"  p = {decision.main.p_value:.2e}, reject H0: {decision.reject_null}")
