from __future__ import annotations

import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from redlex.sentiment import (
    PolarityLexicon,
    SentimentSummary,
    ValenceLexicon,
    frequency_table,
    load_polarity_lexicon,
    load_valence_lexicon,
    score_tokens,
    summarize_document,
)
from redlex.textprep import LemmaItem, LemmaSequence, Upos


def seq(*lemmas):
    return LemmaSequence(doc_id="d", items=tuple(LemmaItem(w, Upos.NOUN) for w in lemmas))


VAL = ValenceLexicon(entries={"dolor": -3, "paz": 3, "daño": -2})
FALL = PolarityLexicon(positive=frozenset({"apoyo"}), negative=frozenset({"olvido"}))


def test_score_valence_lookup():
    assert score_tokens(seq("dolor"), VAL, FALL) == [("dolor", -3)]


def test_score_fallback_weight():
    assert score_tokens(seq("apoyo"), VAL, FALL, fallback_weight=1) == [("apoyo", 1)]
    assert score_tokens(seq("olvido"), VAL, FALL, fallback_weight=2) == [("olvido", -2)]


def test_score_unknown_omitted():
    assert score_tokens(seq("mesa"), VAL, FALL) == []


def test_score_valence_wins_over_fallback():
    both = ValenceLexicon(entries={"paz": 3})
    fall = PolarityLexicon(positive=frozenset({"paz"}), negative=frozenset())
    assert score_tokens(seq("paz"), both, fall, fallback_weight=1) == [("paz", 3)]


def test_fallback_weight_zero_rejected():
    with pytest.raises(ValueError):
        score_tokens(seq("apoyo"), VAL, FALL, fallback_weight=0)


def test_removing_fallback_never_increases_hits():
    s = seq("dolor", "apoyo", "olvido", "mesa")
    with_fallback = score_tokens(s, VAL, FALL)
    without = score_tokens(s, VAL, None)
    assert len(without) <= len(with_fallback)


def test_summarize_arithmetic():
    summary = summarize_document([-2, -2, 1], "d")
    assert summary.mean_neg == 2.0
    assert summary.mean_pos == 1.0
    assert summary.prop_pos == pytest.approx(1 / 3)
    assert summary.prop_neg == pytest.approx(2 / 3)
    assert summary.n_pos == 1 and summary.n_neg == 2


def test_summarize_empty_is_unscored():
    summary = summarize_document([], "d")
    assert not summary.scored
    assert summary.mean_pos is None and summary.mean_neg is None
    assert summary.prop_pos is None and summary.prop_neg is None


def test_summarize_one_sided():
    summary = summarize_document([2, 4], "d")
    assert summary.mean_neg is None
    assert summary.prop_neg == 0.0
    assert summary.prop_pos == 1.0


@given(st.lists(st.integers(min_value=-5, max_value=5).filter(lambda x: x != 0), min_size=1))
def test_props_sum_to_one(scores):
    summary = summarize_document(scores, "d")
    assert abs(summary.prop_pos + summary.prop_neg - 1.0) < 1e-12


@given(st.lists(st.integers(min_value=-5, max_value=5).filter(lambda x: x != 0), min_size=1))
def test_means_permutation_invariant(scores):
    shuffled = scores[:]
    random.Random(0).shuffle(shuffled)
    a = summarize_document(scores, "d")
    b = summarize_document(shuffled, "d")
    assert a.mean_pos == b.mean_pos and a.mean_neg == b.mean_neg


def test_summaries_match_exact_rationals():
    scores = [3, -4, -4, 1, 2, -5]
    summary = summarize_document(scores, "d")
    assert summary.mean_pos == float(Fraction(3 + 1 + 2, 3))
    assert summary.mean_neg == float(Fraction(4 + 4 + 5, 3))
    assert summary.prop_pos == float(Fraction(3, 6))


def test_frequency_table_basic():
    s = LemmaSequence(
        doc_id="d",
        items=(
            LemmaItem("a", Upos.NOUN),
            LemmaItem("a", Upos.NOUN),
            LemmaItem("b", Upos.VERB),
        ),
    )
    assert frequency_table([s], None, top_n=2) == [("a", 2), ("b", 1)]
    assert frequency_table([s], {Upos.VERB}, top_n=2) == [("b", 1)]


def test_frequency_table_tie_break_lexicographic():
    s = LemmaSequence(
        doc_id="d",
        items=(LemmaItem("z", Upos.NOUN), LemmaItem("a", Upos.NOUN)),
    )
    assert frequency_table([s], None, top_n=5) == [("a", 1), ("z", 1)]


def test_frequency_totals_match_multiset():
    s = seq("a", "b", "a", "c", "a")
    table = frequency_table([s], None, top_n=100)
    assert sum(count for _, count in table) == 5


def test_valence_lexicon_rejects_zero():
    with pytest.raises(ValueError):
        ValenceLexicon(entries={"x": 0})


def test_polarity_overlap_rejected():
    with pytest.raises(ValueError):
        PolarityLexicon(positive=frozenset({"x"}), negative=frozenset({"x"}))


def test_load_valence(tmp_path):
    path = tmp_path / "val.tsv"
    path.write_text("# c\npaz\t3\ndolor\t-3\n", encoding="utf-8")
    lex = load_valence_lexicon(path)
    assert lex.entries == {"paz": 3, "dolor": -3}


def test_load_valence_rejects_out_of_range(tmp_path):
    path = tmp_path / "val.tsv"
    path.write_text("x\t9\n", encoding="utf-8")
    with pytest.raises(ValueError):
        load_valence_lexicon(path)


def test_load_polarity(tmp_path):
    pos = tmp_path / "pos.txt"
    neg = tmp_path / "neg.txt"
    pos.write_text("apoyo\n", encoding="utf-8")
    neg.write_text("olvido\n# c\n", encoding="utf-8")
    lex = load_polarity_lexicon(pos, neg)
    assert lex.positive == {"apoyo"} and lex.negative == {"olvido"}


def test_summary_dataclass_scored_property():
    s = SentimentSummary("d", 0, 0, None, None, None, None)
    assert not s.scored
