from __future__ import annotations

import pytest

from redlex.corpus import (
    Corpus,
    CorpusError,
    Role,
    Subcase,
    filter_corpus,
    load_corpus,
    role_analysis_eligibility,
    save_corpus,
)


def record(i, subcase="Huila", role="victima", text="la verdad plena"):
    return {"id": f"d{i}", "title": f"t{i}", "subcase": subcase, "role": role, "text": text}


def test_load_two_records(write_corpus):
    corpus = load_corpus(write_corpus([record(1), record(2, subcase="Meta")]))
    assert len(corpus) == 2
    assert corpus.documents[0].subcase is Subcase.HUILA
    assert corpus.documents[1].subcase is Subcase.META


def test_missing_role_defaults_to_unknown(write_corpus):
    rec = record(1)
    del rec["role"]
    corpus = load_corpus(write_corpus([rec]))
    assert corpus.documents[0].role is Role.UNKNOWN


def test_null_subcase_is_unassigned(write_corpus):
    corpus = load_corpus(write_corpus([record(1, subcase=None)]))
    assert corpus.documents[0].subcase is Subcase.UNASSIGNED


def test_subcase_wire_forms(write_corpus):
    corpus = load_corpus(
        write_corpus(
            [
                record(1, subcase="Costa Caribe"),
                record(2, subcase="costacaribe"),
                record(3, subcase="Norte de Santander"),
            ]
        )
    )
    assert corpus.documents[0].subcase is Subcase.COSTA_CARIBE
    assert corpus.documents[1].subcase is Subcase.COSTA_CARIBE
    assert corpus.documents[2].subcase is Subcase.NORTE_DE_SANTANDER


def test_role_accent_accepted(write_corpus):
    corpus = load_corpus(write_corpus([record(1, role="víctima"), record(2, role="compareciente")]))
    assert corpus.documents[0].role is Role.VICTIM
    assert corpus.documents[1].role is Role.APPEARER


def test_empty_text_flagged_skipped(write_corpus):
    corpus = load_corpus(write_corpus([record(1, text="")]))
    assert corpus.documents[0].skipped


def test_duplicate_id_rejected(write_corpus):
    with pytest.raises(CorpusError, match="duplicate"):
        load_corpus(write_corpus([record(1), record(1)]))


def test_malformed_line_reports_lineno(tmp_path):
    path = tmp_path / "bad.jsonl"
    path.write_text('{"id": "a", "text": "x"}\n{oops\n', encoding="utf-8")
    with pytest.raises(CorpusError, match="bad.jsonl:2"):
        load_corpus(path)


def test_unknown_subcase_rejected(write_corpus):
    with pytest.raises(CorpusError, match="subcase"):
        load_corpus(write_corpus([record(1, subcase="Atlantis")]))


def test_missing_path():
    with pytest.raises(CorpusError, match="does not exist"):
        load_corpus("/nonexistent/corpus.jsonl")


def test_directory_of_files(write_corpus, tmp_path):
    write_corpus([record(1)], name="a.jsonl")
    write_corpus([record(2)], name="b.jsonl")
    corpus = load_corpus(tmp_path)
    assert [d.id for d in corpus] == ["d1", "d2"]


def test_filter_preserves_order_and_criteria(write_corpus):
    corpus = load_corpus(
        write_corpus(
            [
                record(1, subcase="Huila", role="victima"),
                record(2, subcase="Huila", role="compareciente"),
                record(3, subcase="Meta", role="victima"),
            ]
        )
    )
    filtered = filter_corpus(corpus, subcase=Subcase.HUILA)
    assert [d.id for d in filtered] == ["d1", "d2"]
    both = filter_corpus(corpus, subcase=Subcase.HUILA, role=Role.VICTIM)
    assert [d.id for d in both] == ["d1"]


def test_filter_on_empty_corpus():
    empty = Corpus(documents=())
    assert len(filter_corpus(empty, role=Role.VICTIM)) == 0


def test_filter_idempotent(mini_corpus_path):
    corpus = load_corpus(mini_corpus_path)
    once = filter_corpus(corpus, subcase=Subcase.CASANARE, role=Role.VICTIM)
    twice = filter_corpus(once, subcase=Subcase.CASANARE, role=Role.VICTIM)
    assert once.documents == twice.documents


def test_subcase_count_sum_bounded(mini_corpus_path):
    corpus = load_corpus(mini_corpus_path)
    per_subcase = sum(
        corpus.count(subcase=sc, role=role)
        for sc in Subcase
        for role in (Role.VICTIM, Role.APPEARER)
    )
    assert per_subcase <= len(corpus)


def test_roundtrip(mini_corpus_path, tmp_path):
    corpus = load_corpus(mini_corpus_path)
    out = tmp_path / "roundtrip.jsonl"
    save_corpus(corpus, out)
    again = load_corpus(out)
    assert corpus.documents == again.documents
    # and byte-stable re-serialization
    out2 = tmp_path / "roundtrip2.jsonl"
    save_corpus(again, out2)
    assert out.read_bytes() == out2.read_bytes()


def test_eligibility_threshold(write_corpus):
    records = [record(i, subcase="Huila", role="victima") for i in range(3)]
    records += [record(10, subcase="Huila", role="compareciente")]
    records += [record(20, subcase="Meta", role=None)]
    corpus = load_corpus(write_corpus(records))
    rows = {(sc, role): ok for sc, role, ok in role_analysis_eligibility(corpus, min_docs=3)}
    assert rows[(Subcase.HUILA, Role.VICTIM)] is True
    assert rows[(Subcase.HUILA, Role.APPEARER)] is False
    assert rows[(Subcase.META, Role.VICTIM)] is False  # unknown role does not count


def test_eligibility_min_docs_one(write_corpus):
    corpus = load_corpus(write_corpus([record(1, subcase="Casanare", role="victima")]))
    rows = {(sc, r): ok for sc, r, ok in role_analysis_eligibility(corpus, min_docs=1)}
    assert rows[(Subcase.CASANARE, Role.VICTIM)] is True
    assert sum(rows.values()) == 1  # every other cell is empty


def test_eligibility_rejects_bad_min_docs(mini_corpus_path):
    with pytest.raises(ValueError):
        role_analysis_eligibility(load_corpus(mini_corpus_path), min_docs=0)


def test_mini_corpus_mirrors_exclusion_pattern(mini_corpus_path):
    """The bundled corpus keeps thin cells that a role split must exclude."""
    corpus = load_corpus(mini_corpus_path)
    rows = {(sc, r): ok for sc, r, ok in role_analysis_eligibility(corpus)}
    assert rows[(Subcase.META, Role.APPEARER)] is False
    assert rows[(Subcase.ANTIOQUIA, Role.APPEARER)] is False
    assert rows[(Subcase.NORTE_DE_SANTANDER, Role.VICTIM)] is False
    assert rows[(Subcase.HUILA, Role.VICTIM)] is True
