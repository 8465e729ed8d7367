from __future__ import annotations

import json

import pytest

from redlex.corpus import Role, Subcase, load_corpus
from redlex.ngram import Mode
from redlex.pipeline import (
    AnalysisConfig,
    ReportBundle,
    Scope,
    enumerate_scopes,
    export_bundle,
    run_all,
    run_scope,
    run_scope_sentiment,
    scope_seed,
    scope_slug,
)


def config_for(path, **kwargs) -> AnalysisConfig:
    return AnalysisConfig(corpus_path=str(path), **kwargs)


@pytest.fixture(scope="module")
def mini_bundle(mini_corpus_path) -> ReportBundle:
    return run_all(config_for(mini_corpus_path))


def test_enumerate_scopes_shape():
    scopes = enumerate_scopes()
    assert len(scopes) == 21  # (general + 6 subcases) x (all, appearers, victims)
    assert scopes[0] == Scope(None, None)
    assert scope_slug(scopes[0]) == "general-all"
    assert scope_slug(Scope(Subcase.COSTA_CARIBE, Role.VICTIM)) == "costa-caribe-victims"


def test_scope_seed_stable_and_distinct():
    a = scope_seed(0, Scope(None, None))
    b = scope_seed(0, Scope(None, None))
    c = scope_seed(0, Scope(Subcase.HUILA, None))
    d = scope_seed(1, Scope(None, None))
    assert a == b and a != c and a != d


def test_run_scope_skips_small_scope(mini_corpus_path):
    report = run_scope(config_for(mini_corpus_path), Scope(Subcase.META, Role.APPEARER))
    assert report["status"] == "skipped"
    assert "fewer than min_docs" in report["skip_reason"]
    assert report["documents"] == 0


def test_run_scope_zero_document_scope(write_corpus):
    path = write_corpus(
        [{"id": "a", "subcase": "Huila", "role": "victima", "text": "verdad y paz"}] * 1
    )
    report = run_scope(config_for(path), Scope(Subcase.META, None))
    assert report["status"] == "skipped"


def test_run_scope_sentiment_only(mini_corpus_path):
    report = run_scope_sentiment(config_for(mini_corpus_path), Scope(None, None))
    assert report["status"] == "ok"
    assert "sentiment" in report and "network" not in report


def test_unknown_role_excluded_from_role_scopes(write_corpus):
    records = []
    for i in range(3):
        records.append(
            {"id": f"v{i}", "subcase": "Huila", "role": "victima", "text": "paz y verdad plena"}
        )
    records.append({"id": "u", "subcase": "Huila", "role": None, "text": "paz y verdad"})
    path = write_corpus(records)
    all_scope = run_scope(config_for(path, min_docs=1), Scope(Subcase.HUILA, None))
    victim_scope = run_scope(config_for(path, min_docs=1), Scope(Subcase.HUILA, Role.VICTIM))
    assert all_scope["documents"] == 4
    assert victim_scope["documents"] == 3


def test_cascade_branch_consistency(mini_bundle):
    for scope in mini_bundle.data["scopes"]:
        if scope["status"] != "ok" or not scope["sentiment"]["tests"]:
            continue
        for cascade in scope["sentiment"]["tests"].values():
            if cascade["degenerate"] or cascade["normality"] is None:
                continue
            expected = "paired_t" if cascade["normality"]["p_value"] > cascade["alpha"] else (
                "wilcoxon_signed_rank"
            )
            assert cascade["main"]["method"] == expected
            assert cascade["branch"] == expected
            assert cascade["reject_null"] == (cascade["main"]["p_value"] < cascade["alpha"])


def test_scope_membership_consistency(mini_bundle, mini_corpus_path):
    corpus = load_corpus(mini_corpus_path)
    by_subcase = {
        subcase: {d.id for d in corpus if d.subcase is subcase and not d.skipped}
        for subcase in Subcase
    }
    for scope in mini_bundle.data["scopes"]:
        if scope["status"] != "ok" or scope["scope"]["subcase"] is None:
            continue
        subcase = Subcase(scope["scope"]["subcase"])
        assert scope["documents"] <= len(by_subcase[subcase])


def test_modularity_table_matches_fresh_scope_run(mini_bundle, mini_corpus_path):
    table = {row["scope"]: row for row in mini_bundle.data["modularity_table"]["rows"]}
    fresh = run_scope(config_for(mini_corpus_path), Scope(Subcase.CASANARE, None))
    cell = table["Casanare"]["all"]
    assert cell == pytest.approx(
        float(format(fresh["network"]["communities"]["best_modularity"], ".6g")), abs=1e-9
    )


def test_report_roundtrip_and_reexport(mini_bundle, tmp_path):
    out1 = tmp_path / "one"
    out2 = tmp_path / "two"
    files1 = export_bundle(mini_bundle, out1)
    report_path = out1 / "report.json"
    loaded = ReportBundle.from_json(report_path.read_text(encoding="utf-8"))
    files2 = export_bundle(loaded, out2)
    assert [p.relative_to(out1) for p in files1] == [p.relative_to(out2) for p in files2]
    for p1, p2 in zip(files1, files2):
        assert p1.read_bytes() == p2.read_bytes()


def test_export_file_inventory_single_scope(mini_corpus_path, tmp_path):
    config = config_for(mini_corpus_path)
    report = run_scope(config, Scope(Subcase.HUILA, None))
    from redlex.pipeline import _round_floats

    bundle = ReportBundle(
        data=_round_floats({"config": config.to_dict(), "scopes": [report]})
    )
    files = export_bundle(bundle, tmp_path / "out")
    names = sorted(p.name for p in files)
    assert names == [
        "edges.csv",
        "graph.dot",
        "graph.graphml",
        "nodes.csv",
        "pairs.csv",
        "report.json",
    ]


def test_export_empty_bundle(tmp_path):
    files = export_bundle(ReportBundle(data={"scopes": []}), tmp_path)
    assert [p.name for p in files] == ["report.json"]
    assert json.loads(files[0].read_text(encoding="utf-8")) == {"scopes": []}


def test_run_all_deterministic(mini_corpus_path):
    config = config_for(mini_corpus_path, seed=3)
    one = run_all(config).to_json()
    two = run_all(config).to_json()
    assert one == two


def test_skipgram_mode_runs(mini_corpus_path):
    config = config_for(mini_corpus_path, mode=Mode.SKIPGRAM, max_skip=2)
    report = run_scope(config, Scope(None, None))
    assert report["pairs"]["mode"] == "skipgram"
    assert report["pairs"]["max_skip"] == 2
    assert report["network"] is not None


def test_fixed_threshold_respected(mini_corpus_path):
    config = config_for(mini_corpus_path, threshold=5)
    report = run_scope(config, Scope(None, None))
    info = report["pairs"]["threshold"]
    assert info["policy"] == "fixed" and info["effective_v"] == 5
    assert all(count >= 5 for _, _, count in report["network"]["edges"])


def test_threshold_relaxation_recorded(write_corpus):
    # few documents, high auto threshold: relaxation must kick in
    text = "paz verdad justicia " * 30
    records = [
        {"id": f"d{i}", "subcase": "Huila", "role": "victima", "text": text} for i in range(3)
    ]
    report = run_scope(config_for(write_corpus(records)), Scope(Subcase.HUILA, None))
    info = report["pairs"]["threshold"]
    assert info["policy"] == "auto"
    assert info["effective_v"] <= info["chosen_v"]


def test_network_absent_when_no_pairs(write_corpus):
    records = [
        {"id": f"d{i}", "subcase": "Huila", "role": "victima", "text": "paz"} for i in range(3)
    ]
    report = run_scope(config_for(write_corpus(records)), Scope(Subcase.HUILA, None))
    assert report["network"] is None
    assert report["network_skipped_reason"] == "no co-occurrence pairs"


def test_pairs_before_stopwords_flag(mini_corpus_path):
    config = config_for(mini_corpus_path, stopwords_first=False)
    report = run_scope(config, Scope(Subcase.CASANARE, None))
    assert report["pairs"]["stopwords_first"] is False
    default = run_scope(config_for(mini_corpus_path), Scope(Subcase.CASANARE, None))
    assert default["pairs"]["total_pairs"] != report["pairs"]["total_pairs"]


def test_config_validation():
    with pytest.raises(ValueError):
        AnalysisConfig(corpus_path="x", threshold=0)
    with pytest.raises(ValueError):
        AnalysisConfig(corpus_path="x", threshold="sometimes")
    with pytest.raises(ValueError):
        AnalysisConfig(corpus_path="x", mode=Mode.SKIPGRAM, max_skip=0)
    with pytest.raises(ValueError):
        AnalysisConfig(corpus_path="x", methods=("fastest_greedy",))


def test_config_echoed_verbatim(mini_bundle, mini_corpus_path):
    echoed = mini_bundle.data["config"]
    assert echoed["corpus_path"] == str(mini_corpus_path)
    assert echoed["threshold"] == "auto"
    assert echoed["methods"] == ["fast_greedy", "louvain", "label_propagation"]
