import json

import numpy as np
import pytest

from ckmetrics.errors import ArgumentError, ConfigError, InsufficientDataError
from ckmetrics.metrics import compute_all
from ckmetrics.models import METRIC_NAMES, AnalysisReport, ThresholdRule
from ckmetrics.parser import analyze_paths
from ckmetrics.report import (
    build_report,
    correlate,
    evaluate_thresholds,
    load_rules,
    package_rollups,
    render,
    spearman,
    summarize,
)

from oracles import textbook_spearman


def test_spearman_extremes():
    assert spearman([1, 2, 3], [3, 2, 1]) == -1.0
    assert spearman([1, 2, 3, 4], [10, 20, 30, 40]) == 1.0
    assert spearman([1, 1, 2], [5, 5, 5]) is None
    assert spearman([7, 7], [1, 2]) is None


def test_spearman_matches_textbook_definition():
    rng = np.random.default_rng(7)
    for _ in range(100):
        xs = rng.integers(0, 6, size=20).tolist()
        ys = rng.integers(0, 6, size=20).tolist()
        expected = textbook_spearman(xs, ys)
        actual = spearman(xs, ys)
        if expected is None:
            assert actual is None
        else:
            assert actual == pytest.approx(expected, abs=1e-12)


def test_spearman_is_symmetric_and_rank_based():
    rng = np.random.default_rng(11)
    xs = rng.permutation(30).tolist()
    ys = rng.integers(0, 10, size=30).tolist()
    assert spearman(xs, ys) == spearman(ys, xs)
    assert spearman([x ** 3 + 1 for x in xs], ys) == spearman(xs, ys)


@pytest.mark.parametrize("xs, ys", [([1, 2, 3], [1, 2]), ([1], [1]), ([], [])])
def test_spearman_rejects_bad_input(xs, ys):
    with pytest.raises(ArgumentError):
        spearman(xs, ys)


def test_correlate(layered_model):
    rows = compute_all(layered_model)
    matrix = correlate(rows)
    assert matrix.metrics == list(METRIC_NAMES)
    for a in METRIC_NAMES:
        for b in METRIC_NAMES:
            assert matrix.rho(a, b) == matrix.rho(b, a)
            assert matrix.get(a, b).n == 3
    assert matrix.rho("dit", "dit") == pytest.approx(1.0)
    assert matrix.rho("lcom1", "rfc") == pytest.approx(textbook_spearman([0, 0, 4], [4, 1, 5]))

    with pytest.raises(InsufficientDataError):
        correlate(rows[:1])


def test_thresholds(layered_model):
    rows = compute_all(layered_model)
    assert evaluate_thresholds(rows, []) == []

    (verdict,) = evaluate_thresholds(rows, [{"metric": "lcom2", "op": ">", "limit": 0, "severity": "fail"}])
    assert verdict.class_fqn == "core.Repo"
    assert verdict.actual == 2
    assert AnalysisReport(verdicts=[verdict]).status == "fail"

    everything = evaluate_thresholds(rows, [ThresholdRule(metric="dit", op=">=", limit=0)])
    assert [v.class_fqn for v in everything] == [r.class_fqn for r in rows]
    assert AnalysisReport(verdicts=everything).status == "warn"
    assert AnalysisReport().status == "pass"


@pytest.mark.parametrize(
    "rule",
    [
        {"metric": "wmc", "op": ">", "limit": 1},
        {"metric": "cbo", "op": "==", "limit": 1},
        {"metric": "cbo", "op": ">", "limit": 1, "severity": "info"},
        {"metric": "cbo", "op": ">", "limit": float("inf")},
        {"metric": "cbo", "op": ">", "limit": 1, "colour": "red"},
        {"metric": "lcom2", "comparator": ">", "limit": 1, "severity": "fail"},
        ["cbo", ">", 1],
    ],
)
def test_invalid_rules(layered_model, rule):
    with pytest.raises(ConfigError):
        evaluate_thresholds(compute_all(layered_model), [rule])


def test_rule_description():
    assert ThresholdRule(metric="lcom2", op=">", limit=10).describe() == "lcom2 > 10"
    assert ThresholdRule(metric="rfc", op="<=", limit=2.5).describe() == "rfc <= 2.5"


def test_load_rules(tmp_path):
    rules_file = tmp_path / "rules.yaml"
    rules_file.write_text("- metric: lcom2\n  op: '>'\n  limit: 10\n  severity: fail\n- {metric: cbo, op: '>=', limit: 5}\n")
    rules = load_rules(rules_file)
    assert [(r.metric, r.comparator, r.limit, r.severity) for r in rules] == [
        ("lcom2", ">", 10, "fail"),
        ("cbo", ">=", 5, "warn"),
    ]

    empty = tmp_path / "empty.yaml"
    empty.write_text("")
    assert load_rules(empty) == []

    with pytest.raises(ConfigError, match="not found"):
        load_rules(tmp_path / "missing.yaml")

    mapping = tmp_path / "mapping.yaml"
    mapping.write_text("metric: lcom2\n")
    with pytest.raises(ConfigError, match="expected a list"):
        load_rules(mapping)

    bad = tmp_path / "bad.yaml"
    bad.write_text("- metric: nope\n  op: '>'\n  limit: 1\n")
    with pytest.raises(ConfigError, match="rule 1"):
        load_rules(bad)

    renamed = tmp_path / "renamed.yaml"
    renamed.write_text("- {metric: lcom2, comparator: '>', limit: 1, severity: fail}\n")
    with pytest.raises(ConfigError, match="rule 1"):
        load_rules(renamed)


def test_summarize():
    summary = summarize([1, 2, 3, 10])
    assert (summary.mean, summary.median, summary.max) == (4.0, 2.5, 10)
    assert summarize([]).max == 0


def test_package_rollups(layered_model):
    rollups = package_rollups(layered_model, compute_all(layered_model))
    assert list(rollups) == ["app", "core"]
    core = rollups["core"]
    assert (core.classes, core.ce, core.ca, core.instability) == (2, 1, 1, 0.5)
    assert core.metrics["rfc"].max == 5
    assert rollups["app"].instability == 1.0


def test_build_report(layered_model):
    report = build_report(layered_model, files=3, correlate_metrics=True)
    assert report.generated_from.classes == 3
    assert report.generated_from.packages == 2
    assert report.correlations is not None
    assert report.status == "pass"

    single = build_report(layered_model, compute_all(layered_model)[:1], correlate_metrics=True)
    assert single.correlations is None


def test_empty_csv_is_header_only():
    assert render(AnalysisReport(), "csv") == b"class,ce,ca,dit,cbo,rfc,lcom1,lcom2,lcom3,lcom4\r\n"


def test_corpus_csv(corpus_dir, golden_csv):
    model = analyze_paths([str(corpus_dir)])
    report = build_report(model, files=12)
    assert render(report, "csv") == golden_csv


def test_json_is_deterministic(layered_model):
    report = build_report(layered_model, correlate_metrics=True)
    first = render(report, "json")
    assert first == render(build_report(layered_model, correlate_metrics=True), "json")
    document = json.loads(first)
    assert document["rows"][0]["class"] == "app.Service"
    assert document["correlations"]["lcom2"]["cbo"]["n"] == 3
    assert AnalysisReport.model_validate(document).rows == report.rows


def test_json_rerender_is_byte_identical(corpus_dir):
    model = analyze_paths([str(corpus_dir)])
    rules = [{"metric": "lcom2", "op": ">", "limit": 0, "severity": "fail"}, {"metric": "rfc", "op": ">=", "limit": 3}]
    first = render(build_report(model, files=12, rules=rules, correlate_metrics=True), "json")
    reparsed = AnalysisReport.model_validate(json.loads(first))
    assert reparsed.verdicts and reparsed.diagnostics
    assert render(reparsed, "json") == first


@pytest.mark.parametrize("op", [">", ">="])
@pytest.mark.parametrize("metric", ["cbo", "rfc", "lcom1", "lcom2"])
def test_tightening_a_limit_keeps_verdicts(corpus_dir, metric, op):
    rows = compute_all(analyze_paths([str(corpus_dir)]))
    previous = set()
    for limit in range(12, -2, -1):
        flagged = {v.class_fqn for v in evaluate_thresholds(rows, [{"metric": metric, "op": op, "limit": limit}])}
        assert previous <= flagged
        previous = flagged
    assert len(previous) == len(rows)


def test_table_summary(corpus_dir):
    model = analyze_paths([str(corpus_dir)])
    text = render(build_report(model, files=12), "table").decode("utf-8")
    assert "12 classes in 4 packages from 12 files; 1 errors, 5 warnings; status: pass" in text
    assert "\x1b[" not in text
    assert "(default)" in text
    assert "\x1b[" in render(build_report(model, files=12), "table", color=True).decode("utf-8")


def test_table_lists_correlations_and_verdicts(layered_model):
    report = build_report(
        layered_model,
        rules=[{"metric": "lcom2", "op": ">", "limit": 1, "severity": "fail"}],
        correlate_metrics=True,
    )
    text = render(report, "table", lcom="lcom4").decode("utf-8")
    assert "Spearman rho against lcom4" in text
    assert "lcom2 > 1" in text
    assert text.rstrip().endswith("status: fail")


@pytest.mark.parametrize("kwargs", [{"format": "xml"}, {"format": "table", "lcom": "cbo"}])
def test_render_rejects_unknown_options(kwargs):
    with pytest.raises(ConfigError):
        render(AnalysisReport(), **kwargs)
