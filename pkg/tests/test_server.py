from ckmetrics.models import METRIC_NAMES, import_model
from ckmetrics.server import (
    SERVER_NAME,
    analyze_source,
    create_server,
    generate_model,
    metrics_from_model,
    metrics_registry,
)

SOURCES = {
    "shop/Cart.java": "package shop;\nclass Cart { int size; Item last; void add(Item i) { last = i; size++; } }\n",
    "shop/Item.java": "package shop;\nclass Item { int price; int price() { return price; } }\n",
}


def test_analyze_source():
    result = analyze_source(SOURCES, correlate=True)
    assert result["status"] == "ok"
    assert result["verdict_status"] == "pass"
    report = result["report"]
    assert [row["class"] for row in report["rows"]] == ["shop.Cart", "shop.Item"]
    assert report["generated_from"]["files"] == 2
    assert report["correlations"] is not None


def test_analyze_source_with_rules():
    result = analyze_source(SOURCES, rules=[{"metric": "ce", "op": ">=", "limit": 1, "severity": "fail"}])
    assert result["verdict_status"] == "fail"
    assert [v["class"] for v in result["report"]["verdicts"]] == ["shop.Cart"]

    broken = analyze_source(SOURCES, rules=[{"metric": "wmc", "op": ">", "limit": 1}])
    assert broken["status"] == "error"
    assert "unknown metric" in broken["error"]


def test_metrics_from_model():
    generated = generate_model(seed=4, classes=5)
    assert generated["status"] == "ok"
    assert len(import_model(generated["document"]).internal_classes) == 5

    result = metrics_from_model(generated["document"])
    assert result["status"] == "ok"
    assert len(result["report"]["rows"]) == 5

    failed = metrics_from_model("not json")
    assert failed["status"] == "error"
    assert "line 1" in failed["error"]


def test_generate_model_errors():
    result = generate_model(classes=-1)
    assert result["status"] == "error"
    assert result["error"].startswith("invalid generator setting n_classes")

    result = generate_model(max_fields=0, sharing=0.5)
    assert result["status"] == "error"


def test_registry_and_server():
    assert [m["name"] for m in metrics_registry()] == list(METRIC_NAMES)
    assert all(m["kind"] in ("coupling", "cohesion") for m in metrics_registry())
    assert create_server().name == SERVER_NAME
