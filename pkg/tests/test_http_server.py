from starlette.testclient import TestClient

from ckmetrics import __version__
from ckmetrics.models import METRIC_NAMES

from http_server import app


def test_health():
    response = TestClient(app).get("/health")
    assert response.status_code == 200
    body = response.json()
    assert body["status"] == "healthy"
    assert body["version"] == __version__
    assert body["endpoints"] == {"mcp": "/mcp", "health": "/health"}
    assert body["metrics"] == list(METRIC_NAMES)
