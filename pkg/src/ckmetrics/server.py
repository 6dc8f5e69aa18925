"""
ckmetrics MCP Server
====================

Exposes the analysis pipeline to MCP clients.

Resources Exposed:
- ckm://metrics/registry - the metric suite (name, title, description)

Tools Exposed:
- analyze_source - parse in-memory sources and report their metrics
- metrics_from_model - report metrics for a model document
- generate_model - write a seeded synthetic model document

Every tool returns a JSON object. Errors are returned as
``{"status": "error", "error": message}`` rather than raised.
"""

import json
import logging
from typing import Any, Dict, List, Optional

from fastmcp import FastMCP
from pydantic import ValidationError

from . import __version__
from .config import DEFAULT_CONFIG
from .errors import CkmError
from .generator import GenSpec, generate
from .metrics import MetricRegistry
from .models.document import export_model, import_model
from .models.report import AnalysisReport
from .parser import analyze_sources
from .report import build_report

logger = logging.getLogger(__name__)

SERVER_NAME = "ckmetrics"
REGISTRY_URI = "ckm://metrics/registry"


def _error(message: str) -> Dict[str, Any]:
    logger.info(f"Tool failed: {message}")
    return {"status": "error", "error": message}


def _validation_message(error: ValidationError) -> str:
    first = error.errors()[0]
    where = ".".join(str(p) for p in first["loc"])
    return f"{where}: {first['msg']}" if where else first["msg"]


def _report_payload(report: AnalysisReport) -> Dict[str, Any]:
    return {
        "status": "ok",
        "verdict_status": report.status,
        "report": report.model_dump(by_alias=True, mode="json"),
    }


def analyze_source(
    sources: Dict[str, str],
    correlate: bool = False,
    no_constructors: bool = False,
    rules: Optional[List[Dict[str, Any]]] = None,
) -> Dict[str, Any]:
    """
    Parse in-memory sources (file name to text) and report their metrics.

    Returns:
        ``{"status": "ok", "verdict_status", "report"}`` or an error object
    """
    logger.info(f"analyze_source: {len(sources)} files, correlate={correlate}")
    try:
        model = analyze_sources(sources)
        report = build_report(
            model,
            files=len(sources),
            rules=rules or [],
            correlate_metrics=correlate,
            include_constructors=not no_constructors,
        )
    except CkmError as e:
        return _error(e.message)
    return _report_payload(report)


def metrics_from_model(
    document: str,
    correlate: bool = False,
    no_constructors: bool = False,
    rules: Optional[List[Dict[str, Any]]] = None,
) -> Dict[str, Any]:
    """Report metrics for a model document."""
    logger.info(f"metrics_from_model: {len(document)} characters, correlate={correlate}")
    try:
        model = import_model(document)
        report = build_report(
            model,
            rules=rules or [],
            correlate_metrics=correlate,
            include_constructors=not no_constructors,
        )
    except CkmError as e:
        return _error(e.message)
    return _report_payload(report)


def generate_model(
    seed: int = DEFAULT_CONFIG.generator.seed,
    classes: int = DEFAULT_CONFIG.generator.n_classes,
    packages: int = DEFAULT_CONFIG.generator.n_packages,
    max_methods: int = DEFAULT_CONFIG.generator.max_methods,
    max_fields: int = DEFAULT_CONFIG.generator.max_fields,
    inheritance_prob: float = DEFAULT_CONFIG.generator.inheritance_prob,
    call_prob: float = DEFAULT_CONFIG.generator.cross_class_call_prob,
    sharing: float = DEFAULT_CONFIG.generator.attribute_sharing,
    intra_call_prob: float = DEFAULT_CONFIG.generator.intra_class_call_prob,
    coupling_mode: str = DEFAULT_CONFIG.generator.coupling_mode,
) -> Dict[str, Any]:
    """
    Generate a seeded synthetic model.

    Returns:
        ``{"status": "ok", "document": <model document text>}`` or an error object
    """
    logger.info(f"generate_model: seed={seed}, classes={classes}, mode={coupling_mode}")
    try:
        spec = GenSpec(
            seed=seed,
            n_classes=classes,
            n_packages=packages,
            max_methods=max_methods,
            max_fields=max_fields,
            inheritance_prob=inheritance_prob,
            cross_class_call_prob=call_prob,
            attribute_sharing=sharing,
            intra_class_call_prob=intra_call_prob,
            coupling_mode=coupling_mode,
        )
        document = export_model(generate(spec))
    except ValidationError as e:
        return _error(f"invalid generator setting {_validation_message(e)}")
    except CkmError as e:
        return _error(e.message)
    return {"status": "ok", "document": document.decode("utf-8")}


def metrics_registry() -> List[Dict[str, Any]]:
    """The metric suite in report column order."""
    return MetricRegistry.describe()


def create_server() -> FastMCP:
    """
    Create the FastMCP instance with every tool and resource registered.

    Used directly for stdio and mounted by ``http_server`` for HTTP.
    """
    app = FastMCP(SERVER_NAME)

    @app.resource(REGISTRY_URI)
    def get_metrics_registry() -> str:
        """
        Metric registry

        The coupling and cohesion metrics every report carries, in column order.

        URI: ckm://metrics/registry
        Format: JSON
        """
        return json.dumps(metrics_registry(), indent=2)

    app.tool(name="analyze_source")(analyze_source)
    app.tool(name="metrics_from_model")(metrics_from_model)
    app.tool(name="generate_model")(generate_model)

    logger.info(f"MCP server {SERVER_NAME} {__version__} ready")
    return app


def main() -> None:
    logging.basicConfig(level=DEFAULT_CONFIG.monitoring.log_level, format=DEFAULT_CONFIG.monitoring.log_format)
    create_server().run()


if __name__ == "__main__":
    main()
