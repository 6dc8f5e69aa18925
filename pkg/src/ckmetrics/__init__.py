"""
ckmetrics
=========

Coupling and cohesion metrics for object-oriented source code.

- Parser: Java-like sources into a resolved class model
- Metrics: Ce, Ca, DIT, CBO, RFC and LCOM1-LCOM4 per class
- Reports: package rollups, rank correlations, threshold verdicts; table, JSON or CSV
- Generator: seeded synthetic models for testing and experiments
- Surfaces: the ``ckm`` command line and an MCP server

License: MIT
"""

__version__ = "0.1.0"
__license__ = "MIT"

from .generator import GenSpec, generate
from .metrics import compute_all
from .models import ClassModel, export_model, import_model
from .parser import analyze_paths, analyze_sources
from .report import build_report, render

__all__ = [
    "GenSpec",
    "generate",
    "compute_all",
    "ClassModel",
    "export_model",
    "import_model",
    "analyze_paths",
    "analyze_sources",
    "build_report",
    "render",
]
