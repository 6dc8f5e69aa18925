"""
Utility module for ckmetrics.

Provides run timing for the command line and the MCP server.
"""

from .run_stats import RunStats, StageTiming

__all__ = [
    "RunStats",
    "StageTiming",
]
