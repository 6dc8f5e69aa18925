"""
Run timing for CLI and server invocations.

Tracks wall-clock time per pipeline stage (discover, parse, build, measure,
report, render) and the corpus size, so a run can log one summary line.
"""

import logging
import time
from contextlib import contextmanager
from dataclasses import dataclass, field
from typing import Iterator, List, Optional

from ..config.standard_config import DEFAULT_CONFIG

logger = logging.getLogger(__name__)


@dataclass
class StageTiming:
    """Timing of one pipeline stage."""

    stage: str
    start_time: float = field(default_factory=time.perf_counter)
    end_time: Optional[float] = None
    duration: Optional[float] = None  # seconds

    def finish(self) -> None:
        self.end_time = time.perf_counter()
        self.duration = self.end_time - self.start_time


@dataclass
class RunStats:
    """Timings and sizes for one command run."""

    command: str
    stages: List[StageTiming] = field(default_factory=list)
    start_time: float = field(default_factory=time.perf_counter)
    total_duration: Optional[float] = None

    files: int = 0
    classes: int = 0
    diagnostics: int = 0
    exit_code: Optional[int] = None

    enabled: bool = field(default_factory=lambda: DEFAULT_CONFIG.monitoring.track_timing)

    @contextmanager
    def stage(self, name: str) -> Iterator[StageTiming]:
        timing = StageTiming(stage=name)
        try:
            yield timing
        finally:
            timing.finish()
            if self.enabled:
                self.stages.append(timing)
                logger.debug(f"{self.command}: {name} took {timing.duration:.3f}s")

    def finish(self, exit_code: int) -> None:
        """Close the run and log the summary at INFO."""
        self.exit_code = exit_code
        self.total_duration = time.perf_counter() - self.start_time
        if not self.enabled:
            return
        breakdown = ", ".join(f"{s.stage} {s.duration:.3f}s" for s in self.stages)
        logger.info(
            f"{self.command} finished in {self.total_duration:.3f}s "
            f"({self.files} files, {self.classes} classes, {self.diagnostics} diagnostics, exit {exit_code})"
            + (f": {breakdown}" if breakdown else "")
        )
