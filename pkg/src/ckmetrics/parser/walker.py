"""
Source discovery: find files, parse them (optionally in worker processes) and
build one ClassModel.
"""

import logging
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path
from typing import Iterable, List, Mapping, Optional, Sequence, Tuple

from ..config import DEFAULT_CONFIG
from ..errors import InputPathError
from ..models.class_model import ClassModel, Diagnostic, SourceLocation
from .builder import build_model
from .parser import parse_source
from .syntax import SyntaxUnit

logger = logging.getLogger(__name__)

_ParseResult = Tuple[Optional[SyntaxUnit], List[Diagnostic]]


def discover_files(paths: Sequence[str], suffix: str = DEFAULT_CONFIG.parser.suffix) -> List[str]:
    """
    Expand ``paths`` into a sorted, de-duplicated list of source files.

    Directories are searched recursively for ``suffix``; files named
    explicitly are taken as they are.

    Raises:
        InputPathError: a path does not exist.
    """
    found = set()
    for raw in paths:
        path = Path(raw)
        if not path.exists():
            raise InputPathError(f"no such file or directory: {raw}")
        if path.is_dir():
            found.update(p.as_posix() for p in path.rglob(f"*{suffix}") if p.is_file())
        else:
            found.add(path.as_posix())
    return sorted(found)


def _parse_file(file: str, encoding: str = DEFAULT_CONFIG.parser.encoding) -> _ParseResult:
    location = SourceLocation(file=file, line=1, column=1)
    try:
        data = Path(file).read_bytes()
    except OSError as e:
        return None, [Diagnostic.error(location, f"cannot read file: {e.strerror or e}")]
    try:
        source = data.decode(encoding)
    except UnicodeDecodeError as e:
        return None, [Diagnostic.error(location, f"file is not valid {encoding} (byte offset {e.start}); skipped")]
    return parse_source(source, file), []


def _parse_all(files: List[str], jobs: int) -> List[_ParseResult]:
    if jobs <= 1 or len(files) <= 1:
        return [_parse_file(f) for f in files]
    workers = min(jobs, len(files))
    logger.debug(f"Parsing {len(files)} files with {workers} worker processes")
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(_parse_file, files, chunksize=max(1, len(files) // (workers * 4))))


def analyze_paths(
    paths: Sequence[str],
    suffix: str = DEFAULT_CONFIG.parser.suffix,
    jobs: int = DEFAULT_CONFIG.parser.jobs,
    files: Optional[Sequence[str]] = None,
) -> ClassModel:
    """
    Parse every source file under ``paths`` and build their ClassModel.

    ``files`` is the result of an earlier ``discover_files(paths, suffix)``
    call, when the caller already has it.

    Files are processed in sorted path order and results are merged in that
    order, so the model does not depend on ``jobs``. Unreadable files are
    skipped with an error diagnostic; finding no files at all yields an empty
    model carrying one warning.

    Raises:
        InputPathError: a path does not exist.
    """
    if files is None:
        files = discover_files(paths, suffix)
    if not files:
        anchor = paths[0] if paths else "."
        warning = Diagnostic.warning(
            SourceLocation(file=str(anchor), line=1, column=1),
            f"no '*{suffix}' files found",
        )
        logger.warning(f"No '*{suffix}' files found under {', '.join(map(str, paths)) or '.'}")
        return ClassModel(resolution_diagnostics=(warning,))

    logger.info(f"Found {len(files)} source files")
    units: List[SyntaxUnit] = []
    problems: List[Diagnostic] = []
    for unit, diagnostics in _parse_all(files, jobs):
        problems.extend(diagnostics)
        if unit is not None:
            units.append(unit)
    return build_model(units, problems)


def analyze_sources(sources: Mapping[str, str]) -> ClassModel:
    """Build a model from in-memory sources keyed by file name."""
    units: Iterable[SyntaxUnit] = [parse_source(text, name) for name, text in sorted(sources.items())]
    return build_model(units)
