"""Directory scanning: find source files and load them as SourceUnits."""

from __future__ import annotations

import logging
from pathlib import Path

from wandercode.ingest.config import IngestConfig
from wandercode.ingest.diagnostics import Diagnostics
from wandercode.model import SourceUnit

logger = logging.getLogger(__name__)


class ScanError(Exception):
    """Fatal scan failure (unreadable or missing root)."""


def scan_project(
    root: str | Path,
    config: IngestConfig | None = None,
    diagnostics: Diagnostics | None = None,
) -> list[SourceUnit]:
    """Collect matching files under ``root``, ordered by relative path.

    Unreadable individual files are skipped with a recorded warning;
    an unreadable or missing root raises ScanError.
    """
    config = config or IngestConfig()
    diagnostics = diagnostics if diagnostics is not None else Diagnostics()
    root = Path(root)
    if not root.is_dir():
        raise ScanError(f"project root is not a readable directory: {root}")

    paths: set[str] = set()
    for sub in config.roots:
        base = (root / sub).resolve()
        if not base.is_dir():
            continue
        for path in base.rglob("*"):
            if not path.is_file():
                continue
            if not any(path.name.endswith(ext) for ext in config.extensions):
                continue
            rel = path.relative_to(root.resolve()).as_posix()
            if config.excludes(rel):
                continue
            paths.add(rel)

    units: list[SourceUnit] = []
    for rel in sorted(paths):
        try:
            content = (root / rel).read_bytes().decode("utf-8", errors="replace")
        except OSError as exc:
            diagnostics.warn(f"skipping unreadable file {rel}: {exc}")
            logger.warning("skipping unreadable file %s: %s", rel, exc)
            continue
        units.append(SourceUnit(path=rel, content=content))
    return units
