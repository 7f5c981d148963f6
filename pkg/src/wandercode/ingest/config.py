"""Ingest configuration: file filters and scan roots."""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from pathlib import Path


@dataclass
class IngestConfig:
    extensions: list[str] = field(default_factory=lambda: [".java"])
    exclude: list[str] = field(default_factory=list)
    roots: list[str] = field(default_factory=lambda: ["."])

    @classmethod
    def load(cls, path: str | Path) -> "IngestConfig":
        data = json.loads(Path(path).read_text(encoding="utf-8"))
        cfg = cls()
        if "extensions" in data:
            cfg.extensions = list(data["extensions"])
        if "exclude" in data:
            cfg.exclude = list(data["exclude"])
        if "roots" in data:
            cfg.roots = list(data["roots"])
        return cfg

    def excludes(self, rel_path: str) -> bool:
        return any(_glob_re(p).match(rel_path) for p in self.exclude)


def _glob_translate(pattern: str) -> str:
    """Translate a glob with ``**`` support into a regex source string."""
    out = []
    i, n = 0, len(pattern)
    while i < n:
        c = pattern[i]
        if c == "*":
            if pattern[i : i + 3] == "**/":
                out.append("(?:.*/)?")
                i += 3
            elif pattern[i : i + 2] == "**":
                out.append(".*")
                i += 2
            else:
                out.append("[^/]*")
                i += 1
        elif c == "?":
            out.append("[^/]")
            i += 1
        else:
            out.append(re.escape(c))
            i += 1
    return "".join(out) + r"\Z"


def _glob_re(pattern: str) -> re.Pattern:
    return re.compile(_glob_translate(pattern))
