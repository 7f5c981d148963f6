"""Accumulator for non-fatal ingest events (skips, parse failures, drops)."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class Diagnostics:
    warnings: list[str] = field(default_factory=list)
    external_dropped: int = 0
    ambiguous_dropped: int = 0
    ambiguous_sites: list[str] = field(default_factory=list)

    def warn(self, message: str) -> None:
        self.warnings.append(message)

    def summary(self) -> str:
        return (
            f"{self.external_dropped} external call(s) discounted, "
            f"{self.ambiguous_dropped} ambiguous call(s) dropped, "
            f"{len(self.warnings)} warning(s)"
        )
