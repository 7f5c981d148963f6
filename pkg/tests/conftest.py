from __future__ import annotations

from pathlib import Path

import pytest

from wandercode.ingest import index_project

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"
DEMO = FIXTURES / "demo"


@pytest.fixture(scope="session")
def demo_index():
    index, _ = index_project(DEMO)
    return index


@pytest.fixture(scope="session")
def demo_units():
    _, units = index_project(DEMO)
    return units
