"""Pytest configuration and fixtures."""

import sys
from pathlib import Path

import pytest

# Add src to path for imports
src_path = Path(__file__).parent.parent
sys.path.insert(0, str(src_path))

from src.graph.digraph import Digraph  # noqa: E402
from src.graph.instance import Instance  # noqa: E402


def pytest_addoption(parser: pytest.Parser) -> None:
    parser.addoption("--runslow", action="store_true", default=False, help="Run slow tests")


def pytest_collection_modifyitems(config: pytest.Config, items: list[pytest.Item]) -> None:
    if config.getoption("--runslow"):
        return
    skip_slow = pytest.mark.skip(reason="needs --runslow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip_slow)


@pytest.fixture
def two_cycle() -> Instance:
    """s=0 -> t=1 of weight 2 and back of weight 3."""
    return Instance(graph=Digraph(2, [(0, 1, 2), (1, 0, 3)]), s=0, t=1, k1=1, k2=1)
