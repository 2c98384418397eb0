from __future__ import annotations

import sys
from pathlib import Path

import pytest
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from clanklv.clans import Clan  # noqa: E402


@st.composite
def clans(draw, max_n: int = 9, min_n: int = 1) -> Clan:
    n = draw(st.integers(min_n, max_n))
    pairs = draw(st.integers(0, n // 2))
    labels = [k for k in range(1, pairs + 1) for _ in range(2)]
    signs = draw(st.lists(st.sampled_from("+-"), min_size=n - 2 * pairs, max_size=n - 2 * pairs))
    return Clan(tuple(draw(st.permutations(labels + signs))))


def pytest_addoption(parser):
    parser.addoption("--runslow", action="store_true", help="also run the slow optional suites")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--runslow"):
        return
    skip = pytest.mark.skip(reason="slow optional suite; use --runslow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip)


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    if module is None or not module.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in module.RESULTS:
        terminalreporter.write_line(line)
