from __future__ import annotations

import sys

import pytest

from qgrass.shapes import LeDiagram, Partition


@pytest.fixture
def hook_diagram() -> LeDiagram:
    """Shape (4,3,3,1) with the single black box (2,1)."""
    return LeDiagram(Partition((4, 3, 3, 1)), frozenset({(2, 1)}))


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    lines = getattr(module, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
