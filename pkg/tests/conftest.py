from __future__ import annotations

import sys

import pytest
from hypothesis import settings

from duality_triads.catalog import default_entries

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

ENTRIES = default_entries()
ENTRY_IDS = [e.name for e in ENTRIES]


@pytest.fixture(params=ENTRIES, ids=ENTRY_IDS)
def entry(request):
    return request.param


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    if module is None or not module.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in module.format_results():
        terminalreporter.write_line(line)
