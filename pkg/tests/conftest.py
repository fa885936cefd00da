import hypothesis
import pytest

from mlscover.local_sets import enumerate_minimal_local_sets
from mlscover.rank import cutrank_table
from mlscover.sweep import all_labeled_graphs

hypothesis.settings.register_profile("default", max_examples=60, deadline=None)
hypothesis.settings.register_profile("fast", max_examples=10, deadline=None)
hypothesis.settings.load_profile("default")

_criteria = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(num, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    num, title = mark.args
    if rep.when == "call" or (rep.when == "setup" and rep.failed):
        prev = _criteria.get(num, (title, True))
        _criteria[num] = (title, prev[1] and rep.passed)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(_criteria):
        title, ok = _criteria[num]
        terminalreporter.write_line(f"criterion {num:2d} {'PASS' if ok else 'FAIL'}  {title}")


@pytest.fixture(scope="session")
def graphs6():
    return list(all_labeled_graphs(6))


@pytest.fixture(scope="session")
def mls6(graphs6):
    """MLS records of every labeled 6-vertex graph, index-aligned with ``graphs6``."""
    return [enumerate_minimal_local_sets(g) for g in graphs6]


@pytest.fixture(scope="session")
def tables6(graphs6):
    return [cutrank_table(g) for g in graphs6]
