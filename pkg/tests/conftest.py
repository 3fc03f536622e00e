import os
import sys
from functools import lru_cache

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from metricdim.graph import all_pairs_distances, build_cycle, build_path  # noqa: E402
from metricdim.products import explicit_cylinder, explicit_prism  # noqa: E402


@lru_cache(maxsize=None)
def cylinder(n, k):
    g = explicit_cylinder(n, k).graph
    return g, all_pairs_distances(g)


@lru_cache(maxsize=None)
def prism(n, k, m):
    g = explicit_prism(n, k, m).graph
    return g, all_pairs_distances(g)


@lru_cache(maxsize=None)
def cycle(n):
    g = build_cycle(n)
    return g, all_pairs_distances(g)


@lru_cache(maxsize=None)
def path(k):
    g = build_path(k)
    return g, all_pairs_distances(g)


@pytest.fixture
def c4():
    return cycle(4)


_CRITERIA: dict[int, list[str]] = {}
_FAILED: dict[int, list[str]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n): acceptance criterion number")


def pytest_collection_modifyitems(items):
    for item in items:
        marker = item.get_closest_marker("criterion")
        if marker:
            item.user_properties.append(("criterion", marker.args[0]))


def pytest_runtest_logreport(report):
    crit = dict(report.user_properties).get("criterion")
    if crit is None:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        _CRITERIA.setdefault(crit, []).append(report.nodeid)
        if report.outcome != "passed":
            _FAILED.setdefault(crit, []).append(report.nodeid.split("::")[-1])


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for crit in sorted(_CRITERIA):
        failed = _FAILED.get(crit, [])
        total = len(_CRITERIA[crit])
        status = "FAIL" if failed else "PASS"
        line = f"criterion {crit}: {status} ({total - len(failed)}/{total} checks)"
        if failed:
            line += " failing: " + ", ".join(failed)
        terminalreporter.write_line(line)
