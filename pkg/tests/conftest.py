import sys
from collections import defaultdict
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings

sys.path.insert(0, str(Path(__file__).resolve().parent))

settings.register_profile(
    "default",
    deadline=None,
    max_examples=60,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")

CRITERIA = {
    1: "boundary-slope case tables match line for line",
    2: "S- - S+ closed form on the grid",
    3: "Conway polynomial of the n-family",
    4: "Jones identity and j4 of the n-family",
    5: "signature trichotomy by both routes with o(D), y(D)",
    6: "Ito reduced arithmetic and thresholds",
    7: "scan to p = 200: no UNDETERMINED",
    8: "generator catalog: fibered set and Alexander form",
    9: "oracle equivalence property suites",
}

_results: dict[int, list[tuple[str, str]]] = defaultdict(list)


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n): acceptance criterion number")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker and (rep.when == "call" or (rep.when == "setup" and not rep.passed)):
        _results[marker.args[0]].append((rep.nodeid, rep.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(CRITERIA):
        runs = _results.get(n)
        if not runs:
            continue
        failed = [nid for nid, o in runs if o != "passed"]
        status = "PASS" if not failed else "FAIL"
        line = f"criterion {n}: {status} ({len(runs) - len(failed)}/{len(runs)}) {CRITERIA[n]}"
        terminalreporter.write_line(line)
        for nid in failed:
            terminalreporter.write_line(f"    failed: {nid}")
