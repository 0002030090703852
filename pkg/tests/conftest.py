from collections import Counter
from itertools import product

import pytest

from depthzero.multisegments import all_multisegments
from depthzero.partitions import compositions


def supports_up_to(size):
    """Multisets of points starting at 0, total multiplicity <= size, gaps allowed."""
    for n in range(1, size + 1):
        for comp in compositions(n):
            # a gap of one empty point may follow any block except the last
            for gaps in product((0, 1), repeat=len(comp) - 1):
                pos, sup = 0, Counter()
                for k, c in enumerate(comp):
                    sup[pos] = c
                    pos += 1 + (gaps[k] if k < len(gaps) else 0)
                yield sup


def multisegments_up_to(size):
    seen = set()
    for sup in supports_up_to(size):
        key = tuple(sorted(sup.items()))
        if key in seen:
            continue
        seen.add(key)
        yield from all_multisegments(sup)


@pytest.fixture(scope="session")
def msegs5():
    return list(multisegments_up_to(5))


@pytest.fixture(scope="session")
def msegs6():
    return list(multisegments_up_to(6))


ACCEPTANCE_LINES = []


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is not None and rep.when == "call":
        number, title = marker.args
        status = "PASS" if rep.passed else "FAIL"
        ACCEPTANCE_LINES.append(f"{status}  criterion {number:>2}: {title} ({rep.duration:.1f}s)")


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
