import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from proth_semigroup import proth  # noqa: E402

# (n, r) with k = 2^r + 1 < 2^n, n in 3..7, r in 1..3
GRID = [(n, r) for n in range(3, 8) for r in (1, 2, 3) if 2**r + 1 < 2**n]


@pytest.fixture(params=GRID, ids=lambda nr: f'n{nr[0]}-r{nr[1]}')
def grid_params(request):
    n, r = request.param
    return proth.proth_params(n, 2**r + 1)


_criteria = {}
_criterion_markers = {}


def pytest_configure(config):
    config.addinivalue_line('markers', 'criterion(num, title): acceptance criterion')


def pytest_runtest_logreport(report):
    marker = _criterion_markers.get(report.nodeid)
    if marker is None:
        return
    if report.when == 'call' or (report.when == 'setup' and report.outcome != 'passed'):
        if _criteria.get(marker) != 'failed':
            _criteria[marker] = report.outcome


def pytest_collection_modifyitems(items):
    for item in items:
        m = item.get_closest_marker('criterion')
        if m is not None:
            _criterion_markers[item.nodeid] = m.args


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section('acceptance criteria')
    for (num, title), outcome in sorted(_criteria.items()):
        verdict = 'PASS' if outcome == 'passed' else 'FAIL'
        terminalreporter.write_line(f'[{verdict}] {num}. {title}')
