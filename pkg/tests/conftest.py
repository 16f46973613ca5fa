import io
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from elamite.cli import run  # noqa: E402

ACCEPTANCE: dict[int, tuple[str, bool]] = {}


@pytest.fixture
def cli():
    """Run the CLI in-process; returns (exit code, stdout, stderr)."""

    def invoke(*argv: str):
        out, err = io.StringIO(), io.StringIO()
        code = run(list(argv), stdout=out, stderr=err)
        return code, out.getvalue(), err.getvalue()

    return invoke


@pytest.fixture
def criterion(request):
    """Record the outcome of one numbered acceptance criterion."""
    marker = request.node.get_closest_marker("criterion")
    number, title = marker.args
    yield
    report = getattr(request.node, "rep_call", None)
    ok = bool(report and report.passed)
    # a criterion split over several tests passes only if all of them do
    ACCEPTANCE[number] = (title, ACCEPTANCE.get(number, (title, True))[1] and ok)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    if report.when == "call":
        item.rep_call = report


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE):
        title, ok = ACCEPTANCE[number]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {number:>2}. {title}")
