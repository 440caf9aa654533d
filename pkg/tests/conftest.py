import pytest

# the spaces named in acceptance criterion 3
CRITERION_SPACES = (
    [f"Gr({m},{n})" for n in range(2, 9) for m in range(1, n)]
    + [f"LG({n})" for n in range(2, 6)]
    + [f"OG({n})" for n in range(4, 7)]
    + [f"Q({n})" for n in range(3, 9)]
    + ["E6", "E7"]
)

SMALL_SPACES = ["Gr(2,4)", "Gr(2,5)", "Gr(3,6)", "LG(3)", "OG(5)", "Q(5)", "Q(6)", "E6"]

_acceptance_lines: list[str] = []


@pytest.fixture
def record():
    """Collect one PASS/FAIL line per acceptance criterion for the summary."""
    def _record(criterion: str, passed: bool, detail: str = ""):
        _acceptance_lines.append(f"{'PASS' if passed else 'FAIL'}  {criterion}" + (f"  ({detail})" if detail else ""))
    return _record


def pytest_terminal_summary(terminalreporter):
    if _acceptance_lines:
        terminalreporter.section("acceptance criteria")
        for line in _acceptance_lines:
            terminalreporter.write_line(line)
