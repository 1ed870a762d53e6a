"""Shared test plumbing: the acceptance checklist printed after the run."""

ACCEPTANCE_RESULTS: list[tuple[str, str, float]] = []


def record_criterion(name: str, status: str, seconds: float) -> None:
    ACCEPTANCE_RESULTS.append((name, status, seconds))


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name, status, seconds in ACCEPTANCE_RESULTS:
        terminalreporter.write_line(
            f"ACCEPTANCE {name}: {status} ({seconds:.1f}s)"
        )
