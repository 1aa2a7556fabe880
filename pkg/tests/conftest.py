import pytest

from shellentropy.occupancy import load_dataset, load_reference_entropies

_ACCEPTANCE = []


@pytest.fixture(scope="session")
def records():
    return load_dataset()


@pytest.fixture(scope="session")
def references():
    return load_reference_entropies()


@pytest.fixture
def criterion():
    """Record one acceptance line: ``criterion(n, title, ok, detail)``."""

    def record(number, title, ok, detail=""):
        _ACCEPTANCE.append((number, title, ok, detail))
        return ok

    return record


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number, title, ok, detail in sorted(_ACCEPTANCE, key=lambda r: r[0]):
        line = f"[{'PASS' if ok else 'FAIL'}] {number:>2}. {title}"
        if detail:
            line += f" -- {detail}"
        terminalreporter.write_line(line)
