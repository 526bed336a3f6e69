import pytest

from wassbound.innovations import InnovationModel

_ACCEPTANCE: dict[int, str] = {}


@pytest.fixture
def report():
    """Record the pass/fail line of an acceptance criterion."""

    def record(number: int, ok: bool, detail: str):
        _ACCEPTANCE[number] = f"criterion {number:2d}: {'PASS' if ok else 'FAIL'}  {detail}"
        print(_ACCEPTANCE[number])
        return ok

    return record


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_ACCEPTANCE):
        terminalreporter.write_line(_ACCEPTANCE[number])


@pytest.fixture(scope="session")
def normal():
    return InnovationModel.normal()


@pytest.fixture(scope="session")
def t9():
    return InnovationModel.student_t(9)
