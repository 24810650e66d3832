import pytest

from schurlab.exact import kernel


@pytest.fixture(params=["python", "cython"])
def backend(request, monkeypatch):
    """Run the test once per multiplication backend."""
    if request.param == "cython" and kernel._ckernel is None:
        pytest.skip("compiled kernel not built")
    monkeypatch.setattr(kernel, "BACKEND", request.param)
    return request.param


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
