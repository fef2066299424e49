import pytest

from waba import examples_path, parse_document

# filled by test_acceptance, echoed after the run
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture
def corpus():
    def load(name, **kwargs):
        return parse_document(examples_path(name).read_text(), **kwargs)

    return load
