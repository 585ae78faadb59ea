import pytest

from triestem import Pipeline, StemmerConfig, SuffixRule, load_data
from triestem.evaluation import load_gold

# Rules of the -elves worked example, in the order they were added.
ELVES_STAGES = [
    [SuffixRule("s", 1)],
    [SuffixRule("s", 1), SuffixRule("lves", 3, "f")],
    [SuffixRule("s", 1), SuffixRule("lves", 3, "f"),
     SuffixRule("pelves", 2, "is"), SuffixRule("delves", 1)],
]

ACCEPTANCE_RESULTS: list[str] = []


@pytest.fixture(scope="session")
def data():
    return load_data()


@pytest.fixture(scope="session")
def gold():
    return load_gold()


@pytest.fixture(scope="session")
def pipeline(data):
    return Pipeline.from_data(data)


@pytest.fixture(scope="session")
def light(data):
    return Pipeline.from_data(data, StemmerConfig.light())


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_RESULTS:
            terminalreporter.write_line(line)
