import random
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from hamstar.enumerate import graphs_up_to  # noqa: E402
from oracles import random_graph  # noqa: E402

_criteria: list[tuple[str, bool, str]] = []


@pytest.fixture(scope="session")
def graphs_le7():
    """Every graph (connected or not) on 1..7 vertices."""
    return list(graphs_up_to(7, connected=False))


@pytest.fixture(scope="session")
def connected_le8():
    return list(graphs_up_to(8))


@pytest.fixture(scope="session")
def connected_le9():
    return list(graphs_up_to(9))


@pytest.fixture(scope="session")
def random_graphs():
    rng = random.Random(20240917)
    out = []
    for _ in range(500):
        n = rng.randint(7, 12)
        out.append(random_graph(rng, n, rng.choice([0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8])))
    return out


@pytest.fixture
def criterion():
    """Record an acceptance criterion outcome for the end-of-run summary."""
    def record(name: str, passed: bool, detail: str = ""):
        _criteria.append((name, passed, detail))
        return passed
    return record


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for name, passed, detail in _criteria:
        status = "PASS" if passed else "FAIL"
        terminalreporter.write_line(f"{status}  {name}" + (f"  ({detail})" if detail else ""))
