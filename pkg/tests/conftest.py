import random

import pytest

from taqcalc.free_homology import CellModule


@pytest.fixture
def rng():
    return random.Random(20240917)


def random_cell_module(rng, field, max_cells=4, max_degree=6, bottom=True):
    """A random CellModule with an optional degree-0 bottom cell."""
    k = rng.randint(1, max_cells - (1 if bottom else 0))
    classes = [(f"x{j + 1}", rng.randint(1, max_degree)) for j in range(k)]
    if bottom:
        classes = [("x0", 0)] + classes
    return CellModule(field, tuple(classes), "x0" if bottom else None)


# one line per acceptance criterion, printed at the end of the run
ACCEPTANCE_LINES: dict = {}


@pytest.fixture
def criterion():
    def record(number: int, ok: bool, detail: str):
        line = f"{'PASS' if ok else 'FAIL'} criterion {number}: {detail}"
        ACCEPTANCE_LINES[number] = line
        print(line)
        return ok
    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for n in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(ACCEPTANCE_LINES[n])
