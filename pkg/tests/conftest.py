import math

import pytest

from entropy_operator import ModelParams

BETAS = (0.5, 1.0, 2.0)
CHITS = (0.3, math.pi / 2, 1.9)
GRID = [(b, ct) for b in BETAS for ct in CHITS]


@pytest.fixture
def model_point():
    """beta = 1 at chi t = pi/2, where <c|s> = exp(-2)/2 is real."""
    return ModelParams.from_chit(1.0, math.pi / 2, dim=40)


def pytest_terminal_summary(terminalreporter):
    from _acceptance_log import LOG

    if not LOG:
        return
    terminalreporter.section("acceptance criteria")
    for label, passed, detail in LOG:
        terminalreporter.write_line(f"{'PASS' if passed else 'FAIL'}  {label}: {detail}")
