import random

import pytest

from m4cyclic.rring import RElem, RPoly

ACCEPTANCE: dict[int, tuple[bool, str]] = {}


def rand_elem(k: int, rng: random.Random) -> RElem:
    return RElem(k, [rng.getrandbits(16) for _ in range(k)])


def rand_poly(n: int, k: int, rng: random.Random) -> RPoly:
    return RPoly(n, k, [rand_elem(k, rng) for _ in range(n)])


@pytest.fixture
def rng():
    return random.Random(16)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(ACCEPTANCE):
        ok, line = ACCEPTANCE[num]
        terminalreporter.write_line(line)
