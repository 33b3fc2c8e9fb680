import random

import pytest

from spherica.dynkin import build
from spherica.garside import BraidWord
from spherica.zigzag import ZigzagAlgebra

ACCEPTANCE_LINES: list[str] = []


def random_positive(d, rng, max_len, min_len=0):
    return BraidWord.positive(d, [rng.choice(d.nodes) for _ in range(rng.randint(min_len, max_len))])


def random_word(d, rng, max_len, min_len=0):
    n = rng.randint(min_len, max_len)
    return BraidWord(d, tuple((rng.choice(d.nodes), rng.choice((1, -1))) for _ in range(n)))


@pytest.fixture
def rng():
    return random.Random(20240601)


@pytest.fixture(scope="session")
def a2():
    return build("A", 2)


@pytest.fixture(scope="session")
def a3():
    return build("A", 3)


@pytest.fixture(scope="session")
def d4():
    return build("D", 4)


@pytest.fixture(scope="session")
def alg_a3(a3):
    return ZigzagAlgebra(a3)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def factor_count_and_top(nf):
    """(k, w_k) for a positive normal form, each power of Delta counting as a factor w_0."""
    from spherica import weyl
    k = nf.k + nf.delta_power
    top = nf.factors[0] if nf.factors else weyl.longest_element(nf.diagram)
    return k, top
