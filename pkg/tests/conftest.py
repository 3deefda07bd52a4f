import pytest

from groupoidal.families import adjoin_identity, brandt, chain, group_semigroup, inverse_symmetric
from groupoidal.groups import cyclic_group

ACCEPTANCE_LINES = []


def small_corpus():
    """The corpus of small semigroups used by exhaustive checks."""
    return {
        "I1": inverse_symmetric(1),
        "I2": inverse_symmetric(2),
        "chain2": chain(2),
        "chain3": chain(3),
        "B2": brandt(cyclic_group(1), 2),
        "Z2+1": adjoin_identity(group_semigroup(cyclic_group(2))),
    }


def corpus():
    out = small_corpus()
    out["I3"] = inverse_symmetric(3)
    return out


@pytest.fixture(scope="session")
def I2():
    return inverse_symmetric(2)


@pytest.fixture(scope="session")
def I3():
    return inverse_symmetric(3)


@pytest.fixture(scope="session")
def names(I2):
    """Element indices of I_2 under their usual names."""
    return {
        "0": I2.index("[0,0]"),
        "e1": I2.index("[1,0]"),
        "e2": I2.index("[0,2]"),
        "e12": I2.index("[1,2]"),
        "t": I2.index("[2,1]"),
        "a12": I2.index("[2,0]"),
        "a21": I2.index("[0,1]"),
    }


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
