import random

import pytest
from hypothesis import settings, strategies as st

from garside import braid_structure, normalize

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


@pytest.fixture
def b3():
    return braid_structure(3)


@pytest.fixture
def b4():
    return braid_structure(4)


def word(structure, *letters):
    """``word(B, 1, -2)`` is σ1 σ2⁻¹ over the structure's atoms (1-based)."""
    return normalize(structure, [(structure.atoms[abs(i) - 1], 1 if i > 0 else -1) for i in letters])


def random_element(structure, rng: random.Random, max_len: int = 12):
    letters = [(rng.choice(structure.atoms), rng.choice((1, -1)))
               for _ in range(rng.randint(0, max_len))]
    return normalize(structure, letters)


def words(structure, max_len: int = 12):
    """Hypothesis strategy for normalized random atom words."""
    letter = st.tuples(st.sampled_from(structure.atoms), st.sampled_from((1, -1)))
    return st.lists(letter, max_size=max_len).map(lambda w: normalize(structure, w))


def simple_words(structure, max_len: int = 6):
    """Words in arbitrary simples and their inverses."""
    simples = sorted(structure.simples, key=structure.sort_key)
    letter = st.tuples(st.sampled_from(simples), st.sampled_from((1, -1)))
    return st.lists(letter, max_size=max_len).map(lambda w: normalize(structure, w))


def positive_words(structure, max_len: int = 6):
    letter = st.tuples(st.sampled_from(structure.atoms), st.just(1))
    return st.lists(letter, max_size=max_len).map(lambda w: normalize(structure, w))


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
