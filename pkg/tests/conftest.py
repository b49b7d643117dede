import itertools

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from wlc.core import Game
from wlc.verification import three_player_corpus, two_player_corpus

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@st.composite
def games(draw, players=(1, 3), max_choices=3):
    """Small random games with generated names ``p<i>_c<j>``."""
    n = draw(st.integers(*players))
    shape = draw(st.lists(st.integers(1, max_choices), min_size=n, max_size=n))
    names = tuple(tuple(f"p{i + 1}_c{j + 1}" for j in range(k)) for i, k in enumerate(shape))
    profiles = list(itertools.product(*names))
    mask = draw(st.lists(st.booleans(), min_size=len(profiles), max_size=len(profiles)))
    return Game(names, frozenset(p for p, keep in zip(profiles, mask) if keep))


@pytest.fixture(scope="session")
def two_corpus():
    return two_player_corpus(3)


@pytest.fixture(scope="session")
def three_corpus():
    return three_player_corpus(500, 3, seed=2024)
