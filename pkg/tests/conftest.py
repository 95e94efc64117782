import random

import pytest
from hypothesis import strategies as st

from agol.errors import NotInIn
from agol.quad import QuadExt
from agol.words import ParamWord, validate


def random_word(rng: random.Random, max_n: int, max_entry: int) -> ParamWord:
    """Rejection-sample a member of I_n with 1 <= n <= max_n."""
    while True:
        n = rng.randint(1, max_n)
        try:
            return validate([rng.randint(0, max_entry) for _ in range(3 * n)])
        except NotInIn:
            continue


def word_corpus(seed: int, count: int, max_n: int, max_entry: int = 3) -> list[ParamWord]:
    rng = random.Random(seed)
    return [random_word(rng, max_n, max_entry) for _ in range(count)]


@st.composite
def words(draw, max_n=3, max_entry=4):
    n = draw(st.integers(1, max_n))
    triples = []
    for _ in range(n):
        s = draw(st.integers(1, max_entry))
        p = draw(st.integers(0, s))
        triples.append((p, s - p, draw(st.integers(1, max_entry))))
    flat = [v for t in triples for v in t]
    # force the two existence clauses
    if not any(t[0] for t in triples):
        flat[0], flat[1] = flat[1], flat[0]
    if not any(flat[3 * i + 1] for i in range(n)):
        i = draw(st.integers(0, n - 1))
        flat[3 * i + 1] += 1
    return validate(flat)


SMALL = st.integers(-50, 50)


@st.composite
def field_elements(draw, d=5):
    """Elements of Q(sqrt(d)) with small coefficients; rationals included."""
    a, b = draw(SMALL), draw(SMALL)
    c = draw(st.integers(1, 30))
    return QuadExt(a, b, c, d)


@pytest.fixture
def report(capsys):
    """Print a line straight to the terminal, bypassing capture."""
    def emit(line: str) -> None:
        with capsys.disabled():
            print(line)
    return emit
