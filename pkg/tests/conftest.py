import pytest
from hypothesis import strategies as st

from regroot import Dfa, Transformation


def transformations(degree: int) -> st.SearchStrategy[Transformation]:
    return st.lists(
        st.integers(1, degree), min_size=degree, max_size=degree
    ).map(Transformation)


@st.composite
def same_degree_triples(draw, max_degree=7):
    n = draw(st.integers(1, max_degree))
    return tuple(draw(transformations(n)) for _ in range(3))


@st.composite
def small_dfas(draw, max_states=5, max_letters=3):
    n = draw(st.integers(1, max_states))
    k = draw(st.integers(1, max_letters))
    alphabet = tuple("abc"[:k])
    delta = tuple(
        tuple(draw(st.integers(1, n)) for _ in range(n)) for _ in range(k)
    )
    start = draw(st.integers(1, n))
    finals = frozenset(q for q in range(1, n + 1) if draw(st.booleans()))
    return Dfa(n, alphabet, delta, start, finals)


EXAMPLE_DFA_TEXT = """\
# five points, double cycle against a collapsing map
states 5
alphabet a b
start 1
finals 1
trans a 2 1 4 5 3
trans b 2 3 4 1 2
"""


@pytest.fixture
def example_dfa():
    from regroot import parse

    return parse(EXAMPLE_DFA_TEXT)
