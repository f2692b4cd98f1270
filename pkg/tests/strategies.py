"""Hypothesis strategies shared by the test modules."""

from hypothesis import strategies as st

from orbk.richardson import SimpleRootSubset
from orbk.tableaux import rs_tableau
from orbk.words import Word


@st.composite
def permutations(draw, min_n=1, max_n=7):
    n = draw(st.integers(min_n, max_n))
    return Word(tuple(draw(st.permutations(range(1, n + 1)))))


@st.composite
def tableaux(draw, min_n=1, max_n=7):
    # every standard tableau is the insertion tableau of some permutation
    return rs_tableau(draw(permutations(min_n, max_n)))


@st.composite
def subsets(draw, min_n=1, max_n=10):
    n = draw(st.integers(min_n, max_n))
    chosen = draw(st.sets(st.integers(1, n - 1), max_size=n - 1)) if n > 1 else set()
    return SimpleRootSubset.of(n, chosen)
