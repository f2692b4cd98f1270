from itertools import product

import pytest
from hypothesis import given

from orbk import InvalidInputError, Partition, Tableau
from orbk.partitions import (
    closure_partitions,
    codim_in_nilradical,
    conjugate,
    nilradical_dim,
    orbit_covers,
    orbit_dim,
    paper_leq,
    partitions_of,
)
from orbk.richardson import SimpleRootSubset, chains_from_subset, closure_members, richardson_tableau
from orbk.tableaux import transpose
from strategies import tableaux

P = Partition


def test_partition_validation():
    with pytest.raises(InvalidInputError):
        Partition((1, 2))
    with pytest.raises(InvalidInputError):
        Partition((2, 0))
    assert Partition.from_json("[3, 2, 1]") == P((3, 2, 1))
    assert P((3, 2, 1)).to_json() == "[3, 2, 1]"


def test_partition_counts():
    assert [len(partitions_of(n)) for n in range(1, 9)] == [1, 2, 3, 5, 7, 11, 15, 22]


def test_paper_leq_examples():
    assert paper_leq((2, 2), (2, 2))
    assert paper_leq((2, 2), (2, 1, 1))
    assert not paper_leq((2, 1, 1), (2, 2))
    with pytest.raises(InvalidInputError):
        paper_leq((2,), (1, 1, 1))


def test_closure_partitions_examples():
    assert closure_partitions((4,)) == set(partitions_of(4))
    assert closure_partitions((1, 1, 1, 1)) == {P((1, 1, 1, 1))}
    assert closure_partitions((2, 2)) == {P((2, 2)), P((2, 1, 1)), P((1, 1, 1, 1))}


def test_orbit_covers_examples():
    assert orbit_covers((1, 1, 1)) == set()
    assert orbit_covers((3, 2, 1)) == {P((3, 1, 1, 1)), P((2, 2, 2))}
    assert orbit_covers((4,)) == {P((3, 1))}


def test_orbit_dim_examples():
    assert orbit_dim((1, 1, 1, 1)) == 0
    assert orbit_dim((2, 2)) == 8
    assert orbit_dim((3, 1, 1, 1)) == 18


def test_nilradical_dim_examples():
    for n in range(1, 7):
        assert nilradical_dim(chains_from_subset(SimpleRootSubset.of(n))) == n * (n - 1) // 2
        assert nilradical_dim(chains_from_subset(SimpleRootSubset.full(n))) == 0
    assert nilradical_dim(chains_from_subset(SimpleRootSubset.of(6, [1, 2, 5]))) == 11


def test_codim_examples():
    I = SimpleRootSubset.of(6, [1, 2, 5])
    chains = chains_from_subset(I).chains
    assert codim_in_nilradical(richardson_tableau(I), chains) == 0
    assert codim_in_nilradical(Tableau(((1, 4, 5), (2,), (3,), (6,))), chains) == 2
    sl4 = chains_from_subset(SimpleRootSubset.of(4, [1])).chains
    assert codim_in_nilradical(Tableau(((1, 3), (2, 4))), sl4) == 1
    with pytest.raises(InvalidInputError):
        codim_in_nilradical(Tableau(((1, 2, 3, 4),)), sl4)


@pytest.mark.parametrize("n", range(1, 9))
def test_paper_leq_is_a_partial_order(n):
    parts = partitions_of(n)
    for a in parts:
        assert paper_leq(a, a)
    for a, b in product(parts, repeat=2):
        if paper_leq(a, b) and paper_leq(b, a):
            assert a == b
    for a, b, c in product(parts, repeat=3):
        if paper_leq(a, b) and paper_leq(b, c):
            assert paper_leq(a, c)


@pytest.mark.parametrize("n", range(1, 9))
def test_conjugation_reverses_the_order(n):
    parts = partitions_of(n)
    for a, b in product(parts, repeat=2):
        assert paper_leq(a, b) == paper_leq(conjugate(b), conjugate(a))


@pytest.mark.parametrize("n", range(1, 9))
def test_orbit_dimensions(n):
    for lam in partitions_of(n):
        assert orbit_dim(lam) % 2 == 0
        assert conjugate(conjugate(lam)) == lam
    assert orbit_dim((n,)) == n * n - n


@pytest.mark.parametrize("n", range(2, 8))
def test_orbit_dim_strictly_drops_along_covers(n):
    for lam in partitions_of(n):
        for mu in orbit_covers(lam):
            assert orbit_dim(mu) < orbit_dim(lam)


@pytest.mark.parametrize("n", range(1, 7))
def test_closure_members_have_shapes_in_the_orbit_closure(n):
    for I in SimpleRootSubset.all_subsets(n):
        lam = richardson_tableau(I).shape
        for t in closure_members(I, bound=n):
            assert paper_leq(lam, t.shape)


@given(tableaux())
def test_shape_of_transpose_is_conjugate(t):
    assert conjugate(t.shape).parts == transpose(t).shape
