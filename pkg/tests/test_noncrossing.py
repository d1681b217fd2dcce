import pytest

from parkbases.bijection import initial_vector
from parkbases.noncrossing import (
    NCChain,
    NCPartition,
    chain_to_basis,
    maximal_chains,
    merge_label,
    partition,
    partition_chain,
    singletons,
    stanley_labels,
)
from parkbases.parking import is_parking, parking_functions
from parkbases.roots import Root

from helpers import all_bases, basis_of_pairs


def test_partition_canonicalisation_and_validation():
    p = partition([[2], [0, 1]])
    assert p.blocks == ((0, 1), (2,))
    with pytest.raises(ValueError):
        partition([[0, 2], [1, 3]])  # crossing
    with pytest.raises(ValueError):
        partition([[0], [2]])  # not a range
    assert partition([[0, 1, 3], [2]]).n == 3  # nested is fine


def test_chain_validation():
    good = NCChain((singletons(2), partition([[0, 1], [2]]), partition([[0, 1, 2]])))
    assert good.n == 2
    with pytest.raises(ValueError):
        NCChain((singletons(2), partition([[0, 1, 2]])))  # skips a level
    with pytest.raises(ValueError):
        NCChain((partition([[0, 1], [2]]), partition([[0, 1, 2]])))  # wrong start


def test_rank2_worked_chain():
    basis = basis_of_pairs([(1, 1), (2, 2)], 2)
    chain = partition_chain(basis)
    assert [p.blocks for p in chain.partitions] == [
        ((0,), (1,), (2,)),
        ((0, 1), (2,)),
        ((0, 1, 2),),
    ]
    assert stanley_labels(chain) == (0, 1)
    assert chain_to_basis(chain) == basis


def test_first_merge_of_long_root():
    chain = partition_chain((Root(1, 4, 4), Root(1, 1, 4), Root(2, 2, 4), Root(3, 3, 4)))
    assert chain.partitions[1].blocks == ((0, 4), (1,), (2,), (3,))


def test_merge_label_readings_agree():
    lower = partition([[0], [1, 2], [3]])
    upper = partition([[0, 3], [1, 2]])
    assert merge_label(lower, upper) == 0


@pytest.mark.parametrize("n,count", [(1, 1), (2, 3), (3, 16), (4, 125)])
def test_chain_counts(n, count):
    chains = list(maximal_chains(n))
    assert len(chains) == count
    assert len(set(chains)) == count


@pytest.mark.parametrize("n", range(1, 6))
def test_stanley_bijection(n):
    labels = set()
    for chain in maximal_chains(n):
        lab = stanley_labels(chain)
        labels.add(lab)
        shifted = tuple(v + 1 for v in lab)
        assert is_parking(shifted)
    assert len(labels) == (n + 1) ** (n - 1)
    assert {tuple(v + 1 for v in lab) for lab in labels} == set(parking_functions(n))


@pytest.mark.parametrize("n", range(1, 6))
def test_composite_identity_and_round_trip(n):
    for basis in all_bases(n):
        chain = partition_chain(basis)
        assert tuple(v + 1 for v in stanley_labels(chain)) == initial_vector(basis)
        assert chain_to_basis(chain) == basis


@pytest.mark.parametrize("n", range(1, 6))
def test_chain_partitions_are_noncrossing(n):
    for chain in maximal_chains(n):
        for part in chain.partitions:
            NCPartition(part.blocks)  # re-validates the non-crossing property


def test_chain_round_trip_from_enumeration():
    for chain in maximal_chains(4):
        assert partition_chain(chain_to_basis(chain)) == chain


def test_shifted_labels_are_parking_rank6():
    from parkbases.bijection import reconstruct

    for f in parking_functions(6):
        labels = stanley_labels(partition_chain(reconstruct(f)))
        assert tuple(v + 1 for v in labels) == f
