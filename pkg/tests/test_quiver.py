import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from parkbases.bijection import initial_vector, reconstruct
from parkbases.dbasis import is_basis, to_arcs
from parkbases.parking import (
    catalan,
    is_parking,
    nondecreasing_parking_functions,
    parking_functions,
)
from parkbases.quiver import (
    IntervalModule,
    ext_dim,
    euler,
    filtration_level,
    has_mono,
    hom_dim,
    hom_dim_oracle,
    hom_ext_table,
    is_exceptional_sequence,
    is_nondecreasing_collection,
    modules_of,
)
from parkbases.roots import Root, positive_roots, seifert

from helpers import all_bases, basis_of_pairs


def mod(lo, hi, n):
    return IntervalModule(Root(lo, hi, n))


def test_interval_module_materialisation():
    v = mod(2, 3, 4)
    assert v.space_dims() == (0, 1, 1, 0)
    assert [v.arrow(i) for i in range(1, 4)] == [0, 1, 0]


def test_euler_is_seifert():
    for n in range(1, 6):
        for a, b in itertools.product(positive_roots(n), repeat=2):
            assert euler(IntervalModule(a), IntervalModule(b)) == seifert(a, b)


def test_hom_examples():
    assert hom_dim(mod(2, 2, 2), mod(1, 2, 2)) == 1  # submodule, shared right end
    assert hom_dim(mod(1, 2, 2), mod(2, 2, 2)) == 0
    assert hom_dim(mod(1, 2, 2), mod(1, 2, 2)) == 1
    assert hom_dim_oracle(mod(2, 2, 2), mod(1, 2, 2)) == 1
    assert hom_dim_oracle(mod(1, 2, 2), mod(2, 2, 2)) == 0


def test_ext_examples():
    assert ext_dim(mod(1, 1, 2), mod(2, 2, 2)) == 1
    assert ext_dim(mod(2, 2, 2), mod(1, 1, 2)) == 0
    assert ext_dim(mod(1, 2, 2), mod(1, 2, 2)) == 0


def test_rank_mismatch():
    with pytest.raises(ValueError):
        hom_dim(mod(1, 1, 2), mod(1, 1, 3))


@pytest.mark.parametrize("n", range(1, 7))
def test_hom_matches_oracle(n):
    for a, b in itertools.product(positive_roots(n), repeat=2):
        v, w = IntervalModule(a), IntervalModule(b)
        assert hom_dim(v, w) == hom_dim_oracle(v, w)
        assert euler(v, w) == hom_dim(v, w) - ext_dim(v, w)


@pytest.mark.parametrize("n", range(1, 7))
def test_conditional_ext_formula(n):
    for a, b in itertools.product(positive_roots(n), repeat=2):
        if seifert(b, a) == 0:
            expected = 1 if a.hi + 1 == b.lo else 0
            assert ext_dim(IntervalModule(a), IntervalModule(b)) == expected


def test_exceptional_examples():
    n = 3
    assert is_exceptional_sequence(modules_of(basis_of_pairs([(1, 1), (2, 2), (3, 3)], n)))
    assert not is_exceptional_sequence(
        modules_of((Root(2, 2, 2), Root(1, 1, 2)))
    )  # ext from later to earlier... hom/ext pair fails via seifert
    assert not is_exceptional_sequence(modules_of(basis_of_pairs([(1, 1), (1, 2)], 2)))


@pytest.mark.parametrize("n", range(1, 4))
def test_exceptional_equals_validate(n):
    for tup in itertools.product(positive_roots(n), repeat=n):
        assert is_exceptional_sequence(modules_of(tup)) == is_basis(tup, n)


def test_hom_ext_table_reconstructed_sequence():
    basis = reconstruct((2, 1, 1))
    hom, ext = hom_ext_table(modules_of(basis))
    mods = modules_of(basis)
    for i in range(3):
        for j in range(3):
            assert hom[i][j] == hom_dim_oracle(mods[i], mods[j])
            assert ext[i][j] == hom[i][j] - euler(mods[i], mods[j])
    # later-to-earlier entries vanish in an exceptional sequence
    for j in range(3):
        for i in range(j):
            assert hom[j][i] == 0 and ext[j][i] == 0


def test_hom_ext_table_simple_roots():
    n = 5
    hom, ext = hom_ext_table(modules_of(reconstruct(tuple(range(1, n + 1)))))
    for i in range(n):
        for j in range(n):
            assert ext[i][j] == (1 if j == i + 1 else 0)
            assert hom[i][j] == (1 if i == j else 0)


@pytest.mark.parametrize("n", range(2, 6))
def test_hom_ext_table_diagram_reading(n):
    for basis in all_bases(n):
        hom_ext_table(modules_of(basis))  # raises if the geometric reading disagrees


def test_diagram_reading_has_indirect_ext_witness():
    # some Ext entry must point at a column whose stopping corner has a label
    # different from the target: the reading is genuinely about columns
    found = False
    for n in range(2, 6):
        for basis in all_bases(n):
            f = initial_vector(basis)
            mods = modules_of(basis)
            for i in range(n):
                for j in range(i + 1, n):
                    if ext_dim(mods[i], mods[j]) == 1:
                        others = [
                            k for k in range(n) if k != j and f[k] == f[j]
                        ]
                        if others:
                            found = True
    assert found


def test_filtration_level():
    assert filtration_level(mod(3, 7, 8)) == 3


@pytest.mark.parametrize("n", range(1, 6))
def test_levels_form_parking_function_and_determine_sequence(n):
    seen = set()
    for basis in all_bases(n):
        levels = tuple(filtration_level(m) for m in modules_of(basis))
        assert levels == initial_vector(basis)
        assert is_parking(levels)
        assert levels not in seen
        seen.add(levels)
        assert reconstruct(levels) == basis


def test_nondecreasing_collection_examples():
    assert is_nondecreasing_collection(modules_of(reconstruct((1, 1, 2, 2, 2, 4, 6))))
    mods = modules_of(reconstruct((2, 1, 1)))
    assert not is_nondecreasing_collection(mods)
    assert has_mono(mods[0], mods[2])  # [2,2] embeds into [1,2]


@pytest.mark.parametrize("n", range(2, 7))
def test_nondecreasing_families_coincide(n):
    # order-free equivalence plus the set-level bijection with Catalan count
    bases = (
        all_bases(n)
        if n <= 5
        else tuple(reconstruct(f) for f in parking_functions(n))
    )
    nd_sets = set()
    nomono_sets = set()
    for basis in bases:
        arcs = frozenset(to_arcs(basis).arcs)
        levels = initial_vector(basis)
        nomono = is_nondecreasing_collection(modules_of(basis))
        distinct_right = len({right for _, right in arcs}) == n
        assert nomono == distinct_right
        if all(levels[i] <= levels[i + 1] for i in range(n - 1)):
            assert nomono
            nd_sets.add(arcs)
        if nomono:
            nomono_sets.add(arcs)
    assert nd_sets == nomono_sets
    assert len(nd_sets) == catalan(n)
    image = {
        frozenset(to_arcs(reconstruct(f)).arcs) for f in nondecreasing_parking_functions(n)
    }
    assert image == nd_sets


@given(st.integers(min_value=1, max_value=10), st.data())
def test_hom_oracle_property(n, data):
    lo1 = data.draw(st.integers(min_value=1, max_value=n))
    hi1 = data.draw(st.integers(min_value=lo1, max_value=n))
    lo2 = data.draw(st.integers(min_value=1, max_value=n))
    hi2 = data.draw(st.integers(min_value=lo2, max_value=n))
    v, w = mod(lo1, hi1, n), mod(lo2, hi2, n)
    assert hom_dim(v, w) == hom_dim_oracle(v, w)
    assert ext_dim(v, w) in (0, 1)
