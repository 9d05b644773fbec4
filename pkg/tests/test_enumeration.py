import itertools

import numpy as np
import pytest

from conftest import C
from nearness import (
    BudgetExceeded,
    GroundSet,
    GroundSetTooLarge,
    SetMap,
    contains,
    discrete,
    enumerate_canonical_covers,
    enumerate_maps,
    enumerate_nearness_substructures,
    enumerate_structures,
    enumerate_structures_by_filters,
    find_counterexample,
    generate,
    indiscrete,
    is_nearness,
    is_nearness_exhaustive,
    join,
    membership_oracle,
    naive_canonical_covers,
    refines,
    subset_of,
    wedge,
)
from nearness.enumeration import is_counterexample

X1, X2, X3 = GroundSet(1), GroundSet(2), GroundSet(3)
PATH = C(3, [0, 1], [1, 2])

# Counts confirmed by the backtracking and the filter-everything enumerators.
COVER_COUNTS = {1: 1, 2: 2, 3: 9, 4: 114}


@pytest.mark.parametrize("n, count", sorted(COVER_COUNTS.items()))
def test_cover_universe_matches_naive(n, count):
    ground = GroundSet(n)
    universe = enumerate_canonical_covers(ground)
    assert len(universe) == count
    assert {c.blocks for c in universe.covers} == naive_canonical_covers(ground)
    assert len(set(universe.covers)) == len(universe)


def test_cover_universe_n5_size():
    assert len(enumerate_canonical_covers(GroundSet(5))) == 6894


def test_cover_universe_order_and_examples():
    assert [c.as_lists() for c in enumerate_canonical_covers(X1).covers] == [[[0]]]
    assert [c.as_lists() for c in enumerate_canonical_covers(X2).covers] == [[[0], [1]], [[0, 1]]]
    covers = enumerate_canonical_covers(X3).covers
    assert list(covers) == sorted(covers, key=lambda c: c.sort_key())


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_refinement_matrix_agrees_with_refines(n):
    universe = enumerate_canonical_covers(GroundSet(n))
    r = universe.refinement_matrix
    expected = np.array([[refines(a, b) for b in universe.covers] for a in universe.covers])
    assert (r == expected).all()


@pytest.mark.parametrize("n", [1, 2, 3])
def test_matrix_meet_agrees_with_wedge(n):
    universe = enumerate_canonical_covers(GroundSet(n))
    for i, j in itertools.product(range(len(universe)), repeat=2):
        expected = wedge(universe.covers[i], universe.covers[j])
        assert universe.covers[universe.meet_index(i, j)] == expected


def test_size_gates():
    with pytest.raises(GroundSetTooLarge):
        enumerate_canonical_covers(GroundSet(6))
    with pytest.raises(GroundSetTooLarge):
        naive_canonical_covers(GroundSet(5))
    with pytest.raises(GroundSetTooLarge):
        enumerate_structures(GroundSet(4))
    with pytest.raises(GroundSetTooLarge):
        find_counterexample(GroundSet(4))


def test_structure_enumerators_agree():
    assert len(enumerate_structures(X1)) == 1
    assert enumerate_structures(X2) == [discrete(X2), indiscrete(X2)]
    for ground in (X1, X2, X3):
        assert enumerate_structures(ground) == enumerate_structures_by_filters(ground)
    assert len(enumerate_structures(X3)) == 9


def test_nearness_substructures():
    assert enumerate_nearness_substructures(indiscrete(X3)) == [indiscrete(X3)]
    assert enumerate_nearness_substructures(generate(X3, [PATH])) == [indiscrete(X3)]
    assert enumerate_nearness_substructures(discrete(X2)) == enumerate_structures(X2)


def test_nearness_substructure_family_properties(all_structures):
    for mu in all_structures:
        family = enumerate_nearness_substructures(mu)
        assert indiscrete(mu.ground) in family
        for a, b in itertools.product(family, repeat=2):
            assert join(a, b) in family
        # every ⊆-chain is finite here, so its union is its largest member
        for size in range(1, len(family) + 1):
            for chain in itertools.combinations(family, size):
                if all(subset_of(a, b) or subset_of(b, a) for a, b in itertools.combinations(chain, 2)):
                    top = [c for c in chain if all(subset_of(d, c) for d in chain)]
                    assert len(top) == 1 and top[0] in family


def test_enumerate_maps():
    assert len(enumerate_maps(X1, X1)) == 1
    assert len(enumerate_maps(X2, X2)) == 4
    assert len(enumerate_maps(X3, X2)) == 8
    with pytest.raises(BudgetExceeded):
        enumerate_maps(GroundSet(4), X3)


def test_membership_oracle_examples():
    universe = enumerate_canonical_covers(X3)
    assert membership_oracle([PATH], C(3, [0, 1], [0, 2], [1, 2]), universe)
    assert not membership_oracle([C(3, [0, 1, 2])], C(3, [0], [1], [2]), universe)
    assert all(membership_oracle([C(3, [0], [1], [2])], c, universe) for c in universe.covers)


def test_oracles_agree(all_structures):
    for mu in all_structures:
        universe = enumerate_canonical_covers(mu.ground)
        for c in universe.covers:
            assert contains(mu, c) == membership_oracle(mu.basis, c, universe)
        assert is_nearness(mu) == is_nearness_exhaustive(mu, universe)


def test_counterexample_search():
    assert find_counterexample(X1) is None
    assert find_counterexample(X2) is None
    f, nu, mu_f = find_counterexample(X3)
    assert f == SetMap.identity(X3)
    assert not is_nearness(nu) and not is_nearness(mu_f)
    assert mu_f == nu
    # ↑{01,12}, the relabelled twin of what the search meets first
    assert is_counterexample(SetMap.identity(X3), generate(X3, [PATH]))
