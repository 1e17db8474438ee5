"""
Birkhoff duality between finite posets and finite distributive lattices.
"""
from itertools import combinations

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from cubical_lab.duality import (
    FinitePoset,
    InvolutivePoset,
    duality_roundtrip,
    enumerate_lower_sets,
    find_isomorphism,
    join_irreducibles,
    lower_set_involution,
    lower_sets,
    verify_isomorphism,
)
from cubical_lab.lattice import FiniteLattice
from cubical_lab.utils.errors import CapacityError, InputError

ROUND_TRIP_LATTICES = (
    [FiniteLattice.chain(k) for k in range(2, 7)]
    + [FiniteLattice.boolean(n) for n in range(1, 4)]
    + [FiniteLattice.free(n) for n in range(4)]
)


@pytest.mark.parametrize("lattice", ROUND_TRIP_LATTICES, ids=lambda lattice: lattice.name)
def test_lattice_is_lower_sets_of_its_irreducibles(lattice):
    witness = duality_roundtrip(lattice)
    down = lower_sets(join_irreducibles(lattice))
    assert sorted(witness.mapping) == sorted(lattice.elements)
    assert verify_isomorphism(lattice, down, witness.mapping)
    assert witness.mapping[lattice.bottom] == "{}"


@pytest.mark.parametrize("n", range(4))
def test_irreducibles_of_free_lattice_form_a_cube(n):
    irreducibles = join_irreducibles(FiniteLattice.free(n))
    assert irreducibles.size == 2 ** n
    assert find_isomorphism(irreducibles, FinitePoset.power_of_two(n)) is not None


@pytest.mark.parametrize("k", range(2, 7))
def test_irreducibles_of_a_chain(k):
    irreducibles = join_irreducibles(FiniteLattice.chain(k))
    assert find_isomorphism(irreducibles, FinitePoset.chain(k - 1)) is not None


def test_boolean_irreducibles_are_atoms():
    irreducibles = join_irreducibles(FiniteLattice.boolean(3))
    assert irreducibles.elements == ("a", "b", "c")
    assert find_isomorphism(irreducibles, FinitePoset.antichain(3)) is not None


def test_poset_round_trip():
    poset = FinitePoset.from_order(["p", "q", "r"], [("p", "r"), ("q", "r")], name="V")
    down = lower_sets(poset)
    assert down.size == 5
    assert down.name == "Down(V)"
    assert find_isomorphism(join_irreducibles(down), poset) is not None


def test_lower_sets_of_antichain_are_boolean():
    down = lower_sets(FinitePoset.antichain(3))
    assert find_isomorphism(down, FiniteLattice.boolean(3)) is not None
    assert len(enumerate_lower_sets(FinitePoset.chain(4))) == 5


def test_isomorphism_search_rejects_different_shapes():
    assert find_isomorphism(FinitePoset.chain(3), FinitePoset.antichain(3)) is None
    assert find_isomorphism(FinitePoset.chain(3), FinitePoset.chain(4)) is None


def test_verify_isomorphism_rejects_order_breaking_maps():
    chain = FinitePoset.chain(2)
    assert verify_isomorphism(chain, chain, {"c0": "c0", "c1": "c1"})
    assert not verify_isomorphism(chain, chain, {"c0": "c1", "c1": "c0"})


def test_lower_set_involution_is_an_order_reversing_involution():
    poset = FinitePoset.antichain(2)
    involutive = InvolutivePoset(poset, (("p0", "p1"), ("p1", "p0")))
    negation = lower_set_involution(involutive)
    down = lower_sets(poset)
    assert set(negation) == set(down.elements)
    for label, image in negation.items():
        assert negation[image] == label
    for a in down.elements:
        for b in down.elements:
            if down.leq(a, b):
                assert down.leq(negation[b], negation[a])
    assert negation["{}"] == "{p0,p1}"


def test_involution_must_reverse_order():
    with pytest.raises(InputError):
        InvolutivePoset(FinitePoset.chain(2), (("c0", "c0"), ("c1", "c1")))


def test_poset_validation():
    with pytest.raises(InputError):
        FinitePoset(("a", "b"), frozenset({("a", "b"), ("b", "a"), ("a", "a"), ("b", "b")}))
    with pytest.raises(InputError):
        FinitePoset.from_dict({"leq": []})


def test_lower_set_enumeration_is_bounded():
    with pytest.raises(CapacityError):
        enumerate_lower_sets(FinitePoset.antichain(17))


def test_poset_dict_round_trip():
    poset = FinitePoset.power_of_two(2)
    again = FinitePoset.from_dict(poset.to_dict())
    assert again.order == poset.order


def naturally_labelled_posets(n):
    """Every poset on n elements up to isomorphism, each generated from pairs i < j."""
    names = [f"p{i}" for i in range(n)]
    pairs = list(combinations(range(n), 2))
    seen = set()
    for mask in range(2 ** len(pairs)):
        chosen = [(names[a], names[b]) for k, (a, b) in enumerate(pairs) if mask >> k & 1]
        poset = FinitePoset.from_order(names, chosen)
        if poset.order not in seen:
            seen.add(poset.order)
            yield poset


def assert_recovered_from_lower_sets(poset):
    assert find_isomorphism(join_irreducibles(lower_sets(poset)), poset) is not None


@pytest.mark.parametrize("n", range(1, 5))
def test_every_small_poset_is_recovered_from_its_lower_sets(n):
    for poset in naturally_labelled_posets(n):
        assert_recovered_from_lower_sets(poset)


@pytest.mark.slow
def test_every_five_element_poset_is_recovered_from_its_lower_sets():
    posets = list(naturally_labelled_posets(5))
    assert len(posets) == 357
    for poset in posets:
        assert_recovered_from_lower_sets(poset)


@st.composite
def small_posets(draw):
    n = draw(st.integers(1, 4))
    names = [f"p{i}" for i in range(n)]
    pairs = list(combinations(names, 2))
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return FinitePoset.from_order(names, [pair for pair, keep in zip(pairs, mask) if keep])


@given(small_posets())
def test_downset_lattices_round_trip(poset):
    lattice = lower_sets(poset)
    assume(lattice.size <= 8)
    witness = duality_roundtrip(lattice)
    assert verify_isomorphism(lattice, lower_sets(join_irreducibles(lattice)), witness.mapping)
