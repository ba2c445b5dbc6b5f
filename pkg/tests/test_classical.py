from itertools import combinations

import pytest

from nilift.balacarter.orbits import bala_carter_pair, orbit_catalog
from nilift.classical.characters import (
    chi_weight,
    chi_weights,
    component_group_order,
    even_odd_steps,
    evaluate_generator,
    lift_character,
    restriction,
    xi_formula,
)
from nilift.classical.partitions import (
    all_partitions,
    component_basis,
    make_partition_orbit,
    partition_to_diagram,
    partition_to_dynkin,
    valid_partitions,
)
from nilift.classical.spin import spin_representations
from nilift.classical.type_a import (
    central_character,
    component_order,
    formula_lift,
    type_a_lifts,
)
from nilift.cli.commands import cmd_type_a
from nilift.exceptions import (
    DescentInconsistencyException,
    InvalidCartanTypeException,
    InvalidPartitionException,
    InvalidSubsetException,
    WeightDoesNotDescendException,
)
from nilift.lifting.descent import descends
from nilift.lifting.weights import make_levi_weight
from nilift.models.base import Basis, Family
from nilift.models.roots import Weight
from nilift.rootdata.cartan import parse_cartan_type
from nilift.rootdata.root_system import build_root_system


def subsets(items):
    for size in range(len(items) + 1):
        yield from combinations(items, size)


def test_partition_validation():
    assert make_partition_orbit(1, (4, 2)).family == Family.C
    assert make_partition_orbit(0, (5, 3)).family == Family.D
    assert make_partition_orbit(0, (2, 2, 1)).family == Family.B
    with pytest.raises(InvalidPartitionException):
        make_partition_orbit(0, (4, 2))
    with pytest.raises(InvalidPartitionException):
        make_partition_orbit(1, (3, 1))
    with pytest.raises(InvalidPartitionException):
        make_partition_orbit(2, (2, 2))


def test_very_even_node():
    assert make_partition_orbit(0, (4, 4)).very_even_node == 4
    po = make_partition_orbit(0, (4, 4), very_even_node=3)
    assert po.label == "[4, 4]II"
    with pytest.raises(InvalidPartitionException):
        make_partition_orbit(0, (4, 4), very_even_node=2)


@pytest.mark.parametrize(
    "epsilon, parts, B, B_tilde",
    [
        (1, (4, 2), (1, 2, 3), (1, 2)),
        (0, (5, 3), (1, 2), (1,)),
        (0, (2, 2, 1), (3,), ()),
        (0, (5, 3, 1), (1, 2, 3), (1, 2)),
        (0, (4, 4), (), ()),
    ],
)
def test_component_basis(epsilon, parts, B, B_tilde):
    basis = component_basis(make_partition_orbit(epsilon, parts))
    assert basis.B == B
    assert basis.B_tilde == B_tilde
    assert basis.order == 2 ** len(B_tilde)


def test_component_basis_of_c3():
    basis = component_basis(make_partition_orbit(1, (4, 2)))
    assert basis.k_max == 3
    assert basis.successor(1) == 2
    assert basis.successor(3) is None


def test_chi_weights_of_c3():
    po = make_partition_orbit(1, (4, 2))
    weights = {chi.s: chi.weight.coords for chi in chi_weights(po)}
    assert weights == {4: (1, 0, 0), 2: (-1, 0, 1)}


def test_lift_character_of_c3():
    po = make_partition_orbit(1, (4, 2))
    assert lift_character(po, ()).coords == (0, 0, 0)
    assert lift_character(po, (1,)).coords == (1, 0, 0)
    assert lift_character(po, (1, 2)).coords == (0, 0, 1)
    with pytest.raises(InvalidSubsetException):
        lift_character(po, (3,))


def test_evaluate_generator():
    po = make_partition_orbit(1, (4, 2))
    assert evaluate_generator(po, 4, 1) == -1
    assert evaluate_generator(po, 4, 2) == 1
    assert evaluate_generator(po, 2, 1) == -1
    assert evaluate_generator(po, 2, 2) == -1
    assert evaluate_generator(po, 2, 3) == 1
    with pytest.raises(InvalidSubsetException):
        evaluate_generator(po, 2, 4)
    with pytest.raises(InvalidPartitionException):
        evaluate_generator(po, 3, 1)


def test_restriction_of_c3():
    po = make_partition_orbit(1, (4, 2))
    assert restriction(po, (1,)) == {1: -1, 2: 1}
    assert restriction(po, (2,)) == {1: 1, 2: -1}
    assert restriction(po, (1, 2)) == {1: -1, 2: -1}


def partition_orbits(N):
    families = [0] + ([1] if N % 2 == 0 else [])
    for epsilon in families:
        for parts in all_partitions(N):
            try:
                yield make_partition_orbit(epsilon, parts)
            except (InvalidPartitionException, InvalidCartanTypeException):
                continue


@pytest.mark.parametrize("N", range(2, 17))
def test_lifts_restrict_to_their_subset(N):
    # chi_S is -1 exactly on the reduced generators indexed by S
    for po in partition_orbits(N):
        basis = component_basis(po)
        weights = set()
        for S in subsets(basis.B_tilde):
            expected = {k: -1 if k in S else 1 for k in basis.B_tilde}
            assert restriction(po, S) == expected
            weights.add(lift_character(po, S).coords)
        assert len(weights) == basis.order == component_group_order(po)


@pytest.mark.parametrize("N", range(4, 17))
def test_chi_weights_are_orthogonal(N):
    for po in partition_orbits(N):
        rs = build_root_system(po.cartan_type)
        vectors = {
            s: rs.in_basis(chi_weight(po, s).weight, Basis.Root).coords
            for s in even_odd_steps(po)
        }
        for vector in vectors.values():
            assert rs.norm(vector) > 0
        for s, t in combinations(vectors, 2):
            assert rs.inner(vectors[s], vectors[t]) == 0, (po.label, s, t)


@pytest.mark.parametrize("N", range(5, 17))
def test_spin_dimensions_fill_the_simply_connected_group(N):
    for po in partition_orbits(N):
        representations = spin_representations(po).representations
        if not representations:
            continue
        squares = sum(r.dimension ** 2 for r in representations)
        order = component_basis(po).order
        assert order + squares == component_group_order(po, simply_connected=True)


@pytest.mark.parametrize("name", ["B2", "B3", "C2", "C3", "D4"])
def test_lifts_descend_through_the_bala_carter_pair(name):
    cartan_type = parse_cartan_type(name)
    catalog = {orbit.diagram: orbit for orbit in orbit_catalog(build_root_system(cartan_type))}
    for po in valid_partitions(cartan_type):
        orbit = catalog[partition_to_diagram(po)]
        pair = bala_carter_pair(orbit)
        basis = component_basis(po)
        usable = [j for j in basis.B_tilde if chi_weight(po, po.part(j)).in_xi]
        for S in subsets(usable):
            lw = make_levi_weight(orbit, lift_character(po, S))
            assert descends(lw, pair)


@pytest.mark.parametrize(
    "epsilon, parts, diagram",
    [
        (0, (5, 3), (2, 0, 2, 2)),
        (1, (4, 2), (2, 0, 2)),
        (0, (3, 3, 1), (0, 2, 0)),
        (0, (4, 4), (0, 2, 0, 2)),
    ],
)
def test_partition_to_diagram(epsilon, parts, diagram):
    assert partition_to_diagram(make_partition_orbit(epsilon, parts)) == diagram


def test_very_even_flavors_swap_the_spin_nodes():
    po = make_partition_orbit(0, (4, 4), very_even_node=3)
    assert partition_to_diagram(po) == (0, 2, 2, 0)


def test_partition_to_dynkin():
    record = partition_to_dynkin(make_partition_orbit(0, (5, 3)))
    assert record.diagram == (2, 0, 2, 2)
    assert record.name == "[5, 3]"
    type_a = partition_to_dynkin((4,))
    assert type_a.diagram == (2, 2, 2)
    assert type_a.cartan_type.family == Family.A
    assert type_a.cartan_type.rank == 3
    with pytest.raises(InvalidPartitionException):
        partition_to_dynkin((1,))


def test_component_group_orders():
    po = make_partition_orbit(0, (5, 3, 1))
    assert component_group_order(po) == 4
    assert component_group_order(po, simply_connected=True) == 8
    po = make_partition_orbit(0, (3, 3, 1, 1))
    assert component_group_order(po, simply_connected=True) == component_group_order(po)


def test_spin_of_regular_b3():
    result = spin_representations(make_partition_orbit(0, (7,)))
    (representation,) = result.representations
    assert representation.weight.coords == (0, 0, 1)
    assert representation.dimension == 1


def test_spin_of_d4():
    result = spin_representations(make_partition_orbit(0, (5, 3)))
    assert [r.weight.coords for r in result.representations] == [(0, 0, 1, 0), (0, 0, 0, 1)]
    assert all(r.dimension == 1 for r in result.representations)
    assert result.representations[0].minimal_weight.coords == (-1, 0, 1, 0)


def test_spin_of_b4():
    result = spin_representations(make_partition_orbit(0, (5, 3, 1)))
    (representation,) = result.representations
    assert representation.dimension == 2


def test_spin_of_very_even():
    result = spin_representations(make_partition_orbit(0, (4, 4), very_even_node=3))
    (representation,) = result.representations
    assert representation.weight.coords == (0, 0, 1, 0)
    assert representation.dimension == 1


def test_no_spin_representations():
    assert not spin_representations(make_partition_orbit(1, (4, 2))).representations
    result = spin_representations(make_partition_orbit(0, (3, 3, 1, 1)))
    assert not result.representations
    assert result.reason


@pytest.mark.parametrize(
    "parts, weights",
    [
        ((4, 2), [(0, 0, 0, 0, 0), (0, 0, 1, 0, 0)]),
        ((3, 3), [(0, 0, 0, 0, 0), (0, 1, 0, 0, 0), (0, 0, 0, 1, 0)]),
        ((1, 1, 1), [(0, 0)]),
    ],
)
def test_type_a_lifts(parts, weights):
    assert [weight.coords for weight in type_a_lifts(sum(parts), parts)] == weights


def test_central_character():
    (trivial, varpi_3) = type_a_lifts(6, (4, 2))
    assert central_character(6, (4, 2), varpi_3).value == -1
    assert central_character(6, (4, 2), trivial).value == 1
    varpi_1 = Weight(coords=(1, 0, 0, 0, 0), basis=Basis.Fundamental)
    with pytest.raises(WeightDoesNotDescendException):
        central_character(6, (4, 2), varpi_1)


def test_type_a_partition_checks():
    with pytest.raises(InvalidPartitionException):
        component_order(5, (3, 3))
    with pytest.raises(InvalidPartitionException):
        type_a_lifts(1, (1,))


@pytest.mark.parametrize(
    "degree",
    [*range(2, 11), *(pytest.param(degree, marks=pytest.mark.slow) for degree in (11, 12))],
)
def test_type_a_lifts_descend(degree):
    for parts in all_partitions(degree):
        orbit = partition_to_dynkin(parts)
        pair = bala_carter_pair(orbit)
        lifts = type_a_lifts(degree, parts)
        assert len(lifts) == component_order(degree, parts)
        for weight in lifts:
            assert descends(make_levi_weight(orbit, weight), pair)
        characters = {
            tuple(central_character(degree, parts, weight).exponent_counts) for weight in lifts
        }
        assert len(characters) == len(lifts)


@pytest.mark.parametrize("N", range(4, 13))
def test_step_formula_inside_xi(N):
    for po in partition_orbits(N):
        for chi in chi_weights(po):
            assert chi.weight.coords == xi_formula(po, chi.s)


@pytest.mark.parametrize(
    "parts, split",
    [((9, 3), [1, 2]), ((8, 4), [1, 3])],
)
def test_type_a_lifts_avoid_split_blocks(parts, split):
    degree = sum(parts)
    orbit = partition_to_dynkin(parts)
    pair = bala_carter_pair(orbit)
    with pytest.raises(DescentInconsistencyException):
        descends(make_levi_weight(orbit, formula_lift(degree, parts, split[0])), pair)
    lifts = type_a_lifts(degree, parts)
    for j, weight in enumerate(lifts):
        formula = formula_lift(degree, parts, j)
        assert (weight.coords != formula.coords) == (j in split)
        assert descends(make_levi_weight(orbit, weight), pair)
        assert central_character(degree, parts, weight).exponent_counts == {j: 1}


def test_cli_reports_replaced_type_a_lifts():
    record = cmd_type_a("9,3")
    assert [lift.replaces for lift in record.lifts] == ["", "w4", "w8"]
