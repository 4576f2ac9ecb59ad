import pytest

from modules.configs.builtins import (
    parameter_set,
    stabilizer_x_matrices,
    stabilizer_xtilde_matrices,
    stabilizer_y_matrices,
)
from modules.core.field import RATIONALS
from modules.core.groups import (
    INFINITE,
    classify,
    generate_closure,
    induced_permutation,
    is_even,
    label_alias,
    permutes,
    stabilizer,
)
from modules.core.projective import PglMap, ProjPoint
from modules.custom_errors import GroupError, InfiniteGroupError, RepeatedPointError

A4_HISTOGRAM = {1: 1, 2: 3, 3: 8}
S4_HISTOGRAM = {1: 1, 2: 9, 3: 8, 4: 6}


def rational_points(*pairs):
    return [ProjPoint.of(RATIONALS, pair) for pair in pairs]


def test_three_points_have_symmetric_stabilizer():
    group = stabilizer(rational_points((1, 0), (0, 1), (1, 1)))
    assert group.order == 6
    assert group.label == "D(6)"
    assert label_alias(group.label) == "S3"
    assert group.histogram == {1: 1, 2: 3, 3: 2}


def test_harmonic_quadruple_has_dihedral_stabilizer():
    group = stabilizer(rational_points((1, 0), (0, 1), (1, 1), (-1, 1)))
    assert group.order == 8
    assert group.label == "D(8)"


def test_penrose_parameters_stabilizer_is_a4():
    group = stabilizer(parameter_set("X"))
    assert (group.order, group.label) == (12, "A4")
    assert group.histogram == A4_HISTOGRAM
    assert group.element_set() == frozenset(stabilizer_x_matrices())
    assert all(is_even(p) for p in group.permutations)


def test_l8_parameters_stabilizer_matches_listed_maps():
    group = stabilizer(parameter_set("Y"))
    assert (group.order, group.label) == (12, "A4")
    assert group.element_set() == frozenset(stabilizer_y_matrices())


@pytest.mark.parametrize("name", ["Xtilde", "Ytilde", "E"])
def test_extended_sets_have_octahedral_stabilizers(name):
    group = stabilizer(parameter_set(name))
    assert (group.order, group.label) == (24, "S4")
    assert group.histogram == S4_HISTOGRAM


def test_xtilde_stabilizer_is_the_listed_24_maps():
    assert stabilizer(parameter_set("Xtilde")).element_set() == frozenset(stabilizer_xtilde_matrices())


def test_stabilizer_elements_permute_the_set():
    points = parameter_set("E")
    group = stabilizer(points)
    for m, perm in zip(group.elements, group.permutations):
        assert permutes(m, points)
        assert induced_permutation(m, points) == perm
        assert sorted(perm) == list(range(len(points)))


def test_stabilizer_preconditions():
    with pytest.raises(GroupError):
        stabilizer(rational_points((1, 0), (0, 1)))
    with pytest.raises(RepeatedPointError):
        stabilizer(rational_points((1, 0), (0, 1), (2, 0)))


def test_closure_of_an_involution_is_cyclic():
    group = generate_closure([PglMap.from_rows([[0, 1], [1, 0]], RATIONALS)])
    assert (group.order, group.label) == (2, "C(2)")


def test_closure_of_identity_is_trivial():
    group = generate_closure([], field=RATIONALS)
    assert (group.order, group.label) == (1, "Trivial")
    with pytest.raises(GroupError):
        generate_closure([])


def test_closure_stops_at_cap():
    shear = PglMap.from_rows([[1, 1], [0, 1]], RATIONALS)
    group = generate_closure([shear], cap=50)
    assert not group.is_finite
    assert group.label == INFINITE
    assert group.cap == 50
    with pytest.raises(InfiniteGroupError):
        classify(group)


def test_closure_of_listed_maps_is_the_whole_group():
    listed = stabilizer_x_matrices()
    gens = [listed[1], listed[8]]
    group = generate_closure(gens)
    assert group.order == 12
    assert group.element_set() == frozenset(stabilizer_x_matrices())


def test_parity():
    assert is_even((0, 1, 2))
    assert not is_even((1, 0, 2))
    assert is_even((1, 2, 0))
