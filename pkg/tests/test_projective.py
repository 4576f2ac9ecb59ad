import random

import pytest

from modules.core.field import CYCLOTOMIC5, EISENSTEIN, GAUSSIAN, RATIONALS
from modules.core.projective import (
    Morphism,
    ParamLine,
    PglMap,
    ProjPoint,
    apply_map,
    canonicalize,
    compose,
    element_order,
    line_intersection,
    lines_skew,
    mobius_from_triples,
    projection_matrix,
    wedge4,
)
from modules.custom_errors import (
    DegenerateTripleError,
    DimensionMismatchError,
    EndpointMismatchError,
    GeometryError,
    RepeatedPointError,
    SingularMatrixError,
)


def point(*values, field=RATIONALS):
    return ProjPoint.of(field, values)


def pgl(rows, field=RATIONALS):
    return PglMap.from_rows(rows, field)


def random_scalar(rng, field):
    return field.element([rng.randint(-3, 3) for _ in range(field.degree)])


def random_point(rng, field):
    while True:
        values = [random_scalar(rng, field), random_scalar(rng, field)]
        if any(not v.is_zero() for v in values):
            return ProjPoint(values)


def random_map(rng, field):
    while True:
        entries = [[random_scalar(rng, field) for _ in range(2)] for _ in range(2)]
        if not (entries[0][0] * entries[1][1] - entries[0][1] * entries[1][0]).is_zero():
            return canonicalize(entries)


def distinct_points(rng, field, count=3):
    while True:
        points = [random_point(rng, field) for _ in range(count)]
        if len(set(points)) == count:
            return points


def test_points_are_stored_canonically():
    p = point(0, 2, 4, 6)
    assert p == point(0, 1, 2, 3)
    assert p.coords[1] == 1
    assert hash(p) == hash(point(0, -1, -2, -3))
    assert p.to_json() == [0, 1, 2, 3]


def test_zero_vector_is_not_a_point():
    with pytest.raises(GeometryError):
        point(0, 0, 0, 0)
    with pytest.raises(DimensionMismatchError):
        point(1)


def test_line_parameters_round_trip(t):
    line = ParamLine.of(EISENSTEIN, (1, 0, -t ** 2, -t ** 2), (1, 0, -t, -t))
    param = point(t, 1, field=EISENSTEIN)
    ambient = line.point_at(param)
    assert line.contains(ambient)
    assert line.parameter_of(ambient) == param


def test_parameter_of_rejects_points_off_the_line():
    line = ParamLine.of(RATIONALS, (1, 0, 0, 0), (0, 1, 0, 0))
    with pytest.raises(GeometryError):
        line.parameter_of(point(0, 0, 1, 0))


def test_dependent_basis_rejected():
    with pytest.raises(GeometryError):
        ParamLine.of(RATIONALS, (1, 2, 3, 4), (2, 4, 6, 8))


def test_same_line_ignores_basis_choice():
    first = ParamLine.of(RATIONALS, (1, 0, 1, 0), (0, 1, 0, 1))
    second = ParamLine.of(RATIONALS, (1, 1, 1, 1), (1, -1, 1, -1))
    assert first.same_line(second)


def test_intersection_and_skewness(d4, quadric4):
    assert line_intersection(d4.lines[0], d4.lines[1]) == point(0, 0, 0, 1)
    assert not lines_skew(d4.lines[0], d4.lines[1])
    a, b = quadric4.lines[:2]
    assert lines_skew(a, b)
    assert line_intersection(a, b) is None
    with pytest.raises(GeometryError):
        line_intersection(a, ParamLine.of(RATIONALS, (1, 1, 0, 0), (1, -1, 0, 0)))


def test_wedge_is_alternating():
    e = [point(*[1 if r == c else 0 for c in range(4)]) for r in range(4)]
    assert wedge4(*e) == 1
    assert wedge4(e[1], e[0], e[2], e[3]) == -1
    assert wedge4(e[0], e[0], e[2], e[3]).is_zero()


def test_quadric_projection_is_the_identity(quadric4):
    a, b, c, d = quadric4.lines
    assert projection_matrix(a, b, c).is_identity()
    assert (projection_matrix(c, d, a) @ projection_matrix(a, b, c)).is_identity()


def test_projection_inverse_law(penrose):
    u, v, w = penrose.lines[0], penrose.lines[1], penrose.lines[2]
    forward = projection_matrix(u, v, w)
    assert (projection_matrix(w, v, u) @ forward).is_identity()
    assert projection_matrix(w, v, u) == forward.inverse()


def test_projected_point_is_on_the_auxiliary_transversal(penrose, t):
    u, v, w = penrose.lines[0], penrose.lines[1], penrose.lines[2]
    m = projection_matrix(u, v, w)
    p = point(t, 1, field=EISENSTEIN)
    image = w.point_at(apply_map(m, p))
    assert wedge4(u.point_at(p), image, v.basis0, v.basis1).is_zero()


def test_auxiliary_meeting_an_endpoint_is_degenerate(d4):
    with pytest.raises(DegenerateTripleError) as info:
        projection_matrix(d4.lines[0], d4.lines[1], d4.lines[5])
    assert info.value.pair == ("U", "V")


def test_canonical_maps():
    m = pgl([[2, 4], [6, 8]])
    assert m == pgl([[1, 2], [3, 4]])
    assert m.entries[0] == 1
    assert pgl([[0, 3], [3, 0]]) == pgl([[0, 1], [1, 0]])
    with pytest.raises(SingularMatrixError):
        canonicalize([[RATIONALS.one, RATIONALS.one], [RATIONALS.one, RATIONALS.one]])


def test_element_orders(t, i):
    assert element_order(pgl([[0, -1], [1, 0]])) == 2
    assert element_order(pgl([[t, 0], [0, 1]], EISENSTEIN)) == 3
    assert element_order(pgl([[1, -i], [-i, 1]], GAUSSIAN)) == 4
    assert element_order(PglMap.identity(RATIONALS)) == 1


def test_parabolic_has_infinite_order():
    shear = pgl([[1, 1], [0, 1]])
    assert shear.is_parabolic()
    assert element_order(shear) is None
    assert shear.power(3) == pgl([[1, 3], [0, 1]])
    assert shear.power(-1) == shear.inverse()


def test_mobius_from_triples():
    zero, inf, one = point(0, 1), point(1, 0), point(1, 1)
    assert mobius_from_triples([inf, zero, one], [inf, zero, one]).is_identity()
    swap = mobius_from_triples([inf, zero, one], [zero, inf, one])
    assert swap == pgl([[0, 1], [1, 0]])
    with pytest.raises(RepeatedPointError):
        mobius_from_triples([inf, inf, one], [inf, zero, one])


def test_composition_checks_endpoints():
    m = pgl([[0, 1], [1, 0]])
    first, second = Morphism(0, 1, m), Morphism(1, 2, m)
    composed = compose(second, first)
    assert (composed.src, composed.dst) == (0, 2)
    assert composed.map.is_identity()
    with pytest.raises(EndpointMismatchError):
        compose(first, first)


def test_mobius_swapping_zero_and_infinity_fixes_t(t):
    zero, inf, fixed = point(0, 1, field=EISENSTEIN), point(1, 0, field=EISENSTEIN), point(t, 1, field=EISENSTEIN)
    m = mobius_from_triples([inf, zero, fixed], [zero, inf, fixed])
    assert m == pgl([[0, t ** 2], [1, 0]], EISENSTEIN)


@pytest.mark.parametrize("field", [RATIONALS, EISENSTEIN, GAUSSIAN, CYCLOTOMIC5])
def test_mobius_from_random_triples_hits_its_targets(field):
    rng = random.Random(11)
    for _ in range(25):
        src, dst = distinct_points(rng, field), distinct_points(rng, field)
        m = mobius_from_triples(src, dst)
        assert [apply_map(m, p) for p in src] == dst


def test_apply_map_on_a_listed_parameter(t):
    m = pgl([[-1, 2 * t + 1], [1, 1]], EISENSTEIN)
    assert apply_map(m, point(1, 0, field=EISENSTEIN)) == point(-1, 1, field=EISENSTEIN)
    assert apply_map(PglMap.identity(EISENSTEIN), point(t, 1, field=EISENSTEIN)) == point(t, 1, field=EISENSTEIN)


@pytest.mark.parametrize("field", [EISENSTEIN, GAUSSIAN, CYCLOTOMIC5])
def test_composition_acts_like_successive_application(field):
    rng = random.Random(5)
    for _ in range(40):
        a, b = random_map(rng, field), random_map(rng, field)
        p = random_point(rng, field)
        composed = compose(Morphism(1, 2, a), Morphism(0, 1, b))
        assert apply_map(composed.map, p) == apply_map(a, apply_map(b, p))


def test_order_is_preserved_by_inversion_and_conjugation(t, i):
    rng = random.Random(3)
    maps = [
        pgl([[t, 1], [0, t ** 2]], EISENSTEIN),
        pgl([[0, t ** 2], [1, 0]], EISENSTEIN),
        pgl([[1, 1], [0, 1]], EISENSTEIN),
    ] + [random_map(rng, EISENSTEIN) for _ in range(20)]
    assert element_order(maps[0], EISENSTEIN) == 3
    for m in maps:
        order = element_order(m, EISENSTEIN)
        assert element_order(m.inverse(), EISENSTEIN) == order
        a = random_map(rng, EISENSTEIN)
        assert element_order(a @ m @ a.inverse(), EISENSTEIN) == order
