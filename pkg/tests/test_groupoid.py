import pytest

from modules.configs.builtins import penrose_parameters
from modules.core.field import EISENSTEIN, GAUSSIAN, RATIONALS
from modules.core.groupoid import (
    Configuration,
    compose_word,
    connectivity,
    enumerate_generators,
    marked_invariance,
    orbit,
    spanning_tree_maps,
    vertex_group,
)
from modules.core.projective import ParamLine, PglMap, ProjPoint, apply_map
from modules.custom_errors import (
    DegenerateTripleError,
    GroupoidError,
    InvalidLineIndexError,
    MissingMarkedPointsError,
    RepeatedPointError,
)


def test_quadric_groupoid_is_trivial(quadric4):
    analysis = enumerate_generators(quadric4)
    assert len(analysis.generators) == 24
    assert set(analysis.aux_counts.values()) == {2}
    assert analysis.components == [[0, 1, 2, 3]]
    assert vertex_group(quadric4, 0, analysis=analysis).label == "Trivial"


def test_generators_are_ordered_by_source_target_auxiliary(quadric4):
    analysis = enumerate_generators(quadric4)
    assert analysis.triples[:4] == [(0, 2, 1), (0, 3, 1), (0, 1, 2), (0, 3, 2)]
    assert analysis.morphism_for((0, 1, 2)) == analysis.generators[2]


def test_d4_groupoid_counts(d4, d4_analysis):
    assert len(d4_analysis.generators) == 480
    assert set(d4_analysis.aux_counts.values()) == {2}
    assert connectivity(d4_analysis) == [list(range(16))]
    assert d4_analysis.aux_summary() == {"min": 2, "max": 2}
    # each D4 line meets nine others
    assert all(d4_analysis.skew_graph.degree(v) == 6 for v in range(16))


def test_d4_vertex_group_is_s3(d4, d4_analysis):
    group = vertex_group(d4, 0, analysis=d4_analysis)
    assert (group.order, group.label) == (6, "D(6)")
    assert group.histogram == {1: 1, 2: 3, 3: 2}


def test_vertex_group_does_not_depend_on_base_or_tree(klein, klein_analysis):
    reference = vertex_group(klein, 0, analysis=klein_analysis)
    for base in (3, 9):
        other = vertex_group(klein, base, analysis=klein_analysis, reverse=True)
        assert (other.order, other.label) == (reference.order, reference.label)


def test_spanning_tree_starts_at_identity(d4, d4_analysis):
    tau = spanning_tree_maps(d4, d4_analysis, 5)
    assert tau[5].is_identity()
    assert set(tau) == set(range(16))


def test_half_penrose_vertex_group_and_composites(penrose_half, t):
    assert (vertex_group(penrose_half, 0).order, vertex_group(penrose_half, 0).label) == (12, "A4")
    three = compose_word(penrose_half, [(0, 1, 2), (2, 3, 0)])
    assert (three.src, three.dst) == (0, 0)
    assert three.map == PglMap.from_rows([[t, 1], [0, t ** 2]], EISENSTEIN)
    two = compose_word(penrose_half, [(0, 1, 2), (2, 4, 0), (0, 1, 2), (2, 3, 0)])
    assert two.map == PglMap.from_rows([[-1, t], [t, 1]], EISENSTEIN)


def test_penrose_vertex_group_is_s4(penrose, penrose_analysis, t):
    group = vertex_group(penrose, 0, analysis=penrose_analysis)
    assert (group.order, group.label) == (24, "S4")
    odd = compose_word(penrose, [(0, 1, 2), (2, 4, 0)]).map
    assert odd == PglMap.from_rows([[-1, 1], [1, -2 * t - 1]], EISENSTEIN)


def test_klein_vertex_group_is_s4(klein, klein_analysis, i):
    assert len(klein_analysis.generators) == 720
    assert set(klein_analysis.aux_counts.values()) == {8}
    group = vertex_group(klein, 0, analysis=klein_analysis)
    assert (group.order, group.label) == (24, "S4")
    assert compose_word(klein, [(0, 1, 2), (2, 3, 0)]).map == PglMap.from_rows([[1, -i], [1, i]], GAUSSIAN)
    assert compose_word(klein, [(0, 1, 2), (2, 7, 0)]).map == PglMap.from_rows([[1, -i], [-i, 1]], GAUSSIAN)


def test_compose_word_rejects_bad_words(d4, quadric4):
    with pytest.raises(DegenerateTripleError):
        compose_word(d4, [(0, 1, 2)])
    with pytest.raises(InvalidLineIndexError):
        compose_word(quadric4, [(0, 1, 7)])
    with pytest.raises(GroupoidError):
        compose_word(quadric4, [])


def test_marked_points_are_invariant(penrose_half, penrose, penrose_analysis, klein, klein_analysis):
    assert marked_invariance(penrose_half).holds
    report = marked_invariance(penrose, penrose_analysis)
    assert report.holds
    assert report.checked == len(penrose_analysis.generators)
    assert marked_invariance(klein, klein_analysis)


def test_wrong_marked_points_are_reported(penrose_half):
    config = Configuration(field=EISENSTEIN, lines=penrose_half.lines,
                           marked=[penrose_parameters() for _ in range(5)], name="mislabelled")
    report = marked_invariance(config)
    assert not report.holds
    assert 4 in (report.counterexample[0], report.counterexample[2])
    assert report.image is not None


def test_invariance_needs_marked_points(quadric4):
    with pytest.raises(MissingMarkedPointsError):
        marked_invariance(quadric4)


def test_single_line_orbit_is_the_start():
    line = ParamLine.of(RATIONALS, (1, 0, 0, 0), (0, 1, 0, 0))
    config = Configuration(field=RATIONALS, lines=[line])
    start = ProjPoint.of(RATIONALS, (1, 0))
    result = orbit(config, 0, start)
    assert result.members == [(0, start)]
    assert not result.truncated


def test_orbits_of_marked_points(penrose_half, penrose, penrose_analysis, klein, klein_analysis):
    assert len(orbit(penrose_half, 0, ProjPoint.of(EISENSTEIN, (1, 0)))) == 20
    assert len(orbit(klein, 0, ProjPoint.of(GAUSSIAN, (1, 0)), analysis=klein_analysis)) == 60
    full = orbit(penrose, 0, ProjPoint.of(EISENSTEIN, (1, 1)), analysis=penrose_analysis)
    assert len(full) == 80
    assert all(p in penrose.marked[line] for line, p in full.members)


def test_orbit_is_closed_under_simple_morphisms(penrose_half):
    analysis = enumerate_generators(penrose_half)
    result = orbit(penrose_half, 0, ProjPoint.of(EISENSTEIN, (1, 0)), analysis=analysis)
    members = result.member_set()
    for g in analysis.generators:
        for line, p in result.members:
            if line == g.src:
                assert (g.dst, apply_map(g.map, p)) in members


def test_orbit_truncation(penrose_half):
    result = orbit(penrose_half, 0, ProjPoint.of(EISENSTEIN, (1, 0)), member_cap=5)
    assert result.truncated
    assert len(result) == 5


def test_configuration_validation(quadric4, t):
    with pytest.raises(GroupoidError):
        Configuration(field=RATIONALS, lines=[quadric4.lines[0], quadric4.lines[0]])
    with pytest.raises(InvalidLineIndexError):
        vertex_group(quadric4, 4)
    with pytest.raises(MissingMarkedPointsError):
        Configuration(field=RATIONALS, lines=quadric4.lines, marked=[[]])
    repeated = [[ProjPoint.of(RATIONALS, (1, 0)), ProjPoint.of(RATIONALS, (2, 0))]] + [[]] * 3
    with pytest.raises(RepeatedPointError):
        Configuration(field=RATIONALS, lines=quadric4.lines, marked=repeated)
    with pytest.raises(GroupoidError):
        Configuration(field=EISENSTEIN, lines=quadric4.lines)


def test_subconfiguration_keeps_marked_points(d4):
    sub = d4.subconfiguration([1, 4, 8, 10, 14, 15])
    assert len(sub.lines) == 6
    assert sub.marked[0] == d4.marked[1]
    assert vertex_group(sub, 0).order == 6
