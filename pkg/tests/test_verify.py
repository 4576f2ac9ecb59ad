import pytest

from modules.cli.verify import (
    CRITERIA,
    EXAMPLE2_AUXILIARIES,
    Builtins,
    corrupted,
    example2_closed_form,
    property_failures,
    run_verification,
)
from modules.config.settings import AnalysisConfig
from modules.core.field import RATIONALS
from modules.core.groupoid import vertex_group
from modules.core.projective import ParamLine, PglMap, lines_skew, projection_matrix


@pytest.fixture
def settings():
    return AnalysisConfig()


def test_thirteen_criteria():
    assert len(CRITERIA) == 13


@pytest.mark.parametrize("rows", EXAMPLE2_AUXILIARIES)
def test_closed_form_for_quadric_loops(quadric4, rows):
    a, b, c = quadric4.lines[:3]
    d = ParamLine.of(RATIONALS, *rows)
    assert projection_matrix(c, d, a) @ projection_matrix(a, b, c) == example2_closed_form(d)


def test_closed_form_special_values():
    identity = example2_closed_form(ParamLine.of(RATIONALS, (-1, 0, 1, 0), (0, -1, 0, 1)))
    assert identity.is_identity()
    scaled = example2_closed_form(ParamLine.of(RATIONALS, (0, 0, 1, 0), (0, 1, 0, 2)))
    assert scaled == PglMap.from_rows([[2, 0], [0, 1]], RATIONALS)


def test_corruption_breaks_the_quadric(quadric4):
    broken = corrupted(quadric4)
    assert broken.name == "quadric4 (corrupted)"
    assert not broken.lines[-1].same_line(quadric4.lines[-1])
    assert lines_skew(broken.lines[0], broken.lines[-1])
    assert vertex_group(broken, 0).label == "Infinite"


def test_builtins_only_corrupt_the_named_configuration():
    src = Builtins(corrupt="quadric4")
    assert src.get("quadric4").name.endswith("(corrupted)")
    assert src.get("d4sub6").name == "d4sub6"


def test_selected_criteria_pass(settings):
    results = run_verification(settings, only=[1, 2, 3, 6, 7, 9, 10])
    failed = [(r.number, r.actual) for r in results if not r.passed]
    assert failed == []


def test_corrupted_builtin_fails_its_criterion(settings):
    results = run_verification(settings, only=[4, 5], corrupt="quadric4")
    by_number = {r.number: r for r in results}
    assert not by_number[4].passed
    assert by_number[4].actual.startswith("Infinite")
    # the closed form builds its own quadric lines
    assert by_number[5].passed


def test_property_suites_on_a_few_instances():
    failures = property_failures(instances=5, seed=7)
    assert set(failures) == {"inverse law", "incidence", "canonical idempotence", "closure axioms",
                             "base independence", "order under conjugation"}
    assert all(not cases for cases in failures.values())


@pytest.mark.slow
def test_p4_criterion(settings):
    (result,) = run_verification(settings, only=[12])
    assert result.passed
    assert result.notes
