"""
Verification suite reproducing the published group computations.

Each criterion builds what it needs from the built-in registry, so that a
deliberately corrupted built-in only fails the criteria that use it.
"""

import random
import time
from typing import Callable, Dict, Iterable, List, Optional, Tuple

from modules.config.settings import AnalysisConfig
from modules.configs import BUILTIN_REGISTRY
from modules.configs.builtins import (
    parameter_set,
    stabilizer_x_matrices,
    stabilizer_xtilde_matrices,
    stabilizer_y_matrices,
)
from modules.configs.points import (
    double_penrose_check,
    generate_marked_points,
    penrose_points,
    quasi_penrose_points,
)
from modules.core.d4_model import check_agreement, find_labeling, rule_exhaustive_check
from modules.core.field import EISENSTEIN, GAUSSIAN, RATIONALS, FieldDescriptor, FieldElement
from modules.core.groupoid import (
    Configuration,
    compose_word,
    enumerate_generators,
    marked_invariance,
    orbit,
    vertex_group,
)
from modules.core.groups import generate_closure, is_even, stabilizer
from modules.core.linalg import det4
from modules.core.p4ext import find_parabolic, incidence_stats, vertex_group_p4
from modules.core.projective import (
    ParamLine,
    PglMap,
    ProjPoint,
    apply_map,
    canonicalize,
    element_order,
    lines_skew,
    projection_matrix,
)
from modules.models.models import CriterionResult
from modules.utils.logging import BaseLogger

logger = BaseLogger.get_logger()

D4_HISTOGRAM = {1: 1, 2: 3, 3: 2}


class Builtins:
    """Configuration provider with optional fault injection"""

    def __init__(self, corrupt: Optional[str] = None):
        self.corrupt = corrupt

    def get(self, name: str) -> Configuration:
        config = BUILTIN_REGISTRY[name]()
        if name == self.corrupt:
            config = corrupted(config)
        return config


def corrupted(config: Configuration) -> Configuration:
    """Move the last line: its second basis point gains twice the first unit vector"""
    last = config.lines[-1]
    coords = list(last.basis1.coords)
    coords[0] = coords[0] + 2
    lines = config.lines[:-1] + [ParamLine(last.basis0, ProjPoint(coords))]
    return Configuration(field=config.field, lines=lines, marked=config.marked,
                         name=f"{config.name} (corrupted)")


def _hist(h: Dict[int, int]) -> str:
    return "{" + ", ".join(f"{k}:{v}" for k, v in sorted(h.items())) + "}"


# --- criteria ---

def check_d4_vertex_groups(src: Builtins, settings: AnalysisConfig) -> CriterionResult:
    config = src.get("d4")
    analysis = enumerate_generators(config)
    seen = set()
    for base in range(len(config.lines)):
        g = vertex_group(config, base, cap=settings.closure.cap, analysis=analysis)
        seen.add((g.order, g.label, _hist(g.histogram)))
    expected = (6, "D(6)", _hist(D4_HISTOGRAM))
    return CriterionResult(1, "D4 vertex group is S3 at every base", seen == {expected},
                           f"all 16 bases: order 6, D(6), {_hist(D4_HISTOGRAM)}",
                           "; ".join(f"order {o}, {lab}, {h}" for o, lab, h in sorted(seen, key=str)))


def check_d4_subconfiguration(src: Builtins, settings: AnalysisConfig) -> CriterionResult:
    config = src.get("d4sub6")
    g = vertex_group(config, 0, cap=settings.closure.cap)
    return CriterionResult(2, "Six D4 lines already induce S3", g.order == 6 and g.label == "D(6)",
                           "order 6, D(6)", f"order {g.order}, {g.label}")


def check_d4_agreement(src: Builtins, settings: AnalysisConfig) -> CriterionResult:
    config = src.get("d4")
    analysis = enumerate_generators(config)
    report = check_agreement(config, find_labeling(config), analysis)
    tuples, failures = rule_exhaustive_check()
    aux = set(analysis.aux_counts.values())
    passed = (report.holds and report.morphisms == 480 and report.checked == 1440
              and not failures and aux == {2})
    return CriterionResult(
        3, "D4 combinatorial model agrees with the geometry", passed,
        "480 morphisms x 3 points agree; 2 auxiliaries per ordered pair; rule unique on all tuples",
        f"{report.morphisms} morphisms, {report.checked} points, {len(report.mismatches)} mismatches; "
        f"auxiliaries {sorted(aux)}; {len(failures)} of {tuples} tuples fail uniqueness",
    )


def check_quadric(src: Builtins, settings: AnalysisConfig) -> CriterionResult:
    g = vertex_group(src.get("quadric4"), 0, cap=settings.closure.cap)
    return CriterionResult(4, "Quadric lines have trivial vertex group", g.label == "Trivial",
                           "Trivial", f"{g.label} (order {g.order})")


def example2_closed_form(d: ParamLine) -> PglMap:
    """pi(c, d, a) o pi(a, b, c) for the quadric lines a, b, c and an auxiliary d"""
    x0, y0, z0, w0 = d.basis0.coords
    x1, y1, z1, w1 = d.basis1.coords
    return canonicalize([
        [w0 * x1 - w0 * z1 - x0 * w1 + z0 * w1, x0 * z1 - z0 * x1],
        [w0 * y1 - y0 * w1, y0 * z1 - z0 * y1 - w0 * z1 + z0 * w1],
    ])


EXAMPLE2_AUXILIARIES = [
    ((-1, 0, 1, 0), (0, -1, 0, 1)),
    ((0, 0, 1, 0), (0, 1, 0, 2)),
    ((1, 0, 0, 1), (0, 0, 1, 1)),
    ((1, 2, 3, 4), (0, 1, -1, 2)),
]


def check_example2(src: Builtins, settings: AnalysisConfig) -> CriterionResult:
    quadric = BUILTIN_REGISTRY["quadric4"]()
    a, b, c = quadric.lines[:3]
    mismatched = []
    for rows in EXAMPLE2_AUXILIARIES:
        d = ParamLine.of(RATIONALS, *rows)
        loop = projection_matrix(c, d, a) @ projection_matrix(a, b, c)
        if loop != example2_closed_form(d):
            mismatched.append(f"{rows}: got {loop}, formula {example2_closed_form(d)}")
    return CriterionResult(5, "Closed form of pi(c,d,a) o pi(a,b,c)", not mismatched,
                           f"{len(EXAMPLE2_AUXILIARIES)} auxiliaries match the formula",
                           "; ".join(mismatched) or "all match")


def _matrix(field: FieldDescriptor, rows) -> PglMap:
    return PglMap.from_rows(rows, field)


def check_half_penrose(src: Builtins, settings: AnalysisConfig) -> CriterionResult:
    config = src.get("penrose_half")
    t = EISENSTEIN.gen
    g = vertex_group(config, 0, cap=settings.closure.cap)
    three = compose_word(config, [(0, 1, 2), (2, 3, 0)]).map
    two = compose_word(config, [(0, 1, 2), (2, 4, 0), (0, 1, 2), (2, 3, 0)]).map
    want_three = _matrix(EISENSTEIN, [[t, 1], [0, t**2]])
    want_two = _matrix(EISENSTEIN, [[-1, t], [t, 1]])
    passed = (g.order == 12 and g.label == "A4" and three == want_three and two == want_two
              and element_order(three) == 3 and element_order(two) == 2)
    return CriterionResult(
        6, "Half-Penrose vertex group is A4", passed,
        f"order 12, A4; composites {want_three} (order 3) and {want_two} (order 2)",
        f"order {g.order}, {g.label}; composites {three} (order {element_order(three)}) "
        f"and {two} (order {element_order(two)})",
    )


def check_penrose(src: Builtins, settings: AnalysisConfig) -> CriterionResult:
    config = src.get("penrose")
    t = EISENSTEIN.gen
    analysis = enumerate_generators(config)
    g = vertex_group(config, 0, cap=settings.closure.cap, analysis=analysis)
    odd = compose_word(config, [(0, 1, 2), (2, 4, 0)]).map
    want = _matrix(EISENSTEIN, [[-1, 1], [1, -2 * t - 1]])
    invariance = marked_invariance(config, analysis)
    passed = g.order == 24 and g.label == "S4" and odd == want and invariance.holds
    return CriterionResult(
        7, "Penrose vertex group is S4", passed,
        f"order 24, S4; composite {want}; marked points invariant",
        f"order {g.order}, {g.label}; composite {odd}; invariance {'holds' if invariance.holds else 'fails'}",
    )


def check_stabilizers(src: Builtins, settings: AnalysisConfig) -> CriterionResult:
    problems = []
    notes = []
    known = {"X": stabilizer_x_matrices(), "Y": stabilizer_y_matrices(), "Xtilde": stabilizer_xtilde_matrices()}
    expected = {"X": (12, "A4"), "Y": (12, "A4"), "Xtilde": (24, "S4"), "Ytilde": (24, "S4"), "E": (24, "S4")}
    for name, (order, label) in expected.items():
        g = stabilizer(parameter_set(name))
        if (g.order, g.label) != (order, label):
            problems.append(f"Aut_{name}: order {g.order}, {g.label}")
        if name in known and g.element_set() != frozenset(known[name]):
            problems.append(f"Aut_{name} differs from the listed matrices")
        if name == "X":
            notes.append(f"Aut_X induces only even permutations: {all(is_even(p) for p in g.permutations)}")
    return CriterionResult(8, "Stabilizers of the marked parameter sets", not problems,
                           "X, Y: the 12 listed maps, A4; Xtilde (24 listed maps), Ytilde, E: S4",
                           "; ".join(problems) or "as expected", notes=notes)


def check_klein(src: Builtins, settings: AnalysisConfig) -> CriterionResult:
    config = src.get("klein")
    i = GAUSSIAN.gen
    analysis = enumerate_generators(config)
    g = vertex_group(config, 0, cap=settings.closure.cap, analysis=analysis)
    three = compose_word(config, [(0, 1, 2), (2, 3, 0)]).map
    four = compose_word(config, [(0, 1, 2), (2, 7, 0)]).map
    want_three = _matrix(GAUSSIAN, [[1, -i], [1, i]])
    want_four = _matrix(GAUSSIAN, [[1, -i], [-i, 1]])
    invariance = marked_invariance(config, analysis)
    aux = set(analysis.aux_counts.values())
    passed = (g.order == 24 and g.label == "S4" and three == want_three and four == want_four
              and element_order(three) == 3 and element_order(four) == 4
              and invariance.holds and aux == {8})
    return CriterionResult(
        9, "Klein vertex group is S4", passed,
        f"order 24, S4; composites {want_three} (order 3), {want_four} (order 4); "
        f"E invariant; 8 auxiliaries per ordered pair",
        f"order {g.order}, {g.label}; composites {three} (order {element_order(three)}), "
        f"{four} (order {element_order(four)}); invariance {'holds' if invariance.holds else 'fails'}; "
        f"auxiliaries {sorted(aux)}",
    )


def _ambient(config: Configuration, members) -> set:
    return {config.lines[line].point_at(p) for line, p in members}


def check_orbits(src: Builtins, settings: AnalysisConfig) -> CriterionResult:
    cap = settings.orbit.member_cap
    klein = src.get("klein")
    k_orbit = orbit(klein, 0, ProjPoint.of(GAUSSIAN, (1, 0)), member_cap=cap)
    k_ok = len(k_orbit) == 60 and _ambient(klein, k_orbit.members) == set(generate_marked_points(klein))

    half = src.get("penrose_half")
    h_orbit = orbit(half, 0, ProjPoint.of(EISENSTEIN, (1, 0)), member_cap=cap)

    full = src.get("penrose")
    p_orbit = orbit(full, 0, ProjPoint.of(EISENSTEIN, (1, 1)), member_cap=cap)
    within = all(p in full.marked[line] for line, p in p_orbit.members)

    passed = k_ok and len(h_orbit) == 20 and len(p_orbit) == 80 and within
    return CriterionResult(
        10, "Orbits of marked points", passed,
        "Klein 60 (= the Klein points), half-Penrose 20, Penrose 80 within the marked sets",
        f"Klein {len(k_orbit)} ({'matches' if k_ok else 'differs'}), half-Penrose {len(h_orbit)}, "
        f"Penrose {len(p_orbit)} ({'within' if within else 'leaves'} the marked sets)",
    )


def check_double_penrose(src: Builtins, settings: AnalysisConfig) -> CriterionResult:
    union = set(penrose_points()) | set(quasi_penrose_points())
    holds = double_penrose_check()
    return CriterionResult(11, "Quasi-Penrose points are a linear image of the Penrose points",
                           holds and len(union) == 80, "A.P = Q setwise, |P u Q| = 80",
                           f"A.P = Q {'holds' if holds else 'fails'}, |P u Q| = {len(union)}")


def check_p4(src: Builtins, settings: AnalysisConfig) -> CriterionResult:
    config = src.get("p4_25")
    distinct = len({line.span_key() for line in config.lines})
    stats = incidence_stats(config.lines)
    analysis = enumerate_generators(config)
    g = vertex_group_p4(0, cap=settings.closure.cap, config=config, analysis=analysis)
    notes = []
    witness = find_parabolic(analysis, 0, config.field,
                             max_word_length=settings.parabolic.max_word_length,
                             candidate_limit=settings.parabolic.candidate_limit)
    if witness:
        notes.append(f"parabolic {witness.map} from a word of length {witness.length}")
    else:
        notes.append(f"no parabolic element among words of length <= {settings.parabolic.max_word_length}")
    passed = (distinct == 25 and stats["hyperplanes"] == 30 and stats["lines_per_hyperplane"] == {5: 30}
              and stats["hyperplanes_per_line"] == {6: 25} and not g.is_finite)
    return CriterionResult(
        12, "25 lines in P^4 form a (25_6, 30_5) configuration with infinite vertex group", passed,
        "25 lines; 30 hyperplanes of 5 lines; 6 hyperplanes per line; Infinite",
        f"{distinct} lines; {stats['hyperplanes']} hyperplanes, lines per hyperplane "
        f"{_hist(stats['lines_per_hyperplane'])}, hyperplanes per line {_hist(stats['hyperplanes_per_line'])}; "
        f"{g.label}", notes=notes,
    )


# --- randomized property suites ---

PROPERTY_FIELDS = (RATIONALS, EISENSTEIN, GAUSSIAN)


def random_element(rng: random.Random, field: FieldDescriptor, bound: int = 3) -> FieldElement:
    return field.element([rng.randint(-bound, bound) for _ in range(field.degree)])


def random_point(rng: random.Random, field: FieldDescriptor, size: int) -> ProjPoint:
    while True:
        values = [random_element(rng, field) for _ in range(size)]
        if any(not v.is_zero() for v in values):
            return ProjPoint(values)


def random_line(rng: random.Random, field: FieldDescriptor) -> ParamLine:
    while True:
        p, q = random_point(rng, field, 4), random_point(rng, field, 4)
        if p != q:
            return ParamLine(p, q)


def random_map(rng: random.Random, field: FieldDescriptor) -> PglMap:
    while True:
        rows = [[random_element(rng, field) for _ in range(2)] for _ in range(2)]
        if not (rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]).is_zero():
            return canonicalize(rows)


def random_skew_triple(rng: random.Random, field: FieldDescriptor) -> Tuple[ParamLine, ParamLine, ParamLine]:
    while True:
        u, v, w = (random_line(rng, field) for _ in range(3))
        if lines_skew(u, v) and lines_skew(v, w):
            return u, v, w


def _finite_groups() -> Dict[FieldDescriptor, List[PglMap]]:
    return {
        RATIONALS: stabilizer(ProjPoint.of(RATIONALS, p) for p in [(1, 0), (0, 1), (1, 1), (-1, 1)]).elements,
        EISENSTEIN: stabilizer(parameter_set("Xtilde")).elements,
        GAUSSIAN: stabilizer(parameter_set("E")).elements,
    }


def property_failures(instances: int = 100, seed: int = 0) -> Dict[str, List[str]]:
    """Run each property on `instances` random cases per field; map property -> failure descriptions"""
    rng = random.Random(seed)
    failures: Dict[str, List[str]] = {name: [] for name in (
        "inverse law", "incidence", "canonical idempotence", "closure axioms",
        "base independence", "order under conjugation")}
    groups = _finite_groups()

    for field in PROPERTY_FIELDS:
        for n in range(instances):
            u, v, w = random_skew_triple(rng, field)
            forward = projection_matrix(u, v, w)
            if not (projection_matrix(w, v, u) @ forward).is_identity():
                failures["inverse law"].append(f"{field} #{n}")

            p = random_point(rng, field, 2)
            image = w.point_at(apply_map(forward, p))
            if not det4(u.point_at(p).coords, image.coords, v.basis0.coords, v.basis1.coords).is_zero():
                failures["incidence"].append(f"{field} #{n}")

            m = random_map(rng, field)
            scale = random_element(rng, field)
            if scale.is_zero():
                scale = field.one
            scaled = canonicalize([[x * scale for x in row] for row in m.rows()])
            if scaled != m or canonicalize(m.rows()) != m:
                failures["canonical idempotence"].append(f"{field} #{n}")

            elements = groups[field]
            g = rng.choice(elements)
            h = random_map(rng, field)
            if element_order(h @ g @ h.inverse()) != element_order(g):
                failures["order under conjugation"].append(f"{field} #{n}")

            gens = rng.sample(elements, 2)
            closed = generate_closure(gens, field=field)
            members = closed.element_set()
            a, b = rng.choice(closed.elements), rng.choice(closed.elements)
            if (PglMap.identity(field) not in members or (a @ b) not in members
                    or a.inverse() not in members or len(elements) % closed.order):
                failures["closure axioms"].append(f"{field} #{n}")

    cache = {}
    names = ["quadric4", "d4", "penrose_half", "klein"]
    for n in range(instances):
        name = rng.choice(names)
        if name not in cache:
            config = BUILTIN_REGISTRY[name]()
            cache[name] = (config, enumerate_generators(config))
        config, analysis = cache[name]
        base = rng.randrange(len(config.lines))
        reference = vertex_group(config, 0, analysis=analysis)
        other = vertex_group(config, base, analysis=analysis, reverse=rng.random() < 0.5)
        if (other.order, other.label) != (reference.order, reference.label):
            failures["base independence"].append(f"{name} base {base}")
    return failures


def check_properties(src: Builtins, settings: AnalysisConfig) -> CriterionResult:
    failures = property_failures()
    broken = {name: cases for name, cases in failures.items() if cases}
    return CriterionResult(
        13, "Randomized property suites", not broken,
        f"no failures in {', '.join(failures)}",
        "; ".join(f"{name}: {len(cases)} failure(s), first {cases[0]}" for name, cases in broken.items())
        or "no failures",
    )


CRITERIA: List[Callable[[Builtins, AnalysisConfig], CriterionResult]] = [
    check_d4_vertex_groups,
    check_d4_subconfiguration,
    check_d4_agreement,
    check_quadric,
    check_example2,
    check_half_penrose,
    check_penrose,
    check_stabilizers,
    check_klein,
    check_orbits,
    check_double_penrose,
    check_p4,
    check_properties,
]


def run_verification(settings: AnalysisConfig, only: Optional[Iterable[int]] = None,
                     corrupt: Optional[str] = None) -> List[CriterionResult]:
    src = Builtins(corrupt)
    selected = set(only) if only is not None else set(range(1, len(CRITERIA) + 1))
    results = []
    for number, check in enumerate(CRITERIA, start=1):
        if number not in selected:
            continue
        BaseLogger.log_step(number, len(CRITERIA), check.__name__)
        start = time.perf_counter()
        try:
            result = check(src, settings)
        except Exception as e:
            if settings.debug_mode:
                BaseLogger.log_error(e, check.__name__)
            result = CriterionResult(number, check.__name__, False, "no error",
                                     f"{type(e).__name__}: {e}")
        result.seconds = time.perf_counter() - start
        results.append(result)
    return results
