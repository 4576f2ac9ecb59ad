"""
Combinatorial model of the D4 groupoid.

Points are labelled by {A, B, C} x (Z/2Z)^2 and lines by triples
{A+g, B+g', C+g''} with g + g' + g'' = 0. Projection through an auxiliary
line then has a purely combinatorial description, checked here against the
geometric projection maps.
"""

from dataclasses import dataclass
from itertools import product
from typing import Dict, List, Optional, Tuple

from .groupoid import Configuration, GroupoidAnalysis, enumerate_generators
from .projective import ProjPoint, apply_map
from ..custom_errors import CombinatorialRuleError, LabelingError
from ..models.models import AgreementReport
from ..utils.logging import BaseLogger

logger = BaseLogger.get_logger()

LETTERS = ("A", "B", "C")
Bits = Tuple[int, int]
KLEIN_FOUR: Tuple[Bits, ...] = ((0, 0), (0, 1), (1, 0), (1, 1))


def add_bits(*elements: Bits) -> Bits:
    x, y = 0, 0
    for a, b in elements:
        x ^= a
        y ^= b
    return (x, y)


@dataclass(frozen=True, order=True)
class Label:
    letter: str
    g: Bits

    def __post_init__(self):
        if self.letter not in LETTERS:
            raise CombinatorialRuleError(f"Unknown letter {self.letter!r}")
        if self.g not in KLEIN_FOUR:
            raise CombinatorialRuleError(f"{self.g} is not an element of (Z/2Z)^2")

    def __str__(self) -> str:
        return f"{self.letter}+{self.g[0]}{self.g[1]}"


ALL_LABELS: Tuple[Label, ...] = tuple(Label(letter, g) for letter in LETTERS for g in KLEIN_FOUR)


@dataclass(frozen=True)
class LineTriple:
    gA: Bits
    gB: Bits
    gC: Bits

    def __post_init__(self):
        if add_bits(self.gA, self.gB, self.gC) != (0, 0):
            raise CombinatorialRuleError(f"{self} does not sum to zero")

    @property
    def labels(self) -> Tuple[Label, Label, Label]:
        return (Label("A", self.gA), Label("B", self.gB), Label("C", self.gC))

    def __contains__(self, label: Label) -> bool:
        return label in self.labels

    def meets(self, other: "LineTriple") -> bool:
        return any(label in other for label in self.labels)

    def __str__(self) -> str:
        return "{" + ", ".join(str(label) for label in self.labels) + "}"


def all_triples() -> List[LineTriple]:
    return [LineTriple(ga, gb, add_bits(ga, gb)) for ga, gb in product(KLEIN_FOUR, repeat=2)]


def collinear(p: Label, q: Label, r: Label) -> bool:
    """Three labels forming a line triple"""
    return {p.letter, q.letter, r.letter} == set(LETTERS) and add_bits(p.g, q.g, r.g) == (0, 0)


def _candidates(dom: LineTriple, aux: LineTriple, cod: LineTriple, p: Label) -> List[Label]:
    return [q for q in cod.labels if any(collinear(p, r, q) for r in aux.labels)]


def combinatorial_pi(dom: LineTriple, aux: LineTriple, cod: LineTriple, p: Label) -> Label:
    """Image of p under projection from dom to cod through aux"""
    if aux.meets(dom) or aux.meets(cod):
        raise CombinatorialRuleError(f"Auxiliary {aux} meets {dom} or {cod}")
    if p not in dom:
        raise CombinatorialRuleError(f"{p} is not a point of {dom}")
    if p in cod:
        return p
    found = _candidates(dom, aux, cod, p)
    if len(found) != 1:
        raise CombinatorialRuleError(
            f"{len(found)} images of {p} on {cod} through {aux}; expected exactly one"
        )
    return found[0]


def rule_exhaustive_check() -> Tuple[int, List[Tuple[LineTriple, LineTriple, LineTriple, Label]]]:
    """Every admissible (dom, aux, cod, p) with p off cod has exactly one collinear image.

    Returns the number of tuples examined and those that fail.
    """
    triples = all_triples()
    checked = 0
    failures = []
    for dom, aux, cod in product(triples, repeat=3):
        if aux.meets(dom) or aux.meets(cod):
            continue
        for p in dom.labels:
            if p in cod:
                continue
            checked += 1
            if len(_candidates(dom, aux, cod, p)) != 1:
                failures.append((dom, aux, cod, p))
    return checked, failures


@dataclass
class Labeling:
    """Bijections between D4 lines and line triples and between D4 points and labels"""
    line_map: Dict[int, LineTriple]
    point_map: Dict[ProjPoint, Label]
    incidence: Dict[ProjPoint, List[int]]

    def label_of(self, point: ProjPoint) -> Label:
        return self.point_map[point]

    def point_of(self, label: Label) -> ProjPoint:
        return next(p for p, lab in self.point_map.items() if lab == label)

    def points_on(self, line: int) -> List[ProjPoint]:
        return [p for p, lines in self.incidence.items() if line in lines]

    def is_consistent(self) -> bool:
        for p, label in self.point_map.items():
            for line, triple in self.line_map.items():
                if (line in self.incidence[p]) != (label in triple):
                    return False
        return True


def _d4_incidence(config: Configuration) -> Dict[ProjPoint, List[int]]:
    from ..configs.points import multi_points

    if len(config.lines) != 16:
        raise LabelingError(f"{config.name} has {len(config.lines)} lines, not 16")
    found = multi_points(config, 2)
    if len(found) != 12 or any(len(lines) != 4 for _, lines in found):
        raise LabelingError(
            f"{config.name} is not a (12_4, 16_3) configuration: "
            f"{len(found)} intersection point(s)"
        )
    incidence = {p: lines for p, lines in found}
    for line in range(len(config.lines)):
        if sum(1 for lines in incidence.values() if line in lines) != 3:
            raise LabelingError(f"Line {line} does not contain exactly three intersection points")
    return incidence


def find_labeling(config: Configuration) -> Labeling:
    """First labeling in search order making every line a line triple.

    Points are visited in canonical coordinate order; labels are tried with
    letters A, B, C and group parts in lexicographic bit order.
    """
    incidence = _d4_incidence(config)
    points = sorted(incidence, key=lambda p: p.sort_key())
    lines_of = [incidence[p] for p in points]
    members: Dict[int, List[int]] = {}
    for idx, lines in enumerate(lines_of):
        for line in lines:
            members.setdefault(line, []).append(idx)

    assigned: List[Optional[Label]] = [None] * len(points)
    used = set()

    def fits(idx: int, label: Label) -> bool:
        for line in lines_of[idx]:
            others = [assigned[j] for j in members[line] if j != idx and assigned[j] is not None]
            if any(o.letter == label.letter for o in others):
                return False
            if len(others) == 2 and not collinear(label, *others):
                return False
        return True

    def search(idx: int) -> bool:
        if idx == len(points):
            return True
        for label in ALL_LABELS:
            if label in used or not fits(idx, label):
                continue
            assigned[idx] = label
            used.add(label)
            if search(idx + 1):
                return True
            assigned[idx] = None
            used.discard(label)
        return False

    if not search(0):
        raise LabelingError(f"No (Z/2Z)^2 labeling exists for {config.name}")

    point_map = dict(zip(points, assigned))
    line_map = {}
    for line, idxs in sorted(members.items()):
        by_letter = {assigned[j].letter: assigned[j].g for j in idxs}
        line_map[line] = LineTriple(by_letter["A"], by_letter["B"], by_letter["C"])
    labeling = Labeling(line_map=line_map, point_map=point_map, incidence=incidence)
    logger.debug(f"{config.name}: labeling found, first point {points[0]} -> {assigned[0]}")
    return labeling


def check_agreement(config: Configuration, labeling: Optional[Labeling] = None,
                    analysis: Optional[GroupoidAnalysis] = None) -> AgreementReport:
    """Compare every simple morphism on every configuration point with combinatorial_pi"""
    labeling = labeling or find_labeling(config)
    analysis = analysis or enumerate_generators(config)
    checked = 0
    mismatches = []
    for g, (i, j, k) in zip(analysis.generators, analysis.triples):
        dom, aux, cod = labeling.line_map[i], labeling.line_map[j], labeling.line_map[k]
        for point in labeling.points_on(i):
            param = config.lines[i].parameter_of(point)
            image = config.lines[k].point_at(apply_map(g.map, param))
            expected = combinatorial_pi(dom, aux, cod, labeling.label_of(point))
            checked += 1
            if image != labeling.point_of(expected):
                actual = labeling.point_map.get(image)
                mismatches.append(((i, j, k), str(labeling.label_of(point)),
                                   str(actual) if actual else str(image), str(expected)))
    logger.debug(f"{config.name}: {checked} projected points compared, {len(mismatches)} mismatch(es)")
    return AgreementReport(checked=checked, morphisms=len(analysis.generators), mismatches=mismatches)

