"""
Point sets derived from configurations: marked points in ambient space,
multiple points of intersecting lines, the double Penrose identity and the
comparison against the published point tables.
"""

from typing import Dict, List, Optional, Sequence, Tuple

from .builtins import (
    EISENSTEIN,
    GAUSSIAN,
    PENROSE_ROWS,
    i,
    klein,
    penrose_parameters,
    penrose_parameters_l8,
    quasi_parameters,
    quasi_parameters_l8,
    t,
    _lines,
)
from ..core.groupoid import Configuration
from ..core.projective import ProjPoint, line_intersection
from ..custom_errors import DimensionMismatchError, MissingMarkedPointsError, UnknownBuiltinError
from ..utils.logging import BaseLogger

logger = BaseLogger.get_logger()

DOUBLE_PENROSE_MATRIX = (
    (0, 0, 1, 1),
    (0, 0, 1, -1),
    (-1, -1, 0, 0),
    (-1, 1, 0, 0),
)


def _dedupe(points) -> List[ProjPoint]:
    return list(dict.fromkeys(points))


def generate_marked_points(config: Configuration) -> List[ProjPoint]:
    """Ambient points a*basis0 + b*basis1 for every marked parameter (a, b)"""
    if config.marked is None:
        raise MissingMarkedPointsError(f"Configuration '{config.name}' has no marked points")
    return _dedupe(line.point_at(param) for line, params in zip(config.lines, config.marked)
                   for param in params)


def multi_points(config: Configuration, multiplicity: int = 2) -> List[Tuple[ProjPoint, List[int]]]:
    """Intersection points lying on at least `multiplicity` lines, with their incident lines"""
    incidence: Dict[ProjPoint, set] = {}
    n = len(config.lines)
    for a in range(n):
        for b in range(a + 1, n):
            p = line_intersection(config.lines[a], config.lines[b])
            if p is not None:
                incidence.setdefault(p, set()).update((a, b))
    found = [(p, sorted(lines)) for p, lines in incidence.items() if len(lines) >= multiplicity]
    found.sort(key=lambda item: item[0].sort_key())
    logger.debug(f"{config.name}: {len(found)} point(s) on at least {multiplicity} lines")
    return found


def _penrose_points(quasi: bool) -> List[ProjPoint]:
    lines = _lines(EISENSTEIN, PENROSE_ROWS)
    spread_params = quasi_parameters() if quasi else penrose_parameters()
    l8_params = quasi_parameters_l8() if quasi else penrose_parameters_l8()
    points = []
    for idx, line in enumerate(lines):
        for param in (spread_params if idx < 8 else l8_params):
            points.append(line.point_at(param))
    return _dedupe(points)


def penrose_points() -> List[ProjPoint]:
    """The 40 Penrose points"""
    return _penrose_points(quasi=False)


def quasi_penrose_points() -> List[ProjPoint]:
    """The 40 quasi-Penrose points"""
    return _penrose_points(quasi=True)


def apply_linear(matrix: Sequence[Sequence], point: ProjPoint) -> ProjPoint:
    field = point.field
    rows = [[field.coerce(x) for x in row] for row in matrix]
    if any(len(row) != len(point) for row in rows):
        raise DimensionMismatchError("Matrix and point sizes differ")
    values = []
    for row in rows:
        acc = field.zero
        for a, x in zip(row, point.coords):
            acc = acc + a * x
        values.append(acc)
    return ProjPoint(values)


def double_penrose_check(matrix: Optional[Sequence[Sequence]] = None) -> bool:
    """Whether the matrix carries the Penrose points onto the quasi-Penrose points setwise"""
    matrix = matrix if matrix is not None else DOUBLE_PENROSE_MATRIX
    images = {apply_linear(matrix, p) for p in penrose_points()}
    return images == set(quasi_penrose_points())


# --- published tables ---

PENROSE_TABLE = [
    (1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1),
    (0, 1, -1, 1), (1, 0, -1, -1), (1, -1, 0, 1), (1, 1, 1, 0),
    (0, 1, -t, t**2), (1, 0, -t, -t**2), (1, -t, 0, t**2), (1, t, t**2, 0),
    (0, 1, -t**2, t), (1, 0, -t**2, -t), (1, -t**2, 0, t), (1, t**2, t, 0),
    (0, 1, -t, 1), (1, 0, -1, -t), (1, -t**2, 0, t**2), (1, t, 1, 0),
    (0, 1, -t**2, t**2), (1, 0, -t, -1), (1, -1, 0, t), (1, t**2, t**2, 0),
    (0, 1, -1, t), (1, 0, -t**2, -t**2), (1, -t, 0, 1), (1, 1, t, 0),
    (0, 1, -t**2, 1), (1, 0, -1, -t**2), (1, -t, 0, t), (1, t**2, 1, 0),
    (0, 1, -1, t**2), (1, 0, -t, -t), (1, -t**2, 0, 1), (1, 1, t**2, 0),
    (0, 1, -t, t), (1, 0, -t**2, -1), (1, -1, 0, t**2), (1, t, t, 0),
]

KLEIN_TABLE = [
    (0, 0, 1, 1), (0, 0, 1, i), (0, 0, 1, -1), (0, 0, 1, -i),
    (0, 1, 0, 1), (0, 1, 0, i), (0, 1, 0, -1), (0, 1, 0, -i),
    (0, 1, 1, 0), (0, 1, i, 0), (0, 1, -1, 0), (0, 1, -i, 0),
    (1, 0, 0, 1), (1, 0, 0, i), (1, 0, 0, -1), (1, 0, 0, -i),
    (1, 0, 1, 0), (1, 0, i, 0), (1, 0, -1, 0), (1, 0, -i, 0),
    (1, 1, 0, 0), (1, i, 0, 0), (1, -1, 0, 0), (1, -i, 0, 0),
    (1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1),
    (1, 1, 1, 1), (1, 1, 1, -1), (1, 1, -1, 1), (1, 1, -1, -1),
    (1, -1, 1, 1), (1, -1, 1, -1), (1, -1, -1, 1), (1, -1, -1, -1),
    (1, 1, i, i), (1, 1, i, -i), (1, 1, -i, i), (1, 1, -i, -i),
    (1, -1, i, i), (1, -1, i, -i), (1, -1, -i, 1), (1, -1, -i, -i),
    (1, i, 1, i), (1, i, 1, -i), (1, -i, 1, i), (1, -i, 1, -i),
    (1, i, -1, i), (1, i, -1, -i), (1, -i, -1, i), (1, -i, -1, -i),
    (1, i, i, 1), (1, i, -i, 1), (1, -i, i, 1), (1, -i, -i, 1),
    (1, i, i, -1), (1, i, -i, -1), (1, -i, i, -1), (1, -i, -i, -1),
]


def _klein_points() -> List[ProjPoint]:
    return generate_marked_points(klein())


_TABLES = {
    "penrose": (EISENSTEIN, PENROSE_TABLE, penrose_points),
    "klein": (GAUSSIAN, KLEIN_TABLE, _klein_points),
}


def table_discrepancies(name: str) -> Dict[str, List[ProjPoint]]:
    """Generated points absent from the published table, and table entries never generated"""
    if name not in _TABLES:
        raise UnknownBuiltinError(f"No published point table for '{name}'")
    field, table, generate = _TABLES[name]
    published = _dedupe(ProjPoint.of(field, row) for row in table)
    generated = generate()
    published_set, generated_set = set(published), set(generated)
    report = {
        "missing_from_table": [p for p in generated if p not in published_set],
        "not_generated": [p for p in published if p not in generated_set],
    }
    if report["missing_from_table"] or report["not_generated"]:
        logger.warning(f"{name} table has {len(report['not_generated'])} entries "
                       f"that are not generated points")
    return report
