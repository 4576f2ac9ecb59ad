"""
Built-in line configurations with exact coordinates and their marked parameters.
"""

from typing import Callable, Dict, List, Sequence

from ..core.field import EISENSTEIN, GAUSSIAN, RATIONALS, FieldDescriptor
from ..core.groupoid import Configuration
from ..core.projective import ParamLine, PglMap, ProjPoint
from ..custom_errors import UnknownBuiltinError

t = EISENSTEIN.gen
i = GAUSSIAN.gen


def _lines(field: FieldDescriptor, rows: Sequence[Sequence[Sequence]]) -> List[ParamLine]:
    return [ParamLine.of(field, r0, r1) for r0, r1 in rows]


def _params(field: FieldDescriptor, pairs: Sequence[Sequence]) -> List[ProjPoint]:
    return [ProjPoint.of(field, pair) for pair in pairs]


def _maps(field: FieldDescriptor, matrices: Sequence[Sequence[Sequence]]) -> List[PglMap]:
    return [PglMap.from_rows(m, field) for m in matrices]


# --- marked parameter sets ---

def penrose_parameters() -> List[ProjPoint]:
    """X: the Penrose points on each of L0..L7"""
    return _params(EISENSTEIN, [(1, 0), (0, 1), (t, 1), (-t**2, 1)])


def penrose_parameters_l8() -> List[ProjPoint]:
    """Y: the Penrose points on L8 and L9"""
    return _params(EISENSTEIN, [(1, 0), (0, 1), (-1, 1), (t**2, 1)])


def quasi_parameters() -> List[ProjPoint]:
    return _params(EISENSTEIN, [(1, 1), (-1, 1), (2 * t + 1, 1), (-1, 2 * t + 1)])


def quasi_parameters_l8() -> List[ProjPoint]:
    return _params(EISENSTEIN, [(t, 1), (-t, 1), (1, t - 1), (3, t - 1)])


def extended_parameters() -> List[ProjPoint]:
    """X~ = X together with the quasi-Penrose parameters"""
    return penrose_parameters() + quasi_parameters()


def extended_parameters_l8() -> List[ProjPoint]:
    return penrose_parameters_l8() + quasi_parameters_l8()


def klein_parameters() -> List[ProjPoint]:
    """E: the octahedral vertices of P^1 over Q(i)"""
    return _params(GAUSSIAN, [(1, 0), (0, 1), (1, 1), (-1, 1), (i, 1), (-i, 1)])


PARAMETER_SETS: Dict[str, Callable[[], List[ProjPoint]]] = {
    "X": penrose_parameters,
    "Y": penrose_parameters_l8,
    "Xtilde": extended_parameters,
    "Ytilde": extended_parameters_l8,
    "E": klein_parameters,
}


def parameter_set(name: str) -> List[ProjPoint]:
    try:
        return PARAMETER_SETS[name]()
    except KeyError:
        raise UnknownBuiltinError(
            f"Unknown parameter set '{name}'; choose from {', '.join(PARAMETER_SETS)}"
        )


# --- known stabilizer elements ---

def stabilizer_x_matrices() -> List[PglMap]:
    """The twelve maps fixing X setwise"""
    return _maps(EISENSTEIN, [
        [[1, 0], [0, 1]], [[0, -1], [1, 0]], [[t, 1], [1, -t]], [[-1, t], [t, 1]],
        [[0, -1], [t, -t**2]], [[t, -t**2], [1, 0]], [[0, -t], [1, t**2]], [[t**2, t], [-1, 0]],
        [[t, 0], [1, t**2]], [[t**2, 0], [-1, t]], [[t**2, t], [0, 1]], [[t, -t**2], [0, 1]],
    ])


def stabilizer_y_matrices() -> List[PglMap]:
    """The twelve maps fixing Y setwise"""
    return _maps(EISENSTEIN, [
        [[1, 0], [0, 1]], [[0, -1], [t, 0]], [[-1, t**2], [1, 1]], [[1, 1], [t, -1]],
        [[0, -1], [1, 1]], [[1, 1], [-1, 0]], [[0, t], [-1, t**2]], [[t**2, -t], [1, 0]],
        [[t, 0], [-t, 1]], [[1, 0], [t, t]], [[t, -1], [0, 1]], [[1, 1], [0, t]],
    ])


def stabilizer_xtilde_matrices() -> List[PglMap]:
    """Aut(X) together with the twelve odd maps fixing X~"""
    s = 2 * t + 1
    return stabilizer_x_matrices() + _maps(EISENSTEIN, [
        [[-1, s], [1, 1]], [[-1, -1], [-1, s]], [[s, 1], [1, -1]], [[-1, 1], [s, 1]],
        [[-1, -1], [1, -1]], [[1, -1], [-1, s]], [[-1, -1], [s, 1]], [[s, 1], [1, -s]],
        [[-1, s], [s, 1]], [[-1, s], [-1, 1]], [[s, 1], [1, 1]], [[1, -1], [1, 1]],
    ])


# --- configurations ---

def quadric4() -> Configuration:
    """Four lines on a smooth quadric; the groupoid is trivial"""
    lines = _lines(RATIONALS, [
        ((1, 0, 0, 0), (0, 1, 0, 0)),
        ((0, 0, 1, 0), (0, 0, 0, 1)),
        ((1, 0, 1, 0), (0, 1, 0, 1)),
        ((-1, 0, 1, 0), (0, -1, 0, 1)),
    ])
    return Configuration(field=RATIONALS, lines=lines, name="quadric4")


D4_ROWS = [
    ((0, 0, 0, 1), (0, 0, 1, 0)),
    ((0, 0, 0, 1), (0, 1, 0, 0)),
    ((0, 0, 0, 1), (1, 0, 0, 0)),
    ((0, 0, 0, 1), (1, 1, 1, 2)),
    ((1, 1, 0, 1), (0, 0, 1, 0)),
    ((1, 1, 0, 1), (0, 1, 0, 0)),
    ((1, 1, 0, 1), (1, 0, 0, 0)),
    ((1, 1, 0, 1), (1, 1, 1, 2)),
    ((1, 0, 1, 1), (0, 0, 1, 0)),
    ((1, 0, 1, 1), (0, 1, 0, 0)),
    ((1, 0, 1, 1), (1, 0, 0, 0)),
    # printed with the rows of L7; the block pattern gives (1,0,1,1)
    ((1, 0, 1, 1), (1, 1, 1, 2)),
    ((0, 1, 1, 1), (0, 0, 1, 0)),
    ((0, 1, 1, 1), (0, 1, 0, 0)),
    ((0, 1, 1, 1), (1, 0, 0, 0)),
    ((0, 1, 1, 1), (1, 1, 1, 2)),
]

D4_SUBCONFIGURATION = (1, 4, 8, 10, 14, 15)


def d4() -> Configuration:
    """The 16 lines of the D4 (12_4, 16_3) configuration, marked by their triple points"""
    from .points import multi_points

    config = Configuration(field=RATIONALS, lines=_lines(RATIONALS, D4_ROWS), name="d4")
    on_line: List[List[ProjPoint]] = [[] for _ in config.lines]
    for point, incident in multi_points(config, 4):
        for idx in incident:
            on_line[idx].append(point)
    config.marked = [
        [line.parameter_of(p) for p in sorted(pts, key=lambda p: p.sort_key())]
        for line, pts in zip(config.lines, on_line)
    ]
    return config


def d4sub6() -> Configuration:
    return d4().subconfiguration(D4_SUBCONFIGURATION, name="d4sub6")


PENROSE_ROWS = [
    ((1, 0, -t**2, -t**2), (1, 0, -t, -t)),
    ((0, 1, -t**2, t**2), (0, 1, -t, t)),
    ((1, 0, -t**2, -t), (0, 1, -t, t**2)),
    ((0, 1, -t**2, t), (1, 0, -t, -t**2)),
    ((0, 1, -t, 1), (1, 0, -1, -t)),
    ((1, 0, -t, -1), (0, 1, -1, t)),
    ((1, 0, -1, -t**2), (0, 1, -t**2, 1)),
    ((0, 1, -1, t**2), (1, 0, -t**2, -1)),
    ((1, 1, t, 0), (1, 1, t**2, 0)),
    ((1, -1, 0, t), (1, -1, 0, t**2)),
]


def penrose() -> Configuration:
    """The ten-line Penrose spread marked by Penrose and quasi-Penrose parameters"""
    marked = [extended_parameters() for _ in range(8)] + [extended_parameters_l8() for _ in range(2)]
    return Configuration(field=EISENSTEIN, lines=_lines(EISENSTEIN, PENROSE_ROWS),
                         marked=marked, name="penrose")


HALF_PENROSE_LINES = (0, 2, 4, 6, 8)


def penrose_half() -> Configuration:
    """Five lines of the Penrose spread, covering 20 Penrose points"""
    lines = _lines(EISENSTEIN, [PENROSE_ROWS[idx] for idx in HALF_PENROSE_LINES])
    marked = [penrose_parameters() for _ in range(4)] + [penrose_parameters_l8()]
    return Configuration(field=EISENSTEIN, lines=lines, marked=marked, name="penrose_half")


KLEIN_ROWS = [
    ((0, 0, 1, 0), (0, 0, 0, 1)),
    ((0, 1, 0, -i), (1, 0, i, 0)),
    ((0, 1, 1, 0), (1, 0, 0, -1)),
    ((0, 1, i, 0), (1, 0, 0, i)),
    ((0, 1, -1, 0), (1, 0, 0, 1)),
    ((0, 1, -i, 0), (1, 0, 0, -i)),
    ((0, 1, 0, 1), (1, 0, 1, 0)),
    ((1, 0, 0, 0), (0, 1, 0, 0)),
    ((0, 1, 0, i), (1, 0, -i, 0)),
    ((0, 1, 0, -1), (1, 0, -1, 0)),
]


def klein() -> Configuration:
    """Ten mutually skew lines through the 60 Klein points, each marked by E"""
    return Configuration(field=GAUSSIAN, lines=_lines(GAUSSIAN, KLEIN_ROWS),
                         marked=[klein_parameters() for _ in KLEIN_ROWS], name="klein")


def p4_25() -> Configuration:
    from ..core.p4ext import l25_configuration
    return l25_configuration()
