"""
The 25-line configuration of P^4 over Q[t]/(t^4 + t^3 + t^2 + t + 1), cut out
as the orbit of one line under the C5 x C5 generated by a coordinate shift and
a diagonal scaling, with projections taken inside the hyperplanes that
contain three of its lines.
"""

from collections import Counter
from itertools import combinations
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from .field import CYCLOTOMIC5, FieldDescriptor, FieldElement
from .groupoid import Configuration, GroupoidAnalysis, enumerate_generators, vertex_group
from .interfaces import ProjectionModel
from .linalg import det2, det3, rank
from .projective import ParamLine, PglMap, ProjPoint, canonicalize
from ..custom_errors import DegenerateTripleError, DimensionMismatchError, KernelDimensionError
from ..models.models import GroupResult, ParabolicWitness
from ..utils.logging import BaseLogger

logger = BaseLogger.get_logger()

BASE_LINE_ROWS = ((0, 1, 0, 0, -1), (0, 0, 1, -1, 0))

Vector = Sequence[FieldElement]
Minors3 = Dict[Tuple[int, int, int], FieldElement]


def sigma(point: ProjPoint) -> ProjPoint:
    """(p0, p1, p2, p3, p4) -> (p4, p0, p1, p2, p3)"""
    c = point.coords
    return ProjPoint((c[4], c[0], c[1], c[2], c[3]))


def tau(point: ProjPoint) -> ProjPoint:
    """(p0, ..., p4) -> (p0, t p1, t^2 p2, t^3 p3, t^4 p4)"""
    t = point.field.gen
    return ProjPoint([c * t ** k for k, c in enumerate(point.coords)])


def _apply_line(line: ParamLine, a: int, b: int) -> ParamLine:
    points = [line.basis0, line.basis1]
    for _ in range(b):
        points = [tau(p) for p in points]
    for _ in range(a):
        points = [sigma(p) for p in points]
    return ParamLine(*points)


def base_line(field: FieldDescriptor = CYCLOTOMIC5) -> ParamLine:
    return ParamLine.of(field, *BASE_LINE_ROWS)


def generate_l25(field: FieldDescriptor = CYCLOTOMIC5) -> List[ParamLine]:
    """sigma^a tau^b (L00) for 0 <= a, b <= 4, distinct as subspaces, in (a, b) order"""
    start = base_line(field)
    lines: List[ParamLine] = []
    keys = set()
    for a in range(5):
        for b in range(5):
            line = _apply_line(start, a, b)
            key = line.span_key()
            if key not in keys:
                keys.add(key)
                lines.append(line)
    logger.debug(f"Orbit of the base line has {len(lines)} members")
    return lines


def _stack(*lines: ParamLine) -> List[List[FieldElement]]:
    rows: List[List[FieldElement]] = []
    for line in lines:
        rows.extend(line.rows())
    return rows


def _check_p4(*lines: ParamLine) -> None:
    if any(line.ambient_dim != 4 for line in lines):
        raise DimensionMismatchError("Expected lines of P^4")


def lines_skew4(first: ParamLine, second: ParamLine) -> bool:
    _check_p4(first, second)
    return rank(_stack(first, second)) == 4


def coplanar_triple(u: ParamLine, v: ParamLine, w: ParamLine) -> bool:
    """Whether the three lines lie in a common hyperplane of P^4"""
    _check_p4(u, v, w)
    return rank(_stack(u, v, w)) <= 4


def _minors3(u: Vector, v0: Vector, v1: Vector) -> Minors3:
    rows = (u, v0, v1)
    return {
        cols: det3(*[[r[c] for c in cols] for r in rows])
        for cols in combinations(range(5), 3)
    }


def _extension_minor(m3: Minors3, x: Vector, deleted: int) -> FieldElement:
    # 4x4 minor of [u; v0; v1; x] without column `deleted`, expanded along x
    cols = [c for c in range(5) if c != deleted]
    total = None
    for p, col in enumerate(cols):
        if x[col].is_zero():
            continue
        rest = tuple(c for c in cols if c != col)
        term = x[col] * m3[rest]
        if (3 + p) % 2:
            term = -term
        total = term if total is None else total + term
    return total if total is not None else x[0].field.zero


def _kernel_dimension(system: List[Tuple[FieldElement, FieldElement]]) -> int:
    if all(a.is_zero() and b.is_zero() for a, b in system):
        return 2
    for (a, b), (c, d) in combinations(system, 2):
        if not det2(a, b, c, d).is_zero():
            return 0
    return 1


def _hyperplane_projection(m3_u0: Minors3, m3_u1: Minors3, w0: Vector, w1: Vector) -> PglMap:
    systems = []
    for m3 in (m3_u0, m3_u1):
        system = [(_extension_minor(m3, w0, c), _extension_minor(m3, w1, c)) for c in range(5)]
        dim = _kernel_dimension(system)
        if dim != 1:
            raise KernelDimensionError(f"Projection system has a {dim}-dimensional kernel")
        systems.append(system)
    # read both kernel vectors off one common minor so the columns scale together
    for r in range(5):
        (b0_u0, b1_u0), (b0_u1, b1_u1) = systems[0][r], systems[1][r]
        rows = [[b1_u0, b1_u1], [-b0_u0, -b0_u1]]
        if not det2(rows[0][0], rows[0][1], rows[1][0], rows[1][1]).is_zero():
            return canonicalize(rows)
    raise KernelDimensionError("No minor determines the projection")


def projection4(u: ParamLine, v: ParamLine, w: ParamLine) -> PglMap:
    """pi(U, V, W): each u in U goes to the point where W meets the plane spanned by u and V"""
    if not lines_skew4(u, v):
        raise DegenerateTripleError("Domain and auxiliary lines intersect", pair=("U", "V"))
    if not lines_skew4(v, w):
        raise DegenerateTripleError("Auxiliary and codomain lines intersect", pair=("V", "W"))
    if not coplanar_triple(u, v, w):
        raise KernelDimensionError("Lines do not share a hyperplane")
    v0, v1 = v.basis0.coords, v.basis1.coords
    return _hyperplane_projection(_minors3(u.basis0.coords, v0, v1),
                                  _minors3(u.basis1.coords, v0, v1),
                                  w.basis0.coords, w.basis1.coords)


class HyperplaneProjection(ProjectionModel):
    """Projection between lines of P^4 that share a hyperplane with the auxiliary line"""

    def __init__(self, lines: Sequence[ParamLine]):
        super().__init__(lines)
        _check_p4(*self.lines)
        n = len(self.lines)
        self._normals: Dict[Tuple[int, int], Optional[Tuple[FieldElement, ...]]] = {}
        for i in range(n):
            for k in range(i + 1, n):
                self._normals[(i, k)] = hyperplane_normal(self.lines[i], self.lines[k])
        self._minors: Dict[Tuple[int, int, int], Minors3] = {}

    def normal(self, i: int, k: int) -> Optional[Tuple[FieldElement, ...]]:
        return self._normals[(i, k) if i < k else (k, i)]

    def skew(self, i: int, k: int) -> bool:
        return i != k and self.normal(i, k) is not None

    def contains(self, normal: Tuple[FieldElement, ...], line: int) -> bool:
        target = self.lines[line]
        return all(_dot(normal, p.coords).is_zero() for p in (target.basis0, target.basis1))

    def valid_triple(self, i: int, j: int, k: int) -> bool:
        if i == k or j == i or j == k or not self.skew(i, j) or not self.skew(j, k):
            return False
        return self.contains(self.normal(i, j), k)

    def _minors_for(self, i: int, side: int, j: int) -> Minors3:
        key = (i, side, j)
        if key not in self._minors:
            u = self.lines[i].basis1 if side else self.lines[i].basis0
            v = self.lines[j]
            self._minors[key] = _minors3(u.coords, v.basis0.coords, v.basis1.coords)
        return self._minors[key]

    def project(self, i: int, j: int, k: int) -> PglMap:
        w = self.lines[k]
        return _hyperplane_projection(self._minors_for(i, 0, j), self._minors_for(i, 1, j),
                                      w.basis0.coords, w.basis1.coords)

    def hyperplanes(self) -> List[List[int]]:
        """Maximal sets of at least three lines sharing a hyperplane"""
        found: Dict[ProjPoint, set] = {}
        for (i, k), normal in self._normals.items():
            if normal is None:
                continue
            key = ProjPoint(normal)
            if key in found:
                continue
            members = {m for m in range(len(self.lines)) if self.contains(normal, m)}
            found[key] = members
        return sorted(sorted(members) for members in found.values() if len(members) >= 3)


def _dot(a: Sequence[FieldElement], b: Sequence[FieldElement]) -> FieldElement:
    total = a[0] * b[0]
    for x, y in zip(a[1:], b[1:]):
        total = total + x * y
    return total


def hyperplane_normal(first: ParamLine, second: ParamLine) -> Optional[Tuple[FieldElement, ...]]:
    """h with h . x = det[u0; u1; v0; v1; x], or None when the lines meet"""
    _check_p4(first, second)
    m3 = _minors3(first.basis0.coords, first.basis1.coords, second.basis0.coords)
    last = second.basis1.coords
    normal = []
    for c in range(5):
        minor = _extension_minor(m3, last, c)
        normal.append(-minor if c % 2 else minor)
    if all(h.is_zero() for h in normal):
        return None
    return tuple(normal)


def incidence_stats(lines: Optional[Sequence[ParamLine]] = None) -> Dict[str, Dict[int, int]]:
    """Histograms of lines per hyperplane and hyperplanes per line"""
    model = HyperplaneProjection(lines if lines is not None else generate_l25())
    planes = model.hyperplanes()
    per_line = Counter(line for plane in planes for line in plane)
    return {
        "hyperplanes": len(planes),
        "lines_per_hyperplane": dict(Counter(len(plane) for plane in planes)),
        "hyperplanes_per_line": dict(Counter(per_line[m] for m in range(len(model.lines)))),
    }


def l25_configuration(field: FieldDescriptor = CYCLOTOMIC5) -> Configuration:
    return Configuration(field=field, lines=generate_l25(field), marked=None, name="p4_25")


def vertex_group_p4(base: int = 0, cap: Optional[int] = None,
                    config: Optional[Configuration] = None,
                    analysis: Optional[GroupoidAnalysis] = None) -> GroupResult:
    config = config or l25_configuration()
    analysis = analysis or enumerate_generators(config, HyperplaneProjection(config.lines))
    return vertex_group(config, base, cap=cap, analysis=analysis)


# --- parabolic search ---

Word = Tuple[Tuple[int, int, int], ...]


def _reach_levels(analysis: GroupoidAnalysis, base: int, depth: int, size_limit: int,
                  field: FieldDescriptor) -> List[Dict[int, Dict[PglMap, Word]]]:
    """levels[a][X]: distinct maps base -> X realised by paths of exactly a simple morphisms"""
    outgoing = analysis.outgoing()
    levels = [{base: {PglMap.identity(field): ()}}]
    for _ in range(depth):
        nxt: Dict[int, Dict[PglMap, Word]] = {}
        size = 0
        for x, maps in levels[-1].items():
            for idx in outgoing.get(x, []):
                g = analysis.generators[idx]
                bucket = nxt.setdefault(g.dst, {})
                for f, word in maps.items():
                    m = g.map @ f
                    if m not in bucket:
                        bucket[m] = word + (analysis.triples[idx],)
                        size += 1
        levels.append(nxt)
        if size > size_limit:
            break
    return levels


def _embed(maps: Sequence[PglMap], root: complex) -> np.ndarray:
    return np.array([[e.to_complex(root) for e in m.entries] for m in maps], dtype=complex)


def _reverse_word(word: Word) -> Word:
    return tuple((k, j, i) for (i, j, k) in reversed(word))


def find_parabolic(analysis: GroupoidAnalysis, base: int, field: FieldDescriptor,
                   max_word_length: int = 4, candidate_limit: int = 2_000_000) -> Optional[ParabolicWitness]:
    """Shortest loop at base, up to max_word_length simple morphisms, whose map is parabolic.

    Loops g^-1 . f are met in the middle; candidates are screened in a complex
    embedding and confirmed exactly.
    """
    depth = (max_word_length + 1) // 2
    levels = _reach_levels(analysis, base, depth, candidate_limit, field)
    root = field.complex_root()
    tried = 0
    for length in range(2, max_word_length + 1):
        a, b = (length + 1) // 2, length // 2
        if a >= len(levels) or b >= len(levels):
            break
        for x in sorted(levels[a]):
            if x not in levels[b]:
                continue
            fs = list(levels[a][x].items())
            gs = list(levels[b][x].items())
            tried += len(fs) * len(gs)
            if tried > candidate_limit:
                logger.debug(f"Parabolic search stopped after {tried} candidates")
                return None
            F = _embed([f for f, _ in fs], root)
            G = _embed([g for g, _ in gs], root)
            # trace of adj(g) . f for every pair
            trace = (np.outer(G[:, 3], F[:, 0]) - np.outer(G[:, 1], F[:, 2])
                     - np.outer(G[:, 2], F[:, 1]) + np.outer(G[:, 0], F[:, 3]))
            det = np.outer(G[:, 0] * G[:, 3] - G[:, 1] * G[:, 2], F[:, 0] * F[:, 3] - F[:, 1] * F[:, 2])
            gap = np.abs(trace * trace - 4 * det)
            scale = np.abs(trace * trace) + 4 * np.abs(det) + 1.0
            for gi, fi in zip(*np.nonzero(gap <= 1e-8 * scale)):
                g, g_word = gs[gi]
                f, f_word = fs[fi]
                loop = g.inverse() @ f
                if loop.is_parabolic():
                    word = f_word + _reverse_word(g_word)
                    logger.debug(f"Parabolic loop of length {len(word)} at line {base}: {loop}")
                    return ParabolicWitness(map=loop, word=list(word), candidates_tried=tried)
    return None
