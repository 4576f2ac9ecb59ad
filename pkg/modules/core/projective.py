"""
Projective points, parametrized lines and PGL(2, K) maps.

Every point and every map is stored in canonical form (first nonzero
coordinate, resp. first nonzero row-major entry, equal to 1), so projective
equality is plain equality.
"""

from dataclasses import dataclass
from typing import Iterable, List, Optional, Sequence, Tuple

from .field import FieldDescriptor, FieldElement
from .linalg import det2, det4, nullspace, rank, row_echelon
from ..custom_errors import (
    DegenerateTripleError,
    DimensionMismatchError,
    EndpointMismatchError,
    FieldMismatchError,
    GeometryError,
    RepeatedPointError,
    SingularMatrixError,
)


class ProjPoint:
    """A point of P^N over K in canonical form"""

    __slots__ = ("coords", "_hash")

    def __init__(self, coords: Sequence[FieldElement]):
        coords = tuple(coords)
        if len(coords) < 2:
            raise DimensionMismatchError("A projective point needs at least two coordinates")
        lead = next((c for c in coords if not c.is_zero()), None)
        if lead is None:
            raise GeometryError("The zero vector is not a projective point")
        if lead != 1:
            inv = lead.inverse()
            coords = tuple(c * inv for c in coords)
        self.coords: Tuple[FieldElement, ...] = coords
        self._hash = None

    @classmethod
    def of(cls, field: FieldDescriptor, values: Iterable) -> "ProjPoint":
        return cls([field.coerce(v) for v in values])

    @property
    def field(self) -> FieldDescriptor:
        return self.coords[0].field

    @property
    def dim(self) -> int:
        return len(self.coords) - 1

    def __len__(self) -> int:
        return len(self.coords)

    def __iter__(self):
        return iter(self.coords)

    def __getitem__(self, i: int) -> FieldElement:
        return self.coords[i]

    def __eq__(self, other) -> bool:
        if not isinstance(other, ProjPoint):
            return NotImplemented
        return self.coords == other.coords

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self.coords)
        return self._hash

    def sort_key(self) -> Tuple:
        return tuple((c.coeffs for c in self.coords))

    def to_json(self) -> list:
        return [c.to_json() for c in self.coords]

    def __str__(self) -> str:
        return "(" + ", ".join(str(c) for c in self.coords) + ")"

    def __repr__(self) -> str:
        return f"ProjPoint{self}"


def _combine(a: FieldElement, p: Sequence[FieldElement], b: FieldElement, q: Sequence[FieldElement]) -> List[FieldElement]:
    return [a * x + b * y for x, y in zip(p, q)]


@dataclass(frozen=True)
class ParamLine:
    """A line spanned by two independent points; the basis parametrizes it by P^1"""
    basis0: ProjPoint
    basis1: ProjPoint

    def __post_init__(self):
        if len(self.basis0) != len(self.basis1):
            raise DimensionMismatchError("Basis points live in different projective spaces")
        if self.basis0.field != self.basis1.field:
            raise FieldMismatchError("Basis points are defined over different fields")
        if rank(self.rows()) != 2:
            raise GeometryError(f"Basis points {self.basis0} and {self.basis1} are dependent")

    @classmethod
    def of(cls, field: FieldDescriptor, row0: Iterable, row1: Iterable) -> "ParamLine":
        return cls(ProjPoint.of(field, row0), ProjPoint.of(field, row1))

    @property
    def field(self) -> FieldDescriptor:
        return self.basis0.field

    @property
    def ambient_dim(self) -> int:
        return self.basis0.dim

    def rows(self) -> List[List[FieldElement]]:
        return [list(self.basis0.coords), list(self.basis1.coords)]

    def point_at(self, param: ProjPoint) -> ProjPoint:
        """The point a*basis0 + b*basis1 for the parameter (a, b)"""
        a, b = param.coords
        return ProjPoint(_combine(a, self.basis0.coords, b, self.basis1.coords))

    def contains(self, point: ProjPoint) -> bool:
        return rank(self.rows() + [list(point.coords)]) == 2

    def parameter_of(self, point: ProjPoint) -> ProjPoint:
        """Inverse of point_at"""
        if not self.contains(point):
            raise GeometryError(f"Point {point} does not lie on the line")
        u, v, p = self.basis0.coords, self.basis1.coords, point.coords
        n = len(u)
        for i in range(n):
            for j in range(i + 1, n):
                d = det2(u[i], v[i], u[j], v[j])
                if d.is_zero():
                    continue
                a = det2(p[i], v[i], p[j], v[j]) / d
                b = det2(u[i], p[i], u[j], p[j]) / d
                return ProjPoint([a, b])
        raise GeometryError("Degenerate line basis")

    def span_key(self) -> Tuple[Tuple[FieldElement, ...], ...]:
        """Reduced row echelon form of the basis; equal keys <=> equal lines"""
        reduced, _ = row_echelon(self.rows())
        return tuple(tuple(r) for r in reduced)

    def same_line(self, other: "ParamLine") -> bool:
        return self.span_key() == other.span_key()

    def to_json(self) -> list:
        return [self.basis0.to_json(), self.basis1.to_json()]

    def __str__(self) -> str:
        return f"<{self.basis0}, {self.basis1}>"


def line_intersection(first: ParamLine, second: ParamLine) -> Optional[ProjPoint]:
    """Common point of two distinct lines, or None when they are skew"""
    if first.ambient_dim != second.ambient_dim:
        raise DimensionMismatchError("Lines live in different projective spaces")
    u0, u1 = first.basis0.coords, first.basis1.coords
    v0, v1 = second.basis0.coords, second.basis1.coords
    system = [[u0[k], u1[k], -v0[k], -v1[k]] for k in range(len(u0))]
    kernel = nullspace(system)
    if not kernel:
        return None
    if len(kernel) > 1:
        raise GeometryError("Lines coincide; their intersection is not a point")
    a, b = kernel[0][0], kernel[0][1]
    return ProjPoint(_combine(a, u0, b, u1))


class PglMap:
    """An element of PGL(2, K): a canonical invertible 2x2 matrix (a, b; c, d)"""

    __slots__ = ("entries", "_hash")

    def __init__(self, entries: Tuple[FieldElement, FieldElement, FieldElement, FieldElement]):
        self.entries = entries
        self._hash = None

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], field: Optional[FieldDescriptor] = None) -> "PglMap":
        if len(rows) != 2 or any(len(r) != 2 for r in rows):
            raise DimensionMismatchError("A PGL(2) element is a 2x2 matrix")
        if field is not None:
            rows = [[field.coerce(x) for x in r] for r in rows]
        return canonicalize(rows)

    @classmethod
    def identity(cls, field: FieldDescriptor) -> "PglMap":
        return cls((field.one, field.zero, field.zero, field.one))

    @property
    def field(self) -> FieldDescriptor:
        return self.entries[0].field

    def rows(self) -> List[List[FieldElement]]:
        a, b, c, d = self.entries
        return [[a, b], [c, d]]

    def determinant(self) -> FieldElement:
        a, b, c, d = self.entries
        return a * d - b * c

    def trace(self) -> FieldElement:
        return self.entries[0] + self.entries[3]

    def is_identity(self) -> bool:
        a, b, c, d = self.entries
        return b.is_zero() and c.is_zero() and a == d

    # canonical scalar matrices are exactly the identity
    is_scalar = is_identity

    def is_parabolic(self) -> bool:
        tr = self.trace()
        return not self.is_scalar() and tr * tr == 4 * self.determinant()

    def inverse(self) -> "PglMap":
        a, b, c, d = self.entries
        return canonicalize([[d, -b], [-c, a]])

    def __matmul__(self, other: "PglMap") -> "PglMap":
        a, b, c, d = self.entries
        e, f, g, h = other.entries
        return canonicalize([[a * e + b * g, a * f + b * h], [c * e + d * g, c * f + d * h]])

    def power(self, n: int) -> "PglMap":
        if n < 0:
            return self.inverse().power(-n)
        result = PglMap.identity(self.field)
        base = self
        while n:
            if n & 1:
                result = result @ base
            base = base @ base
            n >>= 1
        return result

    def __call__(self, point: ProjPoint) -> ProjPoint:
        return apply_map(self, point)

    def __eq__(self, other) -> bool:
        if not isinstance(other, PglMap):
            return NotImplemented
        return self.entries == other.entries

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self.entries)
        return self._hash

    def sort_key(self) -> Tuple:
        return tuple(e.coeffs for e in self.entries)

    def to_json(self) -> list:
        return [[x.to_json() for x in row] for row in self.rows()]

    def __str__(self) -> str:
        a, b, c, d = self.entries
        return f"[[{a}, {b}], [{c}, {d}]]"

    def __repr__(self) -> str:
        return f"PglMap{self}"


@dataclass(frozen=True)
class Morphism:
    """An arrow src -> dst of the groupoid"""
    src: int
    dst: int
    map: PglMap


def canonicalize(rows: Sequence[Sequence[FieldElement]]) -> PglMap:
    (a, b), (c, d) = rows
    if (a * d - b * c).is_zero():
        raise SingularMatrixError(f"Singular matrix [[{a}, {b}], [{c}, {d}]]")
    lead = next(x for x in (a, b, c, d) if not x.is_zero())
    if lead == 1:
        return PglMap((a, b, c, d))
    inv = lead.inverse()
    return PglMap((a * inv, b * inv, c * inv, d * inv))


def compose(second: Morphism, first: Morphism) -> Morphism:
    """second after first"""
    if first.dst != second.src:
        raise EndpointMismatchError(
            f"Cannot compose {first.src}->{first.dst} with {second.src}->{second.dst}"
        )
    return Morphism(first.src, second.dst, second.map @ first.map)


def apply_map(m: PglMap, p: ProjPoint) -> ProjPoint:
    if len(p) != 2:
        raise DimensionMismatchError("PGL(2) maps act on points of P^1")
    a, b, c, d = m.entries
    x, y = p.coords
    return ProjPoint([a * x + b * y, c * x + d * y])


def wedge4(p: ProjPoint, q: ProjPoint, r: ProjPoint, s: ProjPoint) -> FieldElement:
    """P ^ Q ^ R ^ S: the 4x4 determinant of the stored representatives"""
    if any(len(x) != 4 for x in (p, q, r, s)):
        raise DimensionMismatchError("wedge4 takes four points of P^3")
    return det4(p.coords, q.coords, r.coords, s.coords)


def lines_skew(first: ParamLine, second: ParamLine) -> bool:
    return not wedge4(first.basis0, first.basis1, second.basis0, second.basis1).is_zero()


def projection_matrix(u: ParamLine, v: ParamLine, w: ParamLine) -> PglMap:
    """pi(U, V, W): U -> W, projecting from V, as a map of parameters"""
    if not lines_skew(u, v):
        raise DegenerateTripleError("Domain and auxiliary lines intersect", pair=("U", "V"))
    if not lines_skew(v, w):
        raise DegenerateTripleError("Auxiliary and codomain lines intersect", pair=("V", "W"))
    v0, v1 = v.basis0, v.basis1
    u0, u1 = u.basis0, u.basis1
    w0, w1 = w.basis0, w.basis1
    return canonicalize([
        [-wedge4(u0, v0, v1, w1), -wedge4(u1, v0, v1, w1)],
        [wedge4(u0, v0, v1, w0), wedge4(u1, v0, v1, w0)],
    ])


def _pair_det(p: ProjPoint, q: ProjPoint) -> FieldElement:
    return det2(p[0], q[0], p[1], q[1])


def _frame(p: ProjPoint, q: ProjPoint, r: ProjPoint) -> List[List[FieldElement]]:
    # Matrix sending (1,0), (0,1), (1,1) to p, q, r
    d = _pair_det(p, q)
    lam = _pair_det(r, q) / d
    mu = _pair_det(p, r) / d
    return [[lam * p[0], mu * q[0]], [lam * p[1], mu * q[1]]]


def mobius_from_triples(src: Sequence[ProjPoint], dst: Sequence[ProjPoint]) -> PglMap:
    """The unique map sending src[i] to dst[i] for i = 0, 1, 2"""
    for triple in (src, dst):
        if len(triple) != 3:
            raise DimensionMismatchError("Exactly three points are required")
        if len(set(triple)) != 3:
            raise RepeatedPointError(f"Triple has a repeated point: {[str(p) for p in triple]}")
    (a, b), (c, d) = _frame(*src)
    src_inv = [[d, -b], [-c, a]]
    m = _frame(*dst)
    return canonicalize([
        [m[0][0] * src_inv[0][0] + m[0][1] * src_inv[1][0], m[0][0] * src_inv[0][1] + m[0][1] * src_inv[1][1]],
        [m[1][0] * src_inv[0][0] + m[1][1] * src_inv[1][0], m[1][0] * src_inv[0][1] + m[1][1] * src_inv[1][1]],
    ])


def element_order(m: PglMap, field: Optional[FieldDescriptor] = None) -> Optional[int]:
    """Order of m in PGL(2, K), or None when the order is infinite"""
    field = field or m.field
    bound = field.root_of_unity_bound()
    power = m
    for n in range(1, bound + 1):
        if power.is_scalar():
            return n
        power = power @ m
    return None
