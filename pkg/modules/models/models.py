from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple

from ..core.projective import PglMap, ProjPoint


@dataclass
class GroupResult:
    """A finite subgroup of PGL(2, K), or the verdict that a closure exceeded its cap"""
    elements: List[PglMap]
    order: Optional[int]
    histogram: Dict[int, int]
    label: str
    cap: int
    permutations: Optional[List[Tuple[int, ...]]] = None

    @property
    def is_finite(self) -> bool:
        return self.order is not None

    def element_set(self) -> frozenset:
        return frozenset(self.elements)

    def to_dict(self, include_elements: bool = True) -> Dict[str, Any]:
        data = {
            "order": self.order,
            "label": self.label,
            "histogram": {str(k): v for k, v in sorted(self.histogram.items())},
            "cap": self.cap,
        }
        if include_elements:
            data["elements"] = [m.to_json() for m in self.elements]
        if self.permutations is not None and include_elements:
            data["permutations"] = [list(p) for p in self.permutations]
        return data


@dataclass
class OrbitResult:
    """Points reached from a start point under all simple morphisms"""
    members: List[Tuple[int, ProjPoint]]
    truncated: bool
    start: Tuple[int, ProjPoint]

    def member_set(self) -> frozenset:
        return frozenset(self.members)

    def by_line(self) -> Dict[int, List[ProjPoint]]:
        grouped: Dict[int, List[ProjPoint]] = {}
        for line, point in self.members:
            grouped.setdefault(line, []).append(point)
        return dict(sorted(grouped.items()))

    def __len__(self) -> int:
        return len(self.members)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "start": {"line": self.start[0], "point": self.start[1].to_json()},
            "count": len(self.members),
            "truncated": self.truncated,
            "members": {str(line): [p.to_json() for p in pts] for line, pts in self.by_line().items()},
        }


@dataclass
class InvarianceReport:
    """Whether every simple morphism carries marked points onto marked points"""
    holds: bool
    checked: int
    counterexample: Optional[Tuple[int, int, int]] = None
    offending_point: Optional[ProjPoint] = None
    image: Optional[ProjPoint] = None

    def __bool__(self) -> bool:
        return self.holds

    def to_dict(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {"holds": self.holds, "checked": self.checked}
        if self.counterexample is not None:
            data["counterexample"] = {
                "triple": list(self.counterexample),
                "point": self.offending_point.to_json() if self.offending_point else None,
                "image": self.image.to_json() if self.image else None,
            }
        return data


@dataclass
class ParabolicWitness:
    """A parabolic vertex-group element together with the loop that produced it"""
    map: PglMap
    word: List[Tuple[int, int, int]]
    candidates_tried: int

    @property
    def length(self) -> int:
        return len(self.word)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "matrix": self.map.to_json(),
            "length": self.length,
            "word": [list(triple) for triple in self.word],
            "candidates_tried": self.candidates_tried,
        }


@dataclass
class CriterionResult:
    """Outcome of one verification criterion"""
    number: int
    name: str
    passed: bool
    expected: str
    actual: str
    seconds: float = 0.0
    notes: List[str] = field(default_factory=list)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "number": self.number,
            "name": self.name,
            "passed": self.passed,
            "expected": self.expected,
            "actual": self.actual,
            "seconds": round(self.seconds, 3),
            "notes": self.notes,
        }


@dataclass
class AgreementReport:
    """Geometric projections of D4 points compared with the combinatorial rule"""
    checked: int
    morphisms: int
    mismatches: List[Tuple[Tuple[int, int, int], str, str, str]] = field(default_factory=list)

    @property
    def holds(self) -> bool:
        return not self.mismatches

    def to_dict(self) -> Dict[str, Any]:
        return {
            "holds": self.holds,
            "morphisms": self.morphisms,
            "checked": self.checked,
            "mismatches": [
                {"triple": list(t), "point": p, "geometric": g, "combinatorial": c}
                for t, p, g, c in self.mismatches
            ],
        }
