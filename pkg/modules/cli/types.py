from pydantic import BaseModel, Field
from typing import Any, Dict, List, Optional

# Matrices and points are nested lists of coefficients in the config document convention
Coefficients = Any


# --- SHARED PIECES ---
class GroupReport(BaseModel):
    base: int
    component: List[int]
    order: Optional[int]
    label: str
    alias: Optional[str] = None
    histogram: Dict[str, int] = Field(default_factory=dict)
    cap: int
    elements: Optional[List[Coefficients]] = None


class InvarianceSummary(BaseModel):
    holds: bool
    checked: int
    counterexample: Optional[Dict[str, Any]] = None


class ParabolicSummary(BaseModel):
    found: bool
    matrix: Optional[Coefficients] = None
    word: Optional[List[List[int]]] = None
    candidates_tried: Optional[int] = None


# --- COMMAND REPORTS ---
class AnalyzeReport(BaseModel):
    command: str = "analyze"
    configuration: str
    field: str
    lines: int
    simple_morphisms: int
    components: List[List[int]]
    aux_counts: Dict[str, int]
    vertex_groups: List[GroupReport]
    marked_invariance: Optional[InvarianceSummary] = None
    parabolic: Optional[ParabolicSummary] = None
    seconds: float


class OrbitReport(BaseModel):
    command: str = "orbit"
    configuration: str
    start_line: int
    start_point: Coefficients
    count: int
    truncated: bool
    members: Dict[str, List[Coefficients]]
    seconds: float


class StabilizerReport(BaseModel):
    command: str = "stabilizer"
    field: str
    points: List[Coefficients]
    order: int
    label: str
    alias: Optional[str] = None
    histogram: Dict[str, int]
    even_permutations_only: bool
    elements: Optional[List[Coefficients]] = None
    permutations: Optional[List[List[int]]] = None
    seconds: float


class CriterionReport(BaseModel):
    number: int
    name: str
    passed: bool
    expected: str
    actual: str
    seconds: float
    notes: List[str] = Field(default_factory=list)


class VerifyReport(BaseModel):
    command: str = "verify"
    passed: bool
    corrupted: Optional[str] = None
    criteria: List[CriterionReport]
    seconds: float
