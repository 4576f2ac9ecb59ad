"""
The projection groupoid of a line configuration: simple morphisms,
hom-connectivity, vertex groups, point orbits and marked-point invariance.
"""

from collections import deque
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

import networkx as nx

from .field import FieldDescriptor
from .groups import generate_closure
from .interfaces import ProjectionModel
from .projective import Morphism, ParamLine, PglMap, ProjPoint, apply_map, compose, lines_skew, projection_matrix
from ..custom_errors import (
    DegenerateTripleError,
    DimensionMismatchError,
    GroupoidError,
    InvalidLineIndexError,
    MissingMarkedPointsError,
    RepeatedPointError,
)
from ..models.models import GroupResult, InvarianceReport, OrbitResult
from ..utils.logging import BaseLogger

logger = BaseLogger.get_logger()

Triple = Tuple[int, int, int]


@dataclass
class Configuration:
    """A named set of parametrized lines over a number field, optionally with marked parameters"""
    field: FieldDescriptor
    lines: List[ParamLine]
    marked: Optional[List[List[ProjPoint]]] = None
    name: str = "unnamed"

    def __post_init__(self):
        for idx, line in enumerate(self.lines):
            if line.field != self.field:
                raise GroupoidError(f"Line {idx} is not defined over {self.field}")
        dims = {line.ambient_dim for line in self.lines}
        if len(dims) > 1:
            raise DimensionMismatchError("Lines live in projective spaces of different dimension")
        duplicates = self.duplicate_lines()
        if duplicates:
            i, j = duplicates[0]
            raise GroupoidError(f"Lines {i} and {j} coincide")
        if self.marked is not None:
            if len(self.marked) != len(self.lines):
                raise MissingMarkedPointsError(
                    f"Marked sets given for {len(self.marked)} of {len(self.lines)} lines"
                )
            for idx, points in enumerate(self.marked):
                if len(set(points)) != len(points):
                    raise RepeatedPointError(f"Marked points on line {idx} are not distinct")

    @property
    def ambient_dim(self) -> int:
        return self.lines[0].ambient_dim if self.lines else 3

    def duplicate_lines(self) -> List[Tuple[int, int]]:
        first_seen: Dict[tuple, int] = {}
        pairs = []
        for idx, line in enumerate(self.lines):
            key = line.span_key()
            if key in first_seen:
                pairs.append((first_seen[key], idx))
            else:
                first_seen[key] = idx
        return pairs

    def check_index(self, idx: int) -> None:
        if not 0 <= idx < len(self.lines):
            raise InvalidLineIndexError(f"Line index {idx} outside 0..{len(self.lines) - 1}")

    def subconfiguration(self, indices: Sequence[int], name: Optional[str] = None) -> "Configuration":
        for idx in indices:
            self.check_index(idx)
        return Configuration(
            field=self.field,
            lines=[self.lines[i] for i in indices],
            marked=[self.marked[i] for i in indices] if self.marked is not None else None,
            name=name or f"{self.name}[{','.join(str(i) for i in indices)}]",
        )


class SpaceProjection(ProjectionModel):
    """Projection between lines of P^3 through an auxiliary line skew to both"""

    def __init__(self, lines: Sequence[ParamLine]):
        super().__init__(lines)
        n = len(self.lines)
        self._skew = [[False] * n for _ in range(n)]
        for i in range(n):
            for k in range(i + 1, n):
                s = lines_skew(self.lines[i], self.lines[k])
                self._skew[i][k] = self._skew[k][i] = s

    def skew(self, i: int, k: int) -> bool:
        return self._skew[i][k]

    def valid_triple(self, i: int, j: int, k: int) -> bool:
        return i != k and j != i and j != k and self._skew[i][j] and self._skew[j][k]

    def project(self, i: int, j: int, k: int) -> PglMap:
        try:
            return projection_matrix(self.lines[i], self.lines[j], self.lines[k])
        except DegenerateTripleError as e:
            pair = (i, j) if e.pair == ("U", "V") else (j, k)
            raise DegenerateTripleError(f"Lines {pair[0]} and {pair[1]} intersect", pair=pair)


def projection_model_for(config: Configuration) -> ProjectionModel:
    if config.ambient_dim == 3:
        return SpaceProjection(config.lines)
    if config.ambient_dim == 4:
        from .p4ext import HyperplaneProjection
        return HyperplaneProjection(config.lines)
    raise DimensionMismatchError(f"No projection model for lines in P^{config.ambient_dim}")


@dataclass
class GroupoidAnalysis:
    """Simple morphisms of a configuration and the graphs they induce"""
    generators: List[Morphism]
    triples: List[Triple]
    skew_graph: nx.Graph
    hom_graph: nx.Graph
    aux_counts: Dict[Tuple[int, int], int]
    first_morphism: Dict[Tuple[int, int], int] = field(default_factory=dict)
    components: List[List[int]] = field(default_factory=list)

    def outgoing(self) -> Dict[int, List[int]]:
        out: Dict[int, List[int]] = {}
        for idx, g in enumerate(self.generators):
            out.setdefault(g.src, []).append(idx)
        return out

    def component_of(self, line: int) -> List[int]:
        return next(c for c in self.components if line in c)

    def aux_summary(self) -> Dict[str, int]:
        values = list(self.aux_counts.values())
        return {"min": min(values, default=0), "max": max(values, default=0)}

    def morphism_for(self, triple: Triple) -> Morphism:
        return self.generators[self.triples.index(triple)]


def enumerate_generators(config: Configuration, model: Optional[ProjectionModel] = None) -> GroupoidAnalysis:
    """All simple morphisms pi(i, j, k), ordered by (i, k, j)"""
    model = model or projection_model_for(config)
    n = len(config.lines)
    generators: List[Morphism] = []
    triples: List[Triple] = []
    aux_counts: Dict[Tuple[int, int], int] = {}
    first_morphism: Dict[Tuple[int, int], int] = {}

    skew_graph = nx.Graph()
    skew_graph.add_nodes_from(range(n))
    skew_graph.add_edges_from((i, k) for i in range(n) for k in range(i + 1, n) if model.skew(i, k))
    hom_graph = nx.Graph()
    hom_graph.add_nodes_from(range(n))

    for i in range(n):
        for k in range(n):
            if i == k:
                continue
            count = 0
            for j in range(n):
                if not model.valid_triple(i, j, k):
                    continue
                if (i, k) not in first_morphism:
                    first_morphism[(i, k)] = len(generators)
                generators.append(Morphism(i, k, model.project(i, j, k)))
                triples.append((i, j, k))
                count += 1
            aux_counts[(i, k)] = count
            if count:
                hom_graph.add_edge(i, k)

    analysis = GroupoidAnalysis(generators=generators, triples=triples, skew_graph=skew_graph,
                                hom_graph=hom_graph, aux_counts=aux_counts,
                                first_morphism=first_morphism)
    analysis.components = connectivity(analysis)
    logger.debug(f"{config.name}: {len(generators)} simple morphisms, "
                 f"{len(analysis.components)} component(s)")
    return analysis


def connectivity(analysis: GroupoidAnalysis) -> List[List[int]]:
    """Lines grouped by hom-connectivity, each group sorted, groups ordered by smallest member"""
    components = [sorted(c) for c in nx.connected_components(analysis.hom_graph)]
    return sorted(components, key=lambda c: c[0])


def spanning_tree_maps(config: Configuration, analysis: GroupoidAnalysis, base: int,
                       reverse: bool = False) -> Dict[int, PglMap]:
    """tau[v]: base -> v along a breadth-first tree of the base's component"""
    order = (lambda nbrs: sorted(nbrs, reverse=True)) if reverse else sorted
    tau = {base: PglMap.identity(config.field)}
    for parent, child in nx.bfs_edges(analysis.hom_graph, base, sort_neighbors=order):
        edge = analysis.generators[analysis.first_morphism[(parent, child)]]
        tau[child] = edge.map @ tau[parent]
    return tau


def vertex_group(config: Configuration, base: int, cap: Optional[int] = None,
                 analysis: Optional[GroupoidAnalysis] = None, reverse: bool = False) -> GroupResult:
    """Aut(L_base) generated by tau_dst^-1 . g . tau_src over all simple morphisms g"""
    config.check_index(base)
    analysis = analysis or enumerate_generators(config)
    tau = spanning_tree_maps(config, analysis, base, reverse=reverse)
    tau_inv = {v: m.inverse() for v, m in tau.items()}

    gens = []
    for g in analysis.generators:
        if g.src in tau:
            gens.append(tau_inv[g.dst] @ g.map @ tau[g.src])
    gens = list(dict.fromkeys(gens))
    logger.debug(f"{config.name}: vertex group at line {base} from {len(gens)} distinct loop generators")
    return generate_closure(gens, cap=cap, field=config.field)


def orbit(config: Configuration, line: int, point: ProjPoint, member_cap: int = 10000,
          analysis: Optional[GroupoidAnalysis] = None) -> OrbitResult:
    """Breadth-first closure of (line, point) under all simple morphisms"""
    config.check_index(line)
    if len(point) != 2:
        raise DimensionMismatchError("Orbit start must be a point of P^1")
    analysis = analysis or enumerate_generators(config)
    outgoing = analysis.outgoing()

    start = (line, point)
    members = [start]
    seen = {start}
    queue = deque([start])
    truncated = False
    while queue and not truncated:
        src, p = queue.popleft()
        for idx in outgoing.get(src, []):
            g = analysis.generators[idx]
            item = (g.dst, apply_map(g.map, p))
            if item in seen:
                continue
            if len(members) >= member_cap:
                truncated = True
                break
            seen.add(item)
            members.append(item)
            queue.append(item)
    return OrbitResult(members=members, truncated=truncated, start=start)


def marked_invariance(config: Configuration, analysis: Optional[GroupoidAnalysis] = None) -> InvarianceReport:
    """Whether every simple morphism maps marked points of its source onto those of its target"""
    if config.marked is None:
        raise MissingMarkedPointsError(f"Configuration '{config.name}' has no marked points")
    analysis = analysis or enumerate_generators(config)
    targets = [set(points) for points in config.marked]
    for checked, (g, triple) in enumerate(zip(analysis.generators, analysis.triples), start=1):
        if len(config.marked[g.src]) != len(targets[g.dst]):
            return InvarianceReport(holds=False, checked=checked, counterexample=triple)
        for p in config.marked[g.src]:
            image = apply_map(g.map, p)
            if image not in targets[g.dst]:
                return InvarianceReport(holds=False, checked=checked, counterexample=triple,
                                        offending_point=p, image=image)
    return InvarianceReport(holds=True, checked=len(analysis.generators))


def compose_word(config: Configuration, word: Sequence[Triple],
                 model: Optional[ProjectionModel] = None) -> Morphism:
    """pi(word[-1]) o ... o pi(word[0]); consecutive triples must share endpoints"""
    if not word:
        raise GroupoidError("Cannot compose an empty word")
    model = model or projection_model_for(config)
    result = None
    for i, j, k in word:
        for idx in (i, j, k):
            config.check_index(idx)
        if not model.valid_triple(i, j, k):
            raise DegenerateTripleError(f"pi({i}, {j}, {k}) is not a simple morphism", pair=(i, k))
        step = Morphism(i, k, model.project(i, j, k))
        result = step if result is None else compose(step, result)
    return result
