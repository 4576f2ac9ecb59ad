"""
Finite subgroups of PGL(2, K): closure under products with a soundness cap,
classification among the finite subgroups of PGL(2, C), and setwise
stabilizers of finite point sets of P^1.
"""

from collections import Counter, deque
from itertools import permutations
from typing import Dict, List, Optional, Sequence

from sympy.combinatorics import Permutation, PermutationGroup

from .field import FieldDescriptor
from .projective import PglMap, ProjPoint, apply_map, element_order, mobius_from_triples
from ..custom_errors import GroupError, InfiniteGroupError, RepeatedPointError
from ..models.models import GroupResult
from ..utils.logging import BaseLogger

logger = BaseLogger.get_logger()

TRIVIAL = "Trivial"
INFINITE = "Infinite"
OTHER_FINITE = "OtherFinite"

_SPORADIC = {
    "A4": {1: 1, 2: 3, 3: 8},
    "S4": {1: 1, 2: 9, 3: 8, 4: 6},
    "A5": {1: 1, 2: 15, 3: 20, 5: 24},
}

_ALIASES = {"D(6)": "S3", "D(4)": "C2 x C2"}


def soundness_cap(field: FieldDescriptor) -> int:
    """Any finite subgroup of PGL(2, K) has at most this many elements"""
    return max(60, 2 * field.root_of_unity_bound())


def label_alias(label: str) -> Optional[str]:
    return _ALIASES.get(label)


def _histogram(elements: Sequence[PglMap], field: FieldDescriptor) -> Dict[int, int]:
    counts = Counter()
    for m in elements:
        n = element_order(m, field)
        if n is None:
            raise GroupError(f"Element {m} of a finite closure has infinite order")
        counts[n] += 1
    return dict(sorted(counts.items()))


def generate_closure(gens: Sequence[PglMap], cap: Optional[int] = None,
                     field: Optional[FieldDescriptor] = None) -> GroupResult:
    """Breadth-first closure of gens under left multiplication"""
    if field is None:
        if not gens:
            raise GroupError("A field is required to close an empty generating set")
        field = gens[0].field
    cap = cap if cap is not None else soundness_cap(field)

    unique_gens = list(dict.fromkeys(g for g in gens if not g.is_identity()))
    identity = PglMap.identity(field)
    elements = [identity]
    seen = {identity}
    queue = deque([identity])
    while queue:
        x = queue.popleft()
        for g in unique_gens:
            y = g @ x
            if y in seen:
                continue
            if len(elements) >= cap:
                logger.debug(f"Closure exceeded cap {cap} with {len(unique_gens)} generators")
                return GroupResult(elements=[], order=None, histogram={}, label=INFINITE, cap=cap)
            seen.add(y)
            elements.append(y)
            queue.append(y)

    result = GroupResult(elements=elements, order=len(elements),
                         histogram=_histogram(elements, field), label="", cap=cap)
    result.label = classify(result)
    logger.debug(f"Closure of {len(unique_gens)} generators: order {result.order}, {result.label}")
    return result


def regular_representation(elements: Sequence[PglMap]) -> PermutationGroup:
    """Left regular action of a finite group on its own elements"""
    index = {m: i for i, m in enumerate(elements)}
    perms = []
    for g in elements:
        try:
            perms.append(Permutation([index[g @ x] for x in elements]))
        except KeyError:
            raise GroupError("Element set is not closed under multiplication")
    return PermutationGroup(perms)


def _cyclic_subgroup(x: PglMap) -> List[PglMap]:
    powers = [x]
    while not powers[-1].is_identity():
        powers.append(powers[-1] @ x)
    return powers


def _is_dihedral(elements: Sequence[PglMap], histogram: Dict[int, int]) -> bool:
    """Order 2k with a cyclic subgroup of order k and at least k involutions outside it"""
    n = len(elements)
    if n % 2 or n < 4:
        return False
    k = n // 2
    if k not in histogram:
        return False
    for x in elements:
        sub = _cyclic_subgroup(x)
        if len(sub) != k:
            continue
        inside = set(sub)
        involutions = sum(1 for y in elements if y not in inside and (y @ y).is_identity())
        if involutions >= k:
            return True
    return False


def classify(group: GroupResult) -> str:
    if not group.is_finite:
        raise InfiniteGroupError(f"Cannot classify a closure that exceeded cap {group.cap}")
    n = group.order
    hist = group.histogram
    if n == 1:
        return TRIVIAL
    if regular_representation(group.elements).is_cyclic:
        return f"C({n})"
    for label, expected in _SPORADIC.items():
        if hist == expected:
            return label
    if _is_dihedral(group.elements, hist):
        return f"D({n})"
    return OTHER_FINITE


def permutes(m: PglMap, points: Sequence[ProjPoint]) -> bool:
    target = set(points)
    return {apply_map(m, p) for p in points} == target


def induced_permutation(m: PglMap, points: Sequence[ProjPoint]) -> tuple:
    index = {p: i for i, p in enumerate(points)}
    return tuple(index[apply_map(m, p)] for p in points)


def is_even(perm: Sequence[int]) -> bool:
    return Permutation(list(perm)).is_even


def stabilizer(points: Sequence[ProjPoint]) -> GroupResult:
    """All f in PGL(2, K) with f(X) = X"""
    points = list(points)
    if len(points) < 3:
        raise GroupError("A stabilizer needs at least three points")
    if len(set(points)) != len(points):
        raise RepeatedPointError("Point set contains duplicates")
    field = points[0].field
    source = points[:3]

    elements: List[PglMap] = []
    seen = set()
    for triple in permutations(points, 3):
        m = mobius_from_triples(source, triple)
        if m in seen or not permutes(m, points):
            continue
        seen.add(m)
        elements.append(m)

    result = GroupResult(elements=elements, order=len(elements),
                         histogram=_histogram(elements, field), label="",
                         cap=soundness_cap(field),
                         permutations=[induced_permutation(m, points) for m in elements])
    result.label = classify(result)
    logger.debug(f"Stabilizer of {len(points)} points: order {result.order}, {result.label}")
    return result
