from abc import ABC, abstractmethod
from typing import Sequence

from .projective import ParamLine, PglMap


class ProjectionModel(ABC):
    """Abstract interface for the simple morphisms pi(L_i, L_j, L_k) of a line configuration"""

    def __init__(self, lines: Sequence[ParamLine]):
        self.lines = list(lines)

    @abstractmethod
    def skew(self, i: int, k: int) -> bool:
        """Whether lines i and k are disjoint"""
        pass

    @abstractmethod
    def valid_triple(self, i: int, j: int, k: int) -> bool:
        """Whether pi(L_i, L_j, L_k) is a simple morphism"""
        pass

    @abstractmethod
    def project(self, i: int, j: int, k: int) -> PglMap:
        """Matrix of pi(L_i, L_j, L_k) acting on the parameters of L_i"""
        pass
