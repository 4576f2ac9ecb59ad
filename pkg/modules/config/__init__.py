from .settings import AnalysisConfig

__all__ = ["AnalysisConfig"]
