import os
from dataclasses import dataclass, field
from typing import Optional
from ..custom_errors import ConfigurationError


@dataclass
class ClosureConfig:
    """Configuration for group closure"""
    cap: Optional[int] = None  # None selects the soundness cap of the field

    def validate(self) -> None:
        if self.cap is not None and self.cap < 1:
            raise ConfigurationError("Closure cap must be a positive integer")


@dataclass
class OrbitConfig:
    """Configuration for orbit enumeration"""
    member_cap: int = 10000

    def validate(self) -> None:
        if self.member_cap < 1:
            raise ConfigurationError("Orbit member cap must be a positive integer")


@dataclass
class ParabolicSearchConfig:
    """Configuration for the short-word parabolic search in P^4"""
    max_word_length: int = 4
    candidate_limit: int = 2_000_000

    def validate(self) -> None:
        if not 2 <= self.max_word_length <= 6:
            raise ConfigurationError("Parabolic word length must lie between 2 and 6")
        if self.candidate_limit < 1:
            raise ConfigurationError("Parabolic candidate limit must be positive")


@dataclass
class OutputConfig:
    """Configuration for report rendering"""
    element_listing_threshold: int = 60
    force_elements: bool = False
    json: bool = False

    def validate(self) -> None:
        if self.element_listing_threshold < 0:
            raise ConfigurationError("Element listing threshold cannot be negative")


@dataclass
class AnalysisConfig:
    """Main configuration for the analysis system"""
    closure: ClosureConfig = field(default_factory=ClosureConfig)
    orbit: OrbitConfig = field(default_factory=OrbitConfig)
    parabolic: ParabolicSearchConfig = field(default_factory=ParabolicSearchConfig)
    output: OutputConfig = field(default_factory=OutputConfig)

    # Logging and debugging
    log_level: str = "WARNING"
    debug_mode: bool = False

    def validate(self) -> None:
        """Validate all configurations"""
        self.closure.validate()
        self.orbit.validate()
        self.parabolic.validate()
        self.output.validate()
        if self.log_level.upper() not in {"DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"}:
            raise ConfigurationError(f"Unknown log level: {self.log_level}")

    @classmethod
    def from_env(cls) -> 'AnalysisConfig':
        """Create configuration from environment variables"""
        try:
            cap = os.getenv("LINE_GROUPOIDS_CAP")
            config = cls(
                closure=ClosureConfig(cap=int(cap) if cap else None),
                orbit=OrbitConfig(
                    member_cap=int(os.getenv("LINE_GROUPOIDS_ORBIT_CAP", "10000"))
                ),
                parabolic=ParabolicSearchConfig(
                    max_word_length=int(os.getenv("LINE_GROUPOIDS_WORD_LENGTH", "4")),
                    candidate_limit=int(os.getenv("LINE_GROUPOIDS_CANDIDATE_LIMIT", "2000000"))
                ),
                output=OutputConfig(
                    element_listing_threshold=int(os.getenv("LINE_GROUPOIDS_LISTING_THRESHOLD", "60"))
                ),
                log_level=os.getenv("LOG_LEVEL", "WARNING"),
                debug_mode=os.getenv("DEBUG_MODE", "false").lower() == "true"
            )
        except ValueError as e:
            raise ConfigurationError(f"Invalid numeric environment setting: {e}")

        config.validate()
        return config
