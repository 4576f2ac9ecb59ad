from .builtins import d4, d4sub6, klein, p4_25, penrose, penrose_half, quadric4
from ..custom_errors import UnknownBuiltinError

# Name -> factory; every call builds a fresh Configuration
BUILTIN_REGISTRY = {
    "quadric4": quadric4,
    "d4": d4,
    "d4sub6": d4sub6,
    "penrose": penrose,
    "penrose_half": penrose_half,
    "klein": klein,
    "p4_25": p4_25,
}


def builtin(name: str):
    try:
        factory = BUILTIN_REGISTRY[name]
    except KeyError:
        raise UnknownBuiltinError(
            f"Unknown built-in configuration '{name}'; choose from {', '.join(BUILTIN_REGISTRY)}"
        )
    return factory()
