from ._core import (
    AmalgamError,
    CapacityError,
    HypothesisError,
    ParseError,
    Ring,
    ScopeError,
    analyze,
    decompose,
    duplicate,
    ideals,
    idempotents,
    is_local,
    is_qf,
    parse,
    sweep,
    theorem,
)

__all__ = [
    "AmalgamError",
    "CapacityError",
    "HypothesisError",
    "ParseError",
    "Ring",
    "ScopeError",
    "analyze",
    "decompose",
    "duplicate",
    "ideals",
    "idempotents",
    "is_local",
    "is_qf",
    "parse",
    "sweep",
    "theorem",
]
