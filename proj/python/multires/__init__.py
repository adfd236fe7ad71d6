"""Exact solvers for metric, local, multiset and outer dimensions of small graphs."""

from ._core import (
    VARIANTS,
    BudgetExhausted,
    CapExceeded,
    ConnectivityError,
    Error,
    Graph,
    InputError,
    ParseError,
    ValidationError,
    bounds,
    certify,
    connected_graphs,
    dimension,
    theorems,
    verify,
)

INFINITY = "infinity"

__all__ = [
    "VARIANTS", "INFINITY", "Graph", "dimension", "certify", "bounds", "verify", "theorems",
    "connected_graphs", "Error", "InputError", "ParseError", "ValidationError", "ConnectivityError",
    "CapExceeded", "BudgetExhausted",
]
