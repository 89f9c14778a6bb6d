"""Monomial dynamical systems over finite fields.

Thin re-export of the compiled core.  Systems are given either as a text
file (``q <prime power> n <dim>`` header plus n exponent rows, ``zero`` for
a constant-zero component) or as a list of exponent rows plus q.
"""

from ._core import (
    InconsistencyError,
    ParseError,
    StateCapError,
    canonicalize,
    classify,
    compose,
    decide,
    evaluate,
    graph_dot,
    multiply,
    phase,
    power,
    reduce_exponent,
    reduce_system,
    sccs,
    walk_counts,
)

__all__ = [
    "InconsistencyError",
    "ParseError",
    "StateCapError",
    "canonicalize",
    "classify",
    "compose",
    "decide",
    "evaluate",
    "graph_dot",
    "multiply",
    "phase",
    "power",
    "reduce_exponent",
    "reduce_system",
    "sccs",
    "walk_counts",
]
