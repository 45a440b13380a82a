"""Grothendieck rings of weight modules over generalized Weyl algebras."""

from ._gwring import (
    ParseError,
    chain_decompose,
    components,
    consistent,
    indecomposables,
    mul,
    normalize,
    path_join_meet,
    reprint,
    run,
    simples,
    sl2,
)

__all__ = [
    "ParseError",
    "chain_decompose",
    "components",
    "consistent",
    "indecomposables",
    "mul",
    "normalize",
    "path_join_meet",
    "reprint",
    "run",
    "simples",
    "sl2",
]
