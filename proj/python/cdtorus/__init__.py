"""Exact verification of tensor-algebra torus endomorphism claims."""

from cdtorus._core import (
    AlgebraTable,
    build_tensor,
    j_invariant,
    rank,
    ranks,
    splitting_pairs,
    table,
    validate_table,
    verify,
    version,
)

__version__ = version()

__all__ = [
    "AlgebraTable",
    "build_tensor",
    "j_invariant",
    "rank",
    "ranks",
    "splitting_pairs",
    "table",
    "validate_table",
    "verify",
    "version",
]
