"""Exact Moore-Penrose inverses of matrices and block operators.

Scalars are exact strings such as "1/2" or "1/2-1/3*i"; inputs may also be
ints or fractions.Fraction. Sparse vectors are dicts {index: scalar} with
1-based indices.
"""

from ._core import (
    BlockOperator,
    Error,
    ParseError,
    blockwise_rgi,
    char_conditions,
    mp_inverse,
    mp_inverse_geometric,
    parse_scalar,
    rank,
    verify_penrose,
)

__all__ = [
    "BlockOperator",
    "Error",
    "ParseError",
    "blockwise_rgi",
    "char_conditions",
    "mp_inverse",
    "mp_inverse_geometric",
    "parse_scalar",
    "rank",
    "verify_penrose",
]
