"""
Fuzzy Lattice Package.

This package provides the lattice of fuzzy subsets of a finite set with
grades in a finite chain, encoded as mixed-radix integer codes.
"""

from fuzzytop.lattice.fuzzy_lattice import (
    GradeVector,
    LatticeContext,
    complement,
    decode,
    encode,
    join,
    leq,
    meet,
)

__all__ = [
    "GradeVector",
    "LatticeContext",
    "complement",
    "decode",
    "encode",
    "join",
    "leq",
    "meet",
]
