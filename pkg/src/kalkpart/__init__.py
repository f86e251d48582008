"""Equidimensional decomposition of affine algebraic sets over prime fields.

The package decomposes V(F), given by polynomials over a prime field, into
an irredundant Kalkbrener partition: pairwise component-disjoint,
equidimensional, locally closed cells whose closures' components are exactly
those of V(F).  The decomposition is driven by syzygies of the defining
sequence; the Groebner substrate (Buchberger engine, saturation,
elimination, dimension) is included.
"""

from .arith import (DRL, ContextMismatchError, DomainError, Monomial,
                    MonomialOrder, Polynomial, PrimeField, Ring,
                    VariableContext, block_elim, compare, is_prime)
from .decompose import (AffineCell, Partition, add_equation, add_inequation,
                        codim, hull, is_empty, kalk_part, make_cell, remove,
                        verify_partition)
from .groebner import GroebnerBasis, buchberger, ideal_equal, is_member, normal_form
from .ideal_ops import (Ideal, dimension, eliminate, intersect, radical_member,
                        saturate)
from .parse import ParseError, format_polynomial, parse_polynomial
from .syzygy import (SyzygyBasis, SyzygyVector, get_syz, is_koszul_combination,
                     syzygy_basis)

__version__ = "0.1.0"

__all__ = [
    "AffineCell", "ContextMismatchError", "DomainError", "DRL",
    "GroebnerBasis", "Ideal", "Monomial", "MonomialOrder", "ParseError",
    "Partition", "Polynomial", "PrimeField", "Ring", "SyzygyBasis",
    "SyzygyVector", "VariableContext", "add_equation", "add_inequation",
    "block_elim", "buchberger", "codim", "compare", "dimension", "eliminate",
    "format_polynomial", "get_syz", "hull", "ideal_equal", "intersect",
    "is_empty", "is_koszul_combination", "is_member", "is_prime", "kalk_part",
    "make_cell", "normal_form", "parse_polynomial", "radical_member",
    "remove", "saturate", "syzygy_basis", "verify_partition",
]
