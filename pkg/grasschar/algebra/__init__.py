"""
Exact algebra over GF(2): polynomials, Groebner bases, quotients and bit matrices
"""

from grasschar.algebra.gf2poly import (
    Comparison,
    Monomial,
    PolyGF2,
    VariableTable,
    coeff_of,
    lucas_binom,
    mono_compare,
    parse_poly,
    poly_add,
    poly_mul,
    poly_pow,
    print_poly,
)
from grasschar.algebra.groebner import (
    GroebnerBasis,
    buchberger_reduced,
    ideal_member,
    ideals_equal,
    normal_form,
    s_polynomial,
)
from grasschar.algebra.linalg import BitMatrix, matrix_kernel_basis
from grasschar.algebra.quotient import GradedQuotient

__all__ = [
    "BitMatrix",
    "Comparison",
    "GradedQuotient",
    "GroebnerBasis",
    "Monomial",
    "PolyGF2",
    "VariableTable",
    "buchberger_reduced",
    "coeff_of",
    "ideal_member",
    "ideals_equal",
    "lucas_binom",
    "matrix_kernel_basis",
    "mono_compare",
    "normal_form",
    "parse_poly",
    "poly_add",
    "poly_mul",
    "poly_pow",
    "print_poly",
    "s_polynomial",
]
