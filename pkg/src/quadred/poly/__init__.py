"""Exact sparse polynomial arithmetic over QQ and prime fields."""

from .core import (Polynomial, arith, determinant, determinant_bareiss,
                   determinant_cofactor, divide_exact, divides_exactly,
                   jacobian)
from .field import QQ, FieldSpec, is_prime, prime_field
from .gcd import gcd_poly, is_squarefree, squarefree_part
from .groebner import (DEFAULT_BUDGET, BudgetExceeded, GroebnerBasis,
                       InfiniteDimensional, groebner, quotient_dimension)
from .order import GREVLEX, LEX, MonomialOrder, block_order
from .parse import ParseError, parse_poly, poly_to_string
from .rng import RngState, monomials_of_degree, random_homogeneous
from .solve import (kernel_basis, rational_points, rref, solve_linear,
                    standard_monomials, univariate_roots)

__all__ = [
    "Polynomial", "arith", "determinant", "determinant_bareiss",
    "determinant_cofactor", "divide_exact", "divides_exactly", "jacobian",
    "QQ", "FieldSpec", "is_prime", "prime_field",
    "gcd_poly", "is_squarefree", "squarefree_part",
    "DEFAULT_BUDGET", "BudgetExceeded", "GroebnerBasis", "InfiniteDimensional",
    "groebner", "quotient_dimension",
    "GREVLEX", "LEX", "MonomialOrder", "block_order",
    "ParseError", "parse_poly", "poly_to_string",
    "RngState", "monomials_of_degree", "random_homogeneous",
    "kernel_basis", "rational_points", "rref", "solve_linear",
    "standard_monomials", "univariate_roots",
]
