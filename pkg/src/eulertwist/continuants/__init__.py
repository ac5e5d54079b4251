"""Cotwinned subsets, Fibonacci cubes and Euler continuants."""

from .cotwinned import (Cotwinned, FibPoset, cotwinned_subsets, cube_leq,
                        depth_counts, expected_depth_counts, fibonacci_cube,
                        fibonacci_number, iota, iota_tilde, is_cotwinned,
                        is_separated)
from .euler import (euler_alt, euler_in, euler_poly, first_difference,
                    matrix_product_expected, verify_determinant_identity,
                    verify_matrix_identity, verify_recursions)
from .fibonacci import (bipoly_text, chebyshev_u, fibonacci_at,
                        fibonacci_poly, fibonacci_value,
                        verify_chebyshev_bridge)

__all__ = [
    "Cotwinned", "FibPoset", "cotwinned_subsets", "cube_leq", "depth_counts",
    "expected_depth_counts", "fibonacci_cube", "fibonacci_number", "iota",
    "iota_tilde", "is_cotwinned", "is_separated", "euler_alt", "euler_in",
    "euler_poly", "first_difference", "matrix_product_expected",
    "verify_determinant_identity", "verify_matrix_identity",
    "verify_recursions", "bipoly_text", "chebyshev_u", "fibonacci_at",
    "fibonacci_poly", "fibonacci_value", "verify_chebyshev_bridge",
]
