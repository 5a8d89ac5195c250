"""Exact-arithmetic functor cohomology on finite categories."""

from homcat._core import (
    check_multiplicative,
    cohomology,
    is_ordered,
    validate_category,
    verify_homotopy,
    verify_mackey,
)

__all__ = [
    "check_multiplicative",
    "cohomology",
    "is_ordered",
    "validate_category",
    "verify_homotopy",
    "verify_mackey",
]
