from .cyclotomic import (
    CyclotomicNumber,
    compare_abs_to_one,
    cyc_add,
    cyc_conj,
    cyc_inv,
    cyc_mul,
    cyclotomic_poly,
    is_root_of_unity,
    root_of_unity_order,
)
from .linalg import nullspace, poly_det, rank
from .poly import BiPoly, UniPoly

__all__ = [
    "BiPoly",
    "CyclotomicNumber",
    "UniPoly",
    "compare_abs_to_one",
    "cyc_add",
    "cyc_conj",
    "cyc_inv",
    "cyc_mul",
    "cyclotomic_poly",
    "is_root_of_unity",
    "nullspace",
    "poly_det",
    "rank",
    "root_of_unity_order",
]
