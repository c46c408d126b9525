"""Exact resultants and discriminants of binary forms, with symmetric-product checks."""

from types import ModuleType as _ModuleType

from .core import (
    GF,
    MINUS_INFINITY,
    QQ,
    ZZ,
    AlgebraError,
    InexactDivisionError,
    Poly,
    VarTable,
    derivative,
    exact_divide,
    make_table,
    multidegree,
    poly_arith,
    poly_eval,
    poly_substitute,
)
from .linalg import Matrix, bareiss_det, cofactor_det, jacobian, rank_over_field, solve_linear
from .parser import ParseError, format_poly, parse_poly
from .resultant import (
    BinaryForm,
    LeadingCoefficientZeroError,
    RootData,
    disc_from_roots,
    discriminant,
    discriminant_symbolic,
    gcd_binary_forms,
    res_product_form,
    res_product_form_symbolic,
    resultant,
    resultant_symbolic,
    sylvester_matrix,
)
from .scan import ScanReport, enumerate_p1, scan_disc_quotient, scan_quotient, scan_resultant_equiv
from .symprod import (
    Permutation,
    ProjPoint,
    check_independence,
    ehsp,
    expand_linear_product,
    express_in_ehsp,
    form_of_tuple,
    is_symmetric,
    member_dn,
    member_rnm,
    member_xn,
    member_xnm,
    point_tuple,
    sn_act,
    viete,
    xn_defining_poly,
    xnm_defining_poly,
)

__version__ = "0.1.0"

__all__ = [
    name for name, obj in globals().items() if not name.startswith("_") and not isinstance(obj, _ModuleType)
]
