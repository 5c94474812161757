"""Exact and numeric curvature toolkit for translation surfaces z = f(u) + g(v).

Exact side: sparse rational polynomials, a radical algebra for the curvature
expressions, closed-form Weingarten and second-curvature conditions, and the
classification of polynomial translation surfaces.  Numeric side: an
expression parser, symbolic differentiation, curvature sampling, a
finite-difference Weingarten test, linear-relation fitting, and mesh export.
"""

from .classify import (
    Classification,
    KiiClassification,
    LWOutcome,
    SurfaceClass,
    classify_kii,
    classify_pt,
    lw0_symbolic,
    relation1_residual,
)
from .curvature import (
    PolyGenerators,
    gauss_curvature_expr,
    jacobian_derived,
    jacobian_direct,
    kii_numerator,
    mean_curvature_expr,
)
from .expr import (
    DomainError,
    Expr,
    NotPolynomialError,
    ParseError,
    ast_diff,
    ast_eval,
    expr_to_poly,
    parse_expr,
)
from .gallery import GallerySurface, gallery
from .numeric import (
    CurvatureSample,
    LWFit,
    eval_curvatures,
    eval_curvatures_symbolic,
    grid_points,
    kii_oracle,
    lw_fit,
    numeric_weingarten_test,
)
from .poly import Poly2, antiderivative, proportional_ratio
from .powerlaw import (
    ConstraintKind,
    ConstraintResult,
    PowerGenerators,
    TermTable,
    collect_terms,
    power_tables_consistent,
    scan_exponents,
    solve_coefficient_constraints,
)
from .radical import DeltaMismatchError, RadExpr

__version__ = "0.1.0"

__all__ = [
    "Classification",
    "ConstraintKind",
    "ConstraintResult",
    "CurvatureSample",
    "DeltaMismatchError",
    "DomainError",
    "Expr",
    "GallerySurface",
    "KiiClassification",
    "LWFit",
    "LWOutcome",
    "NotPolynomialError",
    "ParseError",
    "Poly2",
    "PolyGenerators",
    "PowerGenerators",
    "RadExpr",
    "SurfaceClass",
    "TermTable",
    "antiderivative",
    "ast_diff",
    "ast_eval",
    "classify_kii",
    "classify_pt",
    "collect_terms",
    "eval_curvatures",
    "eval_curvatures_symbolic",
    "expr_to_poly",
    "gallery",
    "gauss_curvature_expr",
    "grid_points",
    "jacobian_derived",
    "jacobian_direct",
    "kii_numerator",
    "kii_oracle",
    "lw0_symbolic",
    "lw_fit",
    "mean_curvature_expr",
    "numeric_weingarten_test",
    "parse_expr",
    "power_tables_consistent",
    "proportional_ratio",
    "relation1_residual",
    "scan_exponents",
    "solve_coefficient_constraints",
]
