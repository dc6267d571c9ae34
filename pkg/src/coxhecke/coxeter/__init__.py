"""Coxeter systems: input parsing, enumeration, cosets and Poincaré series."""
from .ball import (
    COMPLETE,
    DEFAULT_MEM_CAP,
    BallError,
    BallTooLarge,
    CayleyBall,
    ElementRef,
    GeometricRep,
    ParabolicDecomposition,
    RadiusError,
    build_ball,
    coset_reps,
    left_coset_reps,
    left_parabolic_decompose,
    parabolic_decompose,
)
from .poincare import group_order, poincare_exact, poincare_from_degrees, poincare_truncated
from .system import (
    CATALOG_NAMES,
    INFINITY,
    CoxeterMatrix,
    CoxeterParseError,
    catalog,
    component_type,
    is_finite_type,
    parse_coxeter,
    type_name,
)
