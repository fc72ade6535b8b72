"""Exact nestohedron combinatorics: building sets, gamma vectors, shaving
plans, and rational Delzant realizations."""

from ._core import (
    BuildingSet,
    CapacityError,
    ConsistencyError,
    InputError,
    NotFlagError,
    NotSimpleError,
    check_realization,
    closure,
    cubical_realization,
    enumerate_vertices,
    gamma_via_plan,
    off_export,
    plan_flag,
    plan_general,
    standard_realization,
    validate,
    verify_gamma_claims,
)

__version__ = "0.1.0"

__all__ = [
    "BuildingSet",
    "CapacityError",
    "ConsistencyError",
    "InputError",
    "NotFlagError",
    "NotSimpleError",
    "check_realization",
    "closure",
    "cubical_realization",
    "enumerate_vertices",
    "gamma_via_plan",
    "off_export",
    "plan_flag",
    "plan_general",
    "standard_realization",
    "validate",
    "verify_gamma_claims",
]
