"""Exact Chern class and Euler characteristic computations for Ulrich bundles on hypersurfaces."""

from ._core import (
    Error,
    canonical,
    check_dgr,
    check_ids,
    chi_exterior_ulrich,
    lambda_classes,
    registry_ids,
    run_case,
    run_checks,
    ulrich_classes,
)

__all__ = [
    "Error",
    "canonical",
    "check_dgr",
    "check_ids",
    "chi_exterior_ulrich",
    "lambda_classes",
    "registry_ids",
    "run_case",
    "run_checks",
    "ulrich_classes",
]
