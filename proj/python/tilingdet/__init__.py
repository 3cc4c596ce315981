"""Exact tiling counts for hexagons and Aztec rectangles with defects."""

from tilingdet._core import (
    BudgetExceeded,
    DomainError,
    NonIntegralResult,
    aztec_dented_count,
    aztec_missing_squares_count,
    central_lozenge,
    central_triangle_removed,
    count,
    cross_check,
    crossing_restricted_count,
    families,
    hexagon_count,
    identity_names,
    problem10,
    region_json,
    render,
    run_cli,
    run_identity,
    semihex_dented_count,
    wz_sum,
    zavrotsky,
)

__version__ = "0.1.0"

__all__ = [
    "BudgetExceeded",
    "DomainError",
    "NonIntegralResult",
    "aztec_dented_count",
    "aztec_missing_squares_count",
    "central_lozenge",
    "central_triangle_removed",
    "count",
    "cross_check",
    "crossing_restricted_count",
    "families",
    "hexagon_count",
    "identity_names",
    "problem10",
    "region_json",
    "render",
    "run_cli",
    "run_identity",
    "semihex_dented_count",
    "wz_sum",
    "zavrotsky",
]
