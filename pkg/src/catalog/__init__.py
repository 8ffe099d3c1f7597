"""Ideal hypersurface families, product examples and negative controls"""

from src.catalog.families import (
    cone_mean_curvature,
    family_a,
    family_b,
    family_c,
    generic_graph,
    hyperplane,
    lambda_profile,
    product_L1,
    product_L2,
    random_graph,
)
from src.catalog.registry import FamilyParams, build_family, canonical_tag, list_families
from src.catalog.warped import (
    WarpedProductSpec,
    connection_residual,
    family_a_warp,
    family_b_warp,
    family_c_metric_residual,
    family_c_warp,
    warp_ode_check,
)

__all__ = [
    "FamilyParams", "WarpedProductSpec", "build_family", "canonical_tag", "cone_mean_curvature",
    "connection_residual", "family_a", "family_a_warp", "family_b", "family_b_warp", "family_c",
    "family_c_metric_residual", "family_c_warp", "generic_graph", "hyperplane", "lambda_profile",
    "list_families", "product_L1", "product_L2", "random_graph", "warp_ode_check",
]
