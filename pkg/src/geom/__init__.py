"""Pointwise differential geometry of chart-parametrized hypersurfaces in E^4"""

from src.geom.immersion import ChartBox, ChartPoint, GridSpec, ImmersionMap
from src.geom.pipeline import (
    CurvatureData,
    MetricData,
    ShapeData,
    curvature_at,
    curvature_from_gauss,
    inf_sectional,
    mean_curvature_sq,
    pullback_metric,
    sampled_inf_sectional,
    second_fundamental,
    unit_normal,
)
from src.geom.structure import codazzi_residual, gauss_residual, intrinsic_riemann

__all__ = [
    "ChartBox", "ChartPoint", "CurvatureData", "GridSpec", "ImmersionMap", "MetricData", "ShapeData",
    "codazzi_residual", "curvature_at", "curvature_from_gauss", "gauss_residual",
    "inf_sectional", "intrinsic_riemann", "mean_curvature_sq", "pullback_metric",
    "sampled_inf_sectional", "second_fundamental", "unit_normal",
]
