#!/usr/bin/env python3
# -----------------------------------------------------------------------------
# Author: Thomas Fischer
# Version: 0.1.0
# License: MIT
# Filename: checks.py
# Pathname: /path/to/ideal4/src/verify/
# Description: Pointwise ideality verdicts, equality-pattern recovery, case
#              classification and rigidity prerequisites
# -----------------------------------------------------------------------------

import logging
from dataclasses import asdict, dataclass
from typing import Callable, Dict, Iterable, Optional, Tuple, Union

import numpy as np

from src.core.errors import ClassificationError, ConfigurationError, ParameterError
from src.catalog.families import lambda_profile
from src.geom.immersion import ChartPoint, GridSpec, ImmersionMap, PointLike
from src.geom.pipeline import ShapeData, curvature_at, pullback_metric, second_fundamental

logger = logging.getLogger("Checks")

DEFAULT_TOLERANCE = 1e-6
ODE_STEP = 1e-3

TWO_EQUAL = "two_equal"
LAMBDA_ZERO = "lambda_zero"
MU_ZERO = "mu_zero"
THREE_DISTINCT = "three_distinct"
UMBILIC = "umbilic-degenerate"
CASE_TAGS = (TWO_EQUAL, LAMBDA_ZERO, MU_ZERO, THREE_DISTINCT, UMBILIC)


@dataclass(frozen=True)
class PatternAssignment:
    """Labeling of a spectrum as {lambda, mu, lambda + mu}"""
    lam: float
    mu: float
    total: float


@dataclass(frozen=True)
class IdealityVerdict:
    delta: float
    bound: float
    slack: float
    pattern_residual: float
    eigen_triple: Tuple[float, float, float]
    case_tag: Optional[str]
    is_ideal: bool
    tau: float = 0.0
    inf_K: float = 0.0
    mean_sq: float = 0.0
    minimal: bool = False
    type_number: int = 0
    distinct_count: int = 0

    @property
    def relative_slack(self) -> float:
        return abs(self.slack) / max(1.0, abs(self.bound))

    def to_dict(self) -> Dict:
        data = asdict(self)
        data["eigen_triple"] = list(self.eigen_triple)
        return data


def _scale(eigs) -> float:
    return max(1.0, float(np.max(np.abs(eigs)))) if len(eigs) else 1.0


def equality_pattern(eigs, tol: float = DEFAULT_TOLERANCE) -> Tuple[float, PatternAssignment]:
    """Best labeling of a sorted triple as {lambda, mu, lambda + mu}

    The residual |k_i + k_j - k_s| / max(1, sum |k|) is minimized over the
    choice of sum entry k_s; lambda is the summand of smaller magnitude.
    Ties within tol prefer the labeling with the smallest |lambda|.
    """
    k = [float(x) for x in eigs]
    if len(k) != 3:
        raise ParameterError(f"Equality pattern needs three eigenvalues, got {len(k)}")
    norm = max(1.0, sum(abs(x) for x in k))

    candidates = []
    for s in range(3):
        i, j = [n for n in range(3) if n != s]
        lam, mu = (k[i], k[j]) if abs(k[i]) <= abs(k[j]) else (k[j], k[i])
        residual = abs(k[i] + k[j] - k[s]) / norm
        candidates.append((residual, PatternAssignment(lam, mu, k[s])))

    best = min(r for r, _ in candidates)
    tied = [c for c in candidates if c[0] <= best + tol * 1e-3]
    residual, assignment = min(tied, key=lambda c: (abs(c[1].lam), c[0]))
    return residual, assignment


def classify_assignment(assignment: PatternAssignment, eigs, tol: float = DEFAULT_TOLERANCE) -> str:
    """Case tag of a recovered (lambda, mu)"""
    scale = _scale(eigs)
    if float(np.max(eigs)) - float(np.min(eigs)) <= tol * scale:
        return UMBILIC
    if abs(assignment.lam - assignment.mu) <= tol * scale:
        return TWO_EQUAL
    if abs(assignment.lam) <= tol * scale:
        return LAMBDA_ZERO
    if abs(assignment.mu) <= tol * scale:
        return MU_ZERO
    return THREE_DISTINCT


def case_classifier(sd: ShapeData, tol: float = DEFAULT_TOLERANCE) -> str:
    """Case of an ideal point from its principal curvatures

    Raises:
        ClassificationError: the spectrum does not fit the ideal pattern
    """
    eigs = sd.principal_curvatures
    residual, assignment = equality_pattern(eigs, tol)
    if residual > tol:
        raise ClassificationError(
            f"Spectrum {list(eigs)} is not of the form (lambda, mu, lambda + mu): residual {residual:.3e}",
            {"pattern_residual": residual}
        )
    return classify_assignment(assignment, eigs, tol)


def type_number(sd: ShapeData, tol: float = DEFAULT_TOLERANCE) -> int:
    """Rank of the shape operator at tolerance tol * max(1, spectral radius)"""
    eigs = sd.principal_curvatures
    return int(sum(1 for x in eigs if abs(x) > tol * _scale(eigs)))


def distinct_count(eigs, tol: float = DEFAULT_TOLERANCE) -> int:
    ordered = sorted(float(x) for x in eigs)
    gap = tol * _scale(ordered)
    return 1 + sum(1 for lo, hi in zip(ordered, ordered[1:]) if hi - lo > gap)


def is_minimal(sd: ShapeData, tol: float = DEFAULT_TOLERANCE) -> bool:
    eigs = sd.principal_curvatures
    radius = float(np.max(np.abs(eigs)))
    return abs(float(np.trace(sd.shape_op))) <= tol * radius if radius > 0.0 else True


def rigidity_prerequisite(sd: ShapeData, tol: float = DEFAULT_TOLERANCE) -> Dict:
    """Metadata relevant to rigidity: non-minimal ideal points with three distinct curvatures have type number three"""
    rank = type_number(sd, tol)
    return {
        "minimal": is_minimal(sd, tol),
        "type_number": rank,
        "distinct_count": distinct_count(sd.principal_curvatures, tol),
        "rigid_by_type_number": rank >= 3,
    }


def chen_check(imm: ImmersionMap, p: PointLike, tol: float = DEFAULT_TOLERANCE) -> IdealityVerdict:
    """delta against (9/4) H^2 + 2 epsilon at one point

    A point is ideal when the slack and the equality-pattern residual are both
    within tol.
    """
    if not tol > 0.0:
        raise ParameterError(f"Tolerance must be positive, got {tol!r}")
    _, sd, cd = curvature_at(imm, p)
    bound = cd.bound
    slack = bound - cd.delta
    equality = abs(slack) <= tol * max(1.0, abs(bound))
    residual, assignment = equality_pattern(sd.principal_curvatures, tol)
    # is_ideal implies pattern_residual <= tol
    ideal = equality and residual <= tol
    if equality and not ideal:
        logger.info(f"{imm.name} at {p}: slack {slack:.3e} within tolerance but pattern residual is {residual:.3e}")

    case_tag = classify_assignment(assignment, sd.principal_curvatures, tol) if ideal else None

    return IdealityVerdict(
        delta=cd.delta,
        bound=bound,
        slack=slack,
        pattern_residual=residual,
        eigen_triple=tuple(float(x) for x in sd.principal_curvatures),
        case_tag=case_tag,
        is_ideal=ideal,
        tau=cd.tau,
        inf_K=cd.inf_K,
        mean_sq=cd.mean_sq,
        minimal=is_minimal(sd, tol),
        type_number=type_number(sd, tol),
        distinct_count=distinct_count(sd.principal_curvatures, tol),
    )


def ode_residual(a: float, t: float, step: float = ODE_STEP,
                 profile: Optional[Callable[[float], float]] = None) -> float:
    """|lambda'' + 2 lambda^3| with lambda'' by a three-point central difference

    Args:
        a: Family parameter
        t: Profile parameter
        step: Difference step
        profile: Function to test in place of lambda(t) = (a/2) sd(at)
    """
    if not step > 0.0:
        raise ParameterError(f"Difference step must be positive, got {step!r}")
    lam = profile if profile is not None else (lambda s: lambda_profile(a, s))
    centre = lam(t)
    second = (lam(t - step) - 2.0 * centre + lam(t + step)) / (step * step)
    return abs(second + 2.0 * centre ** 3)


GridLike = Union[GridSpec, Iterable[PointLike]]


def _nodes(grid: GridLike):
    if isinstance(grid, GridSpec):
        return [p for _, p in grid.points()]
    return [ChartPoint.of(p) for p in grid]


def _shared_nodes(imm1: ImmersionMap, imm2: ImmersionMap, grid: GridLike):
    nodes = _nodes(grid)
    if not nodes:
        raise ConfigurationError("Comparison grid is empty")
    for p in nodes:
        if not (imm1.domain.contains(p) and imm2.domain.contains(p)):
            raise ConfigurationError(f"Grid node {p} is not in the common chart of {imm1.name} and {imm2.name}")
    return nodes


def isometry_check(imm1: ImmersionMap, imm2: ImmersionMap, grid: GridLike) -> float:
    """Largest entrywise difference of the induced metrics over a common grid"""
    worst = 0.0
    for p in _shared_nodes(imm1, imm2, grid):
        diff = np.abs(pullback_metric(imm1, p).g - pullback_metric(imm2, p).g)
        worst = max(worst, float(np.max(diff)))
    return worst


def noncongruence_witness(imm1: ImmersionMap, imm2: ImmersionMap, grid: GridLike,
                          isometry_tol: float = DEFAULT_TOLERANCE) -> float:
    """Largest second-fundamental-form discrepancy over the grid, minimized over the normal sign

    A positive value shows the immersions differ as parametrized maps modulo
    ambient motions preserving the chart; it is not a statement about all
    ambient isometries composed with intrinsic ones.

    Raises:
        ConfigurationError: the immersions are not isometric on the grid
    """
    mismatch = isometry_check(imm1, imm2, grid)
    if mismatch > isometry_tol:
        raise ConfigurationError(f"{imm1.name} and {imm2.name} are not isometric on the grid "
                                 f"(metric mismatch {mismatch:.3e})")
    worst = 0.0
    for p in _nodes(grid):
        h1 = second_fundamental(imm1, p).h
        h2 = second_fundamental(imm2, p).h
        value = min(float(np.max(np.abs(h1 - h2))), float(np.max(np.abs(h1 + h2))))
        worst = max(worst, value)
    return worst

