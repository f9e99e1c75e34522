"""
Parameter-space clustering functions.

Each family is a monotone self-map of [0, 1] fixing both endpoints. Applied to
one coordinate of the uniform parameter grid it defines the mapping from
computational to parameter space, and through it the control functions.
"""
import logging
from dataclasses import dataclass
from typing import Iterable, Optional, Union

import numpy as np

from .config import BOUNDARY_ALPHA, ERIKSSON_ALPHA, NEAR_LINE_ALPHA
from .errors import ClusterParameterError
from .grid import StructuredGrid

logger = logging.getLogger(__name__)

AXES = ("X", "Y")


def _check_knot(name: str, value: float):
    if not 0.0 < value < 1.0:
        raise ClusterParameterError(f"{name} must lie strictly inside (0, 1), got {value}")


def _check_alpha(alpha: float):
    if not alpha > 0.0:
        raise ClusterParameterError(f"alpha must be positive, got {alpha}")


@dataclass(frozen=True)
class NearLine:
    """Cluster toward the single line eta0"""
    eta0: float
    alpha: float = NEAR_LINE_ALPHA

    def __post_init__(self):
        _check_knot("eta0", self.eta0)
        _check_alpha(self.alpha)


@dataclass(frozen=True)
class TwoLines:
    """Cluster toward the lines eta1 and eta2 through the Eriksson stretch"""
    eta1: float
    eta2: float
    alpha: float = ERIKSSON_ALPHA

    def __post_init__(self):
        _check_knot("eta1", self.eta1)
        _check_knot("eta2", self.eta2)
        if not self.eta1 < self.eta2:
            raise ClusterParameterError(
                f"eta1 must be smaller than eta2, got {self.eta1} >= {self.eta2}"
            )
        _check_alpha(self.alpha)


@dataclass(frozen=True)
class BoundaryCluster:
    """Cluster toward both ends of the axis, switching at eta1"""
    eta1: float
    alpha: float = BOUNDARY_ALPHA

    def __post_init__(self):
        _check_knot("eta1", self.eta1)
        _check_alpha(self.alpha)


ClusterFamily = Union[NearLine, TwoLines, BoundaryCluster]


@dataclass(frozen=True)
class ClusterSpec:
    """Stretching family applied to one axis of the parameter grid"""
    axis: str
    family: Optional[ClusterFamily] = None

    def __post_init__(self):
        if self.axis not in AXES:
            raise ClusterParameterError(f"axis must be one of {AXES}, got '{self.axis}'")


def eriksson(eta, alpha: float = ERIKSSON_ALPHA, h: float = 1.0):
    """Exponential stretch h (e^(alpha eta) - 1) / (e^alpha - 1)"""
    return h * ((np.exp(alpha * eta) - 1.0) / (np.exp(alpha) - 1.0))


def _elementwise(fn):
    """Let a piecewise map accept scalars as well as arrays of any shape"""
    def wrapper(c, *args, **kwargs):
        c = np.asarray(c, dtype=np.float64)
        return fn(np.atleast_1d(c), *args, **kwargs).reshape(c.shape)
    return wrapper


@_elementwise
def near_line_map(c: np.ndarray, eta0: float, alpha: float = NEAR_LINE_ALPHA) -> np.ndarray:
    ea = np.exp(alpha)
    return np.piecewise(
        c,
        [c < eta0, c > eta0],
        [
            lambda t: eta0 * (ea - np.exp(alpha * (1 - t / eta0))) / (ea - 1.0),
            lambda t: eta0 + (1 - eta0) * (np.exp(alpha * (t - eta0) / (1 - eta0)) - 1.0) / (ea - 1.0),
            lambda t: t,
        ],
    )


@_elementwise
def two_lines_map(c: np.ndarray, eta1: float, eta2: float,
                  alpha: float = ERIKSSON_ALPHA) -> np.ndarray:
    h = 1.0
    eta0 = (eta1 + eta2) * 0.5

    def stretch(t):
        return eriksson(t, alpha)

    # Overlapping closed intervals: the later branch wins at a knot
    return np.piecewise(
        c,
        [
            (c <= eta1) & (c >= 0.0),
            (c >= eta1) & (c <= eta0),
            (c >= eta0) & (c <= eta2),
            (c >= eta2) & (c <= 1.0),
        ],
        [
            lambda t: eta1 * (h - stretch(1 - t / eta1)),
            lambda t: h * eta1 + (eta0 - eta1) * stretch((t - eta1) / (eta0 - eta1)),
            lambda t: h * eta0 + (eta2 - eta0) * (h - stretch((eta2 - t) / (eta2 - eta0))),
            lambda t: h * eta2 + (1.0 - eta2) * stretch((t - eta2) / (1.0 - eta2)),
            lambda t: t,
        ],
    )


@_elementwise
def boundary_map(c: np.ndarray, eta1: float, alpha: float = BOUNDARY_ALPHA) -> np.ndarray:
    ea = np.exp(alpha)
    return np.piecewise(
        c,
        [(c <= eta1) & (c >= 0.0), (c >= eta1) & (c <= 1.0)],
        [
            lambda t: eta1 * (np.exp(alpha * t / eta1) - 1.0) / (ea - 1.0),
            lambda t: 1.0 - (1.0 - eta1) * ((np.exp(alpha * (1.0 - t) / (1.0 - eta1)) - 1.0) / (ea - 1.0)),
            lambda t: t,
        ],
    )


def _apply_axis(grid: StructuredGrid, axis: str, fn) -> StructuredGrid:
    result = grid.copy()
    if axis == "X":
        result.x = fn(result.x)
    else:
        result.y = fn(result.y)
    return result


def cluster_near_line(grid: StructuredGrid, axis: str, family: NearLine) -> StructuredGrid:
    return _apply_axis(grid, axis, lambda c: near_line_map(c, family.eta0, family.alpha))


def cluster_two_lines(grid: StructuredGrid, axis: str, family: TwoLines) -> StructuredGrid:
    return _apply_axis(grid, axis, lambda c: two_lines_map(c, family.eta1, family.eta2, family.alpha))


def cluster_boundary(grid: StructuredGrid, axis: str, family: BoundaryCluster) -> StructuredGrid:
    return _apply_axis(grid, axis, lambda c: boundary_map(c, family.eta1, family.alpha))


def apply_cluster(grid: StructuredGrid, spec: ClusterSpec) -> StructuredGrid:
    """Dispatch a ClusterSpec to its family"""
    family = spec.family
    if family is None:
        return grid.copy()
    if isinstance(family, NearLine):
        return cluster_near_line(grid, spec.axis, family)
    if isinstance(family, TwoLines):
        return cluster_two_lines(grid, spec.axis, family)
    if isinstance(family, BoundaryCluster):
        return cluster_boundary(grid, spec.axis, family)
    raise ClusterParameterError(f"Unknown cluster family {family!r}")


def build_parameter_grid(grid: StructuredGrid, clusters: Iterable[ClusterSpec]) -> StructuredGrid:
    """Apply every cluster spec in order to a copy of the grid"""
    param = grid.copy()
    for spec in clusters:
        logger.info(f"Clustering axis {spec.axis}: {spec.family}")
        param = apply_cluster(param, spec)
    return param
