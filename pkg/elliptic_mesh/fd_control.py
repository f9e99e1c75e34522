"""
Second-order central differences on the 9-point stencil, metric coefficients
of the physical map, and the control vectors P11, P22, P12 derived from the
parameter grid.

Fields are indexed ``field[i][j]`` so both numpy arrays and nested lists work;
the solver passes nested lists for speed.
"""
import logging
from typing import NamedTuple, Optional, Tuple

import numpy as np

from .config import SINGULAR_DET_THRESHOLD
from .errors import SingularMapError, StencilError
from .grid import GridSpacing, StructuredGrid

logger = logging.getLogger(__name__)

Vector2 = Tuple[float, float]


class JacobianT(NamedTuple):
    """Derivatives of the parameter coordinates (s, t) with respect to (xi, eta)"""
    s_xi: float
    s_eta: float
    t_xi: float
    t_eta: float

    @property
    def det(self) -> float:
        return self.s_xi * self.t_eta - self.t_xi * self.s_eta


class ControlSample(NamedTuple):
    """Control vectors at one interior node; p12 also stands for P21"""
    p11: Vector2
    p22: Vector2
    p12: Vector2


class MetricTerms(NamedTuple):
    x_xi: float
    x_eta: float
    y_xi: float
    y_eta: float
    x_xieta: float
    y_xieta: float
    g11: float
    g22: float
    g12: float


# ============ Table of central differences ============
# Unchecked kernels; callers guarantee 1 <= i <= nx-2 and 1 <= j <= ny-2.

def _xi(f, i, j, dxi):
    return (f[i + 1][j] - f[i - 1][j]) / (2.0 * dxi)


def _eta(f, i, j, deta):
    return (f[i][j + 1] - f[i][j - 1]) / (2.0 * deta)


def _xixi(f, i, j, dxi):
    return (f[i + 1][j] - 2.0 * f[i][j] + f[i - 1][j]) / (dxi * dxi)


def _etaeta(f, i, j, deta):
    return (f[i][j + 1] - 2.0 * f[i][j] + f[i][j - 1]) / (deta * deta)


def _xieta(f, i, j, dxi, deta):
    return (f[i + 1][j + 1] + f[i - 1][j - 1] - f[i - 1][j + 1] - f[i + 1][j - 1]) / (4.0 * dxi * deta)


def _check_stencil(field, i: int, j: int):
    nx = len(field)
    ny = len(field[0])
    if not (1 <= i <= nx - 2 and 1 <= j <= ny - 2):
        raise StencilError(
            f"Stencil at ({i}, {j}) needs an interior node of a {nx} x {ny} field"
        )


def d_xi(field, i: int, j: int, spacing: GridSpacing) -> float:
    _check_stencil(field, i, j)
    return _xi(field, i, j, spacing.del_xi)


def d_eta(field, i: int, j: int, spacing: GridSpacing) -> float:
    _check_stencil(field, i, j)
    return _eta(field, i, j, spacing.del_eta)


def d_xixi(field, i: int, j: int, spacing: GridSpacing) -> float:
    _check_stencil(field, i, j)
    return _xixi(field, i, j, spacing.del_xi)


def d_etaeta(field, i: int, j: int, spacing: GridSpacing) -> float:
    _check_stencil(field, i, j)
    return _etaeta(field, i, j, spacing.del_eta)


def d_xieta(field, i: int, j: int, spacing: GridSpacing) -> float:
    _check_stencil(field, i, j)
    return _xieta(field, i, j, spacing.del_xi, spacing.del_eta)


# ============ Metrics of the physical map ============

def metric_terms(x, y, i: int, j: int, dxi: float, deta: float) -> MetricTerms:
    """First derivatives, mixed derivatives and metric coefficients at (i, j), unchecked"""
    x_xi = _xi(x, i, j, dxi)
    x_eta = _eta(x, i, j, deta)
    y_xi = _xi(y, i, j, dxi)
    y_eta = _eta(y, i, j, deta)
    return MetricTerms(
        x_xi, x_eta, y_xi, y_eta,
        _xieta(x, i, j, dxi, deta),
        _xieta(y, i, j, dxi, deta),
        x_xi * x_xi + y_xi * y_xi,
        x_eta * x_eta + y_eta * y_eta,
        x_xi * x_eta + y_xi * y_eta,
    )


def metric_coefficients(grid: StructuredGrid, i: int, j: int,
                        spacing: Optional[GridSpacing] = None) -> Tuple[float, float, float]:
    """(g11, g22, g12) at an interior node"""
    spacing = spacing or grid.spacing()
    _check_stencil(grid.x, i, j)
    terms = metric_terms(grid.x, grid.y, i, j, spacing.del_xi, spacing.del_eta)
    return terms.g11, terms.g22, terms.g12


# ============ Parameter-map Jacobian and control vectors ============

def _jacobian(s, t, i, j, dxi, deta) -> JacobianT:
    return JacobianT(_xi(s, i, j, dxi), _eta(s, i, j, deta), _xi(t, i, j, dxi), _eta(t, i, j, deta))


def _checked_det(jac: JacobianT, i: int, j: int) -> float:
    det = jac.det
    if abs(det) < SINGULAR_DET_THRESHOLD:
        raise SingularMapError(f"Parameter-grid Jacobian determinant {det:.3e} is singular", i, j)
    return det


def jacobian_T(param: StructuredGrid, i: int, j: int, spacing: Optional[GridSpacing] = None) -> JacobianT:
    spacing = spacing or param.spacing()
    _check_stencil(param.x, i, j)
    jac = _jacobian(param.x, param.y, i, j, spacing.del_xi, spacing.del_eta)
    _checked_det(jac, i, j)
    return jac


def _control_sample(s, t, i, j, dxi, deta) -> ControlSample:
    jac = _jacobian(s, t, i, j, dxi, deta)
    det = _checked_det(jac, i, j)
    # Inverse laid out exactly as the reference P11/P22/P12 routines
    ti_11 = jac.t_eta / det
    ti_12 = -jac.t_xi / det
    ti_21 = -jac.s_eta / det
    ti_22 = jac.s_xi / det

    def apply(a, b):
        return -(a * ti_11 + b * ti_12), -(a * ti_21 + b * ti_22)

    return ControlSample(
        p11=apply(_xixi(s, i, j, dxi), _xixi(t, i, j, dxi)),
        p22=apply(_etaeta(s, i, j, deta), _etaeta(t, i, j, deta)),
        p12=apply(_xieta(s, i, j, dxi, deta), _xieta(t, i, j, dxi, deta)),
    )


def control_vectors(param: StructuredGrid, i: int, j: int,
                    spacing: Optional[GridSpacing] = None) -> ControlSample:
    spacing = spacing or param.spacing()
    _check_stencil(param.x, i, j)
    return _control_sample(param.x, param.y, i, j, spacing.del_xi, spacing.del_eta)


class ControlField:
    """
    Control vectors cached at every node; the boundary ring stays zero.

    Arrays have shape (nx, ny, 2).
    """

    def __init__(self, p11: np.ndarray, p22: np.ndarray, p12: np.ndarray):
        self.p11 = p11
        self.p22 = p22
        self.p12 = p12

    @classmethod
    def zeros(cls, nx: int, ny: int) -> "ControlField":
        return cls(np.zeros((nx, ny, 2)), np.zeros((nx, ny, 2)), np.zeros((nx, ny, 2)))

    @property
    def shape(self) -> Tuple[int, int]:
        return self.p11.shape[:2]

    def sample(self, i: int, j: int) -> ControlSample:
        return ControlSample(
            tuple(self.p11[i, j].tolist()),
            tuple(self.p22[i, j].tolist()),
            tuple(self.p12[i, j].tolist()),
        )

    def max_abs(self) -> float:
        return float(max(np.abs(self.p11).max(), np.abs(self.p22).max(), np.abs(self.p12).max()))

    def is_zero(self) -> bool:
        return not (self.p11.any() or self.p22.any() or self.p12.any())


def control_field(param: StructuredGrid) -> ControlField:
    """Precompute the control vectors at every interior node of the parameter grid"""
    nx, ny = param.shape
    dxi, deta = param.spacing()
    s = param.x.tolist()
    t = param.y.tolist()
    field = ControlField.zeros(nx, ny)
    for j in range(1, ny - 1):
        for i in range(1, nx - 1):
            sample = _control_sample(s, t, i, j, dxi, deta)
            field.p11[i, j] = sample.p11
            field.p22[i, j] = sample.p22
            field.p12[i, j] = sample.p12
    logger.debug(f"Control field computed on {nx} x {ny} parameter grid, max |P| = {field.max_abs():.4g}")
    return field
