"""
Point-SOR relaxation of the coupled elliptic grid equations with control terms.

Interior nodes are swept j-outer, i-inner in Gauss-Seidel order; every metric
and difference is evaluated on the current, partially updated grid.
"""
import logging
import math
from dataclasses import dataclass, field
from typing import List, Optional, TextIO, Tuple

import numpy as np
import pandas as pd
from tqdm import tqdm

from .config import DEFAULT_MAX_ITER, DEFAULT_OMEGA, DEFAULT_TOLERANCE, SHOW_PROGRESS
from .errors import ConfigError, DegenerateCellError, DimensionMismatchError, DivergenceError
from .fd_control import ControlField, control_field, metric_terms
from .grid import GridSpacing, StructuredGrid, mesh_change_norm

logger = logging.getLogger(__name__)


@dataclass
class SolverConfig:
    omega: float = DEFAULT_OMEGA
    tolerance: float = DEFAULT_TOLERANCE
    max_iter: int = DEFAULT_MAX_ITER
    use_control: bool = True
    recompute_control_each_iter: bool = False
    show_progress: bool = SHOW_PROGRESS

    def __post_init__(self):
        if not 0.0 < self.omega < 2.0:
            raise ConfigError(f"omega must lie in (0, 2), got {self.omega}")
        if not self.tolerance >= 0.0:
            raise ConfigError(f"tolerance must be nonnegative, got {self.tolerance}")
        if self.max_iter < 1:
            raise ConfigError(f"max_iter must be at least 1, got {self.max_iter}")


@dataclass
class ConvergenceReport:
    iterations: int = 0
    residuals: List[float] = field(default_factory=list)
    converged: bool = False
    reason: str = ""

    @property
    def final_residual(self) -> Optional[float]:
        return self.residuals[-1] if self.residuals else None

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame({
            'iteration': np.arange(1, len(self.residuals) + 1, dtype=int),
            'residual': np.asarray(self.residuals, dtype=np.float64),
        })


def _node_update(x, y, i, j, p11, p22, p12, dxi, deta):
    """Relaxation targets (rhs/lhs) for x and y at one interior node"""
    m = metric_terms(x, y, i, j, dxi, deta)
    p11_ij = p11[i][j]
    p22_ij = p22[i][j]
    p12_ij = p12[i][j]

    # P and Q of the control terms
    p = m.g22 * p11_ij[0] - 2.0 * m.g12 * p12_ij[0] + m.g11 * p22_ij[0]
    q = m.g22 * p11_ij[1] - 2.0 * m.g12 * p12_ij[1] + m.g11 * p22_ij[1]
    adapt_x = p * m.x_xi + q * m.x_eta
    adapt_y = p * m.y_xi + q * m.y_eta

    dxi2 = dxi * dxi
    deta2 = deta * deta
    lhs = 2.0 * (m.g22 / dxi2 + m.g11 / deta2)
    if lhs == 0.0:
        raise DegenerateCellError("Vanishing metric coefficients", i, j)

    rhs_x = (m.g22 * (x[i + 1][j] + x[i - 1][j]) / dxi2
             + m.g11 * (x[i][j + 1] + x[i][j - 1]) / deta2
             - 2.0 * m.g12 * m.x_xieta + adapt_x)
    rhs_y = (m.g22 * (y[i + 1][j] + y[i - 1][j]) / dxi2
             + m.g11 * (y[i][j + 1] + y[i][j - 1]) / deta2
             - 2.0 * m.g12 * m.y_xieta + adapt_y)
    return rhs_x / lhs, rhs_y / lhs


def _sweep_lists(x, y, control: Tuple[list, list, list], dxi, deta, omega):
    p11, p22, p12 = control
    nx = len(x)
    ny = len(x[0])
    for j in range(1, ny - 1):
        for i in range(1, nx - 1):
            # Metrics are taken once per node, before either coordinate moves
            target_x, target_y = _node_update(x, y, i, j, p11, p22, p12, dxi, deta)
            x[i][j] = x[i][j] + omega * (target_x - x[i][j])
            y[i][j] = y[i][j] + omega * (target_y - y[i][j])


def _control_lists(control: ControlField):
    return control.p11.tolist(), control.p22.tolist(), control.p12.tolist()


def sor_sweep(physical: StructuredGrid, control: Optional[ControlField],
              spacing: Optional[GridSpacing] = None,
              omega: float = DEFAULT_OMEGA) -> StructuredGrid:
    """One Gauss-Seidel/SOR sweep over the interior nodes, in place"""
    spacing = spacing or physical.spacing()
    if control is None:
        control = ControlField.zeros(*physical.shape)
    if control.shape != physical.shape:
        raise DimensionMismatchError(
            f"Control field {control.shape} does not match grid {physical.shape}"
        )
    x = physical.x.tolist()
    y = physical.y.tolist()
    _sweep_lists(x, y, _control_lists(control), spacing.del_xi, spacing.del_eta, omega)
    physical.x[:, :] = x
    physical.y[:, :] = y
    return physical


def equation_residual(physical: StructuredGrid, control: Optional[ControlField] = None,
                      spacing: Optional[GridSpacing] = None) -> float:
    """Max-norm of the discrete equation residual |rhs/lhs - r| over interior nodes"""
    spacing = spacing or physical.spacing()
    if control is None:
        control = ControlField.zeros(*physical.shape)
    p11, p22, p12 = _control_lists(control)
    x = physical.x.tolist()
    y = physical.y.tolist()
    worst = 0.0
    for j in range(1, physical.ny - 1):
        for i in range(1, physical.nx - 1):
            target_x, target_y = _node_update(x, y, i, j, p11, p22, p12,
                                           spacing.del_xi, spacing.del_eta)
            worst = max(worst, abs(target_x - x[i][j]), abs(target_y - y[i][j]))
    return worst


def solve(physical: StructuredGrid, param: StructuredGrid,
          cfg: Optional[SolverConfig] = None,
          control: Optional[ControlField] = None) -> Tuple[StructuredGrid, ConvergenceReport]:
    """
    Relax the physical grid until the normalized mesh change drops to the
    tolerance or the iteration cap is reached.

    The residual after each sweep is the root-sum-square node displacement
    divided by the interior node count (nx-2)(ny-2).
    """
    cfg = cfg or SolverConfig()
    if physical.shape != param.shape:
        raise DimensionMismatchError(
            f"Physical grid {physical.shape} and parameter grid {param.shape} differ"
        )
    nx, ny = physical.shape
    dxi, deta = physical.spacing()
    interior = (nx - 2) * (ny - 2)

    if not cfg.use_control:
        control = ControlField.zeros(nx, ny)
    elif control is None:
        control = control_field(param)
    control_lists = _control_lists(control)

    grid = physical.copy()
    x = grid.x.tolist()
    y = grid.y.tolist()
    report = ConvergenceReport()
    residual = math.inf

    logger.info(f"SOR solve on {nx} x {ny} grid: omega={cfg.omega}, "
                f"tolerance={cfg.tolerance}, max_iter={cfg.max_iter}, control={cfg.use_control}")

    with tqdm(total=cfg.max_iter, desc="SOR", disable=not cfg.show_progress, leave=False) as progress:
        while report.iterations < cfg.max_iter and residual > cfg.tolerance:
            report.iterations += 1
            previous = grid
            if cfg.use_control and cfg.recompute_control_each_iter:
                control_lists = _control_lists(control_field(param))

            _sweep_lists(x, y, control_lists, dxi, deta, cfg.omega)

            x_arr = np.array(x)
            y_arr = np.array(y)
            if not (np.isfinite(x_arr).all() and np.isfinite(y_arr).all()):
                raise DivergenceError("Non-finite coordinates after SOR sweep", report.iterations)
            grid = StructuredGrid(x_arr, y_arr)

            residual = mesh_change_norm(grid, previous) / interior
            report.residuals.append(residual)
            logger.debug(f"Iteration = {report.iterations}, Residual = {residual}")
            progress.update(1)
            progress.set_postfix(residual=f"{residual:.3e}")

    report.converged = residual <= cfg.tolerance
    report.reason = "tolerance" if report.converged else "max_iter"
    if report.converged:
        logger.info(f"Converged after {report.iterations} iterations, residual {residual:.3e}")
    else:
        logger.warning(f"Not converged after {report.iterations} iterations, "
                       f"residual {residual:.3e} > tolerance {cfg.tolerance}")
    return grid, report


def residual_log(report: ConvergenceReport, sink: TextIO):
    """Write one 'iteration residual' line per iteration"""
    if not report.residuals:
        return
    report.to_frame().to_csv(sink, sep=' ', header=False, index=False, lineterminator='\n')
