"""
Mesh quality metrics and fold-over detection
"""
import logging
from typing import Dict

import numpy as np

from .errors import DomainError
from .grid import StructuredGrid

logger = logging.getLogger(__name__)


def cell_jacobians(grid: StructuredGrid) -> np.ndarray:
    """x_xi y_eta - y_xi x_eta at interior nodes, shape (nx-2, ny-2)"""
    dxi, deta = grid.spacing()
    x, y = grid.x, grid.y
    x_xi = (x[2:, 1:-1] - x[:-2, 1:-1]) / (2.0 * dxi)
    y_xi = (y[2:, 1:-1] - y[:-2, 1:-1]) / (2.0 * dxi)
    x_eta = (x[1:-1, 2:] - x[1:-1, :-2]) / (2.0 * deta)
    y_eta = (y[1:-1, 2:] - y[1:-1, :-2]) / (2.0 * deta)
    return x_xi * y_eta - y_xi * x_eta


def _edge_lengths(grid: StructuredGrid):
    # Edges along xi have shape (nx-1, ny), along eta (nx, ny-1)
    along_xi = np.hypot(np.diff(grid.x, axis=0), np.diff(grid.y, axis=0))
    along_eta = np.hypot(np.diff(grid.x, axis=1), np.diff(grid.y, axis=1))
    return along_xi, along_eta


def mesh_metrics(grid: StructuredGrid) -> Dict[str, float]:
    """Summary quality metrics for a structured mesh"""
    jac = cell_jacobians(grid)
    along_xi, along_eta = _edge_lengths(grid)

    # Four edges per cell: south, north, west, east
    cell_edges = np.stack([
        along_xi[:, :-1], along_xi[:, 1:],
        along_eta[:-1, :], along_eta[1:, :],
    ])
    shortest = cell_edges.min(axis=0)
    longest = cell_edges.max(axis=0)
    with np.errstate(divide='ignore'):
        aspect = np.where(shortest > 0, longest / shortest, np.inf)

    metrics = {
        'node_count': grid.nx * grid.ny,
        'cell_count': (grid.nx - 1) * (grid.ny - 1),
        'min_jacobian': float(jac.min()),
        'max_jacobian': float(jac.max()),
        'fold_over_count': int(np.count_nonzero(jac <= 0.0)),
        'min_edge': float(min(along_xi.min(), along_eta.min())),
        'max_edge': float(max(along_xi.max(), along_eta.max())),
        'max_aspect_ratio': float(aspect.max()),
    }
    return metrics


def boundary_layer_thickness(grid: StructuredGrid, side: str) -> np.ndarray:
    """Distance from each boundary node on `side` to its first interior neighbour"""
    x, y = grid.x, grid.y
    if side == "south":
        return np.hypot(x[:, 1] - x[:, 0], y[:, 1] - y[:, 0])
    if side == "north":
        return np.hypot(x[:, -2] - x[:, -1], y[:, -2] - y[:, -1])
    if side == "west":
        return np.hypot(x[1, :] - x[0, :], y[1, :] - y[0, :])
    if side == "east":
        return np.hypot(x[-2, :] - x[-1, :], y[-2, :] - y[-1, :])
    raise DomainError(f"Unknown side '{side}'")
