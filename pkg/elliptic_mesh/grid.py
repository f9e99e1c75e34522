"""
Structured grid data structure shared by the computational, parameter and
physical spaces.

Coordinates are stored as two float64 arrays of shape (nx, ny) indexed
``x[i, j]``, where i runs along xi and j along eta. The flattened node number
used by the writers is ``no = i + j * nx``.
"""
import logging
from typing import NamedTuple, Tuple

import numpy as np

from .errors import DimensionMismatchError, GridIndexError, InvalidDimensionError, NonFiniteGridError

logger = logging.getLogger(__name__)

MIN_NODES = 3


class GridSpacing(NamedTuple):
    """Uniform computational-space spacing"""
    del_xi: float
    del_eta: float


class StructuredGrid:
    """Logically rectangular array of 2D node coordinates"""

    def __init__(self, x: np.ndarray, y: np.ndarray):
        x = np.array(x, dtype=np.float64)
        y = np.array(y, dtype=np.float64)
        if x.ndim != 2 or x.shape != y.shape:
            raise DimensionMismatchError(
                f"x and y must be 2D arrays of equal shape, got {x.shape} and {y.shape}"
            )
        _check_dimensions(*x.shape)
        if not (np.isfinite(x).all() and np.isfinite(y).all()):
            raise NonFiniteGridError("Grid coordinates must be finite")
        self.x = x
        self.y = y

    @property
    def nx(self) -> int:
        return self.x.shape[0]

    @property
    def ny(self) -> int:
        return self.x.shape[1]

    @property
    def shape(self) -> Tuple[int, int]:
        return self.x.shape

    def spacing(self) -> GridSpacing:
        return GridSpacing(1.0 / (self.nx - 1.0), 1.0 / (self.ny - 1.0))

    def copy(self) -> "StructuredGrid":
        return StructuredGrid(self.x.copy(), self.y.copy())

    def node(self, i: int, j: int) -> Tuple[float, float]:
        self._check_index(i, j)
        return float(self.x[i, j]), float(self.y[i, j])

    def set_node(self, i: int, j: int, point: Tuple[float, float]):
        self._check_index(i, j)
        self.x[i, j], self.y[i, j] = point

    def flatten_index(self, i: int, j: int) -> int:
        self._check_index(i, j)
        return i + j * self.nx

    def unflatten_index(self, no: int) -> Tuple[int, int]:
        if not 0 <= no < self.nx * self.ny:
            raise GridIndexError(f"Flat index {no} outside [0, {self.nx * self.ny})")
        return no % self.nx, no // self.nx

    def flat_coordinates(self) -> Tuple[np.ndarray, np.ndarray]:
        """Coordinates in flattened node order (i fastest)"""
        return self.x.ravel(order='F'), self.y.ravel(order='F')

    def is_boundary(self, i: int, j: int) -> bool:
        return i in (0, self.nx - 1) or j in (0, self.ny - 1)

    def _check_index(self, i: int, j: int):
        if not (0 <= i < self.nx and 0 <= j < self.ny):
            raise GridIndexError(
                f"Node ({i}, {j}) outside grid of {self.nx} x {self.ny} nodes"
            )

    def __eq__(self, other) -> bool:
        if not isinstance(other, StructuredGrid):
            return NotImplemented
        return np.array_equal(self.x, other.x) and np.array_equal(self.y, other.y)

    def __repr__(self) -> str:
        return f"StructuredGrid(nx={self.nx}, ny={self.ny})"


def _check_dimensions(nx: int, ny: int):
    if nx < MIN_NODES or ny < MIN_NODES:
        raise InvalidDimensionError(
            f"Grid needs at least {MIN_NODES} nodes per direction, got {nx} x {ny}"
        )


def new_uniform_grid(nx: int, ny: int) -> StructuredGrid:
    """Uniform grid on the unit square: node (i, j) = (i/(nx-1), j/(ny-1))"""
    _check_dimensions(nx, ny)
    xi = np.arange(nx, dtype=np.float64) / (nx - 1.0)
    eta = np.arange(ny, dtype=np.float64) / (ny - 1.0)
    x, y = np.meshgrid(xi, eta, indexing='ij')
    return StructuredGrid(x, y)


def mesh_change_norm(current: StructuredGrid, previous: StructuredGrid) -> float:
    """
    Root-sum-square of node displacements over all nodes.

    Not normalized; the solver divides by the interior node count.
    """
    if current.shape != previous.shape:
        raise DimensionMismatchError(
            f"Cannot compare grids of shape {current.shape} and {previous.shape}"
        )
    dx = current.x - previous.x
    dy = current.y - previous.y
    return float(np.sqrt(np.sum(dx * dx + dy * dy)))
