"""
Physical-domain boundaries, Dirichlet boundary imposition and transfinite
interpolation of the initial interior mesh.
"""
import io
import logging
import math
from dataclasses import dataclass
from typing import BinaryIO, Dict, List, Optional, Tuple, Union

import numpy as np

from .config import CORNER_TOLERANCE
from .errors import (
    BoundaryMismatchError, BoundaryParseError, DomainError, OpenLoopError, SideCountError,
)
from .grid import StructuredGrid

logger = logging.getLogger(__name__)

SIDES = ("south", "east", "north", "west")

Point = Tuple[float, float]


@dataclass(frozen=True)
class CircleBoundary:
    """Circle of the given radius centred on the origin"""
    radius: float = 1.0

    def __post_init__(self):
        if not self.radius > 0:
            raise DomainError(f"Circle radius must be positive, got {self.radius}")


@dataclass(frozen=True, eq=False)
class PolylineBoundary:
    """
    Four boundary sides as point arrays of shape (n, 2).

    south/north run xi 0 -> 1, west/east run eta 0 -> 1.
    """
    south: np.ndarray
    east: np.ndarray
    north: np.ndarray
    west: np.ndarray

    def side(self, name: str) -> np.ndarray:
        return getattr(self, name)

    def validate(self, nx: Optional[int] = None, ny: Optional[int] = None,
                 tol: float = CORNER_TOLERANCE):
        for name in SIDES:
            if len(self.side(name)) < 2:
                raise SideCountError(f"Side '{name}' needs at least 2 points")
            if not np.isfinite(self.side(name)).all():
                raise BoundaryParseError(f"Side '{name}' has non-finite coordinates")
        corners = [
            ("south", 0, "west", 0),
            ("south", -1, "east", 0),
            ("north", 0, "west", -1),
            ("north", -1, "east", -1),
        ]
        for side_a, idx_a, side_b, idx_b in corners:
            pa = self.side(side_a)[idx_a]
            pb = self.side(side_b)[idx_b]
            if np.max(np.abs(pa - pb)) > tol:
                raise OpenLoopError(
                    f"Sides '{side_a}' and '{side_b}' do not meet: {tuple(pa)} vs {tuple(pb)}"
                )
        if nx is not None:
            for name in ("south", "north"):
                if len(self.side(name)) != nx:
                    raise SideCountError(
                        f"Side '{name}' has {len(self.side(name))} points, grid needs nx={nx}"
                    )
        if ny is not None:
            for name in ("west", "east"):
                if len(self.side(name)) != ny:
                    raise SideCountError(
                        f"Side '{name}' has {len(self.side(name))} points, grid needs ny={ny}"
                    )


BoundarySpec = Union[CircleBoundary, PolylineBoundary]


def circle_boundary_point(zeta: float, eta: float, radius: float = 1.0) -> Point:
    """
    Map a point on the unit-square boundary onto the circle.

    Sides are tested in the order eta=0, zeta=1, eta=1, zeta=0, so corners take
    the angle of the first matching side. Traversal is counterclockwise.
    """
    pi = math.pi
    if eta == 0:
        theta = pi / 2.0 * zeta
    elif zeta == 1:
        theta = pi / 2 + pi / 2 * eta
    elif eta == 1:
        theta = pi + pi / 2 * (1.0 - zeta)
    elif zeta == 0:
        theta = 3.0 * pi / 2.0 + pi / 2.0 * (1.0 - eta)
    else:
        raise DomainError(f"({zeta}, {eta}) is not on the unit-square boundary")
    return radius * math.cos(theta), radius * math.sin(theta)


def _boundary_image(spec: BoundarySpec, grid: StructuredGrid, i: int, j: int) -> Point:
    if isinstance(spec, CircleBoundary):
        zeta = i / (grid.nx - 1.0)
        eta = j / (grid.ny - 1.0)
        return circle_boundary_point(zeta, eta, spec.radius)
    # Polyline points are the Dirichlet data directly
    if j == 0:
        return tuple(spec.south[i])
    if i == grid.nx - 1:
        return tuple(spec.east[j])
    if j == grid.ny - 1:
        return tuple(spec.north[i])
    return tuple(spec.west[j])


def apply_boundary(grid: StructuredGrid, spec: BoundarySpec) -> StructuredGrid:
    """Replace every boundary node by the boundary image of its parameter"""
    if isinstance(spec, PolylineBoundary):
        try:
            spec.validate(grid.nx, grid.ny)
        except SideCountError as e:
            raise BoundaryMismatchError(str(e)) from e

    result = grid.copy()
    for j in range(grid.ny):
        for i in range(grid.nx):
            if grid.is_boundary(i, j):
                result.x[i, j], result.y[i, j] = _boundary_image(spec, grid, i, j)
    return result


def tfi_fill(grid: StructuredGrid) -> StructuredGrid:
    """Fill interior nodes by bilinear transfinite interpolation of the boundary"""
    result = grid.copy()
    nx, ny = grid.nx, grid.ny
    for coords in (result.x, result.y):
        for j in range(1, ny - 1):
            for i in range(1, nx - 1):
                zeta1 = i / (nx - 1.0)
                eta1 = j / (ny - 1.0)
                coords[i, j] = (
                    (1.0 - zeta1) * coords[0, j] + zeta1 * coords[nx - 1, j]
                    + (1.0 - eta1) * coords[i, 0] + eta1 * coords[i, ny - 1]
                    - ((1.0 - zeta1) * (1.0 - eta1) * coords[0, 0]
                       + zeta1 * (1.0 - eta1) * coords[nx - 1, 0]
                       + zeta1 * eta1 * coords[nx - 1, ny - 1]
                       + (1.0 - zeta1) * eta1 * coords[0, ny - 1])
                )
    return result


def load_boundary_polyline(source: BinaryIO, name: str = "<boundary>",
                           nx: Optional[int] = None, ny: Optional[int] = None,
                           tol: float = CORNER_TOLERANCE) -> PolylineBoundary:
    """
    Read a boundary CSV: blocks headed `#south`, `#east`, `#north`, `#west`
    in that order, one `x,y` pair per line, blank lines ignored.

    When nx/ny are given the side point counts are checked against them.
    """
    content = source.read()
    if isinstance(content, bytes):
        try:
            content = content.decode('utf-8')
        except UnicodeDecodeError as e:
            raise BoundaryParseError(f"{name}: not valid UTF-8 ({e.reason} at byte {e.start})") from e
    text = io.StringIO(content)
    blocks: Dict[str, List[Point]] = {}
    current: Optional[str] = None

    for lineno, raw in enumerate(text, start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith('#'):
            header = line[1:].strip().lower()
            expected = SIDES[len(blocks)] if len(blocks) < len(SIDES) else None
            if header != expected:
                raise BoundaryParseError(
                    f"{name}:{lineno}: expected header '#{expected}', got '{line}'"
                )
            blocks[header] = []
            current = header
            continue
        if current is None:
            raise BoundaryParseError(f"{name}:{lineno}: point before any side header")
        parts = line.split(',')
        if len(parts) != 2:
            raise BoundaryParseError(f"{name}:{lineno}: expected 'x,y', got '{line}'")
        try:
            point = (float(parts[0]), float(parts[1]))
        except ValueError as e:
            raise BoundaryParseError(f"{name}:{lineno}: {e}") from e
        if not (math.isfinite(point[0]) and math.isfinite(point[1])):
            raise BoundaryParseError(f"{name}:{lineno}: non-finite coordinate '{line}'")
        blocks[current].append(point)

    missing = [side for side in SIDES if side not in blocks]
    if missing:
        raise BoundaryParseError(f"{name}: missing side blocks {missing}")

    spec = PolylineBoundary(**{side: np.array(blocks[side], dtype=np.float64).reshape(-1, 2)
                               for side in SIDES})
    spec.validate(nx, ny, tol)
    logger.info(f"Loaded boundary from {name}: "
                + ", ".join(f"{side}={len(blocks[side])}" for side in SIDES))
    return spec


def square_boundary(nx: int, ny: int, width: float = 1.0, height: float = 1.0) -> PolylineBoundary:
    """Rectangle [0, width] x [0, height] with uniformly spaced side points"""
    s = np.arange(nx, dtype=np.float64) / (nx - 1.0)
    t = np.arange(ny, dtype=np.float64) / (ny - 1.0)
    return PolylineBoundary(
        south=np.column_stack([width * s, np.zeros(nx)]),
        east=np.column_stack([np.full(ny, width), height * t]),
        north=np.column_stack([width * s, np.full(nx, height)]),
        west=np.column_stack([np.zeros(ny), height * t]),
    )
