"""
Exception hierarchy for the elliptic mesh generator.

Library code raises these; only the command-line front end catches them.
"""
from typing import Optional


class MeshError(Exception):
    """Base class for every error raised by this package"""


class InvalidDimensionError(MeshError, ValueError):
    """Grid dimension below the 3x3 minimum"""


class GridIndexError(MeshError, IndexError):
    """Node index outside the grid"""


class NonFiniteGridError(MeshError, ValueError):
    """Grid coordinates contain NaN or infinity"""


class DimensionMismatchError(MeshError, ValueError):
    """Two grids (or a grid and its data) disagree in shape"""


class DomainError(MeshError, ValueError):
    """Parameter point outside the domain of a boundary map"""


class BoundaryMismatchError(MeshError, ValueError):
    """Boundary data incompatible with the target grid"""


class BoundaryParseError(MeshError, ValueError):
    """Boundary file could not be parsed"""


class OpenLoopError(BoundaryParseError):
    """Adjacent boundary sides do not share their corner point"""


class SideCountError(BoundaryParseError):
    """A boundary side has the wrong number of points"""


class ClusterParameterError(MeshError, ValueError):
    """Invalid stretching knot or alpha"""


class StencilError(MeshError, IndexError):
    """Central-difference stencil would leave the grid"""


class _NodeError(MeshError):
    def __init__(self, message: str, i: Optional[int] = None, j: Optional[int] = None):
        self.i = i
        self.j = j
        if i is not None and j is not None:
            message = f"{message} at node ({i}, {j})"
        super().__init__(message)


class SingularMapError(_NodeError, ArithmeticError):
    """Parameter-grid Jacobian is (numerically) singular"""


class DegenerateCellError(_NodeError, ArithmeticError):
    """SOR left-hand side vanished because the metrics collapsed"""


class DivergenceError(MeshError, ArithmeticError):
    """Non-finite coordinates appeared during relaxation"""

    def __init__(self, message: str, iteration: int):
        self.iteration = iteration
        super().__init__(f"{message} (iteration {iteration})")


class RenderError(MeshError, ValueError):
    """Grid cannot be rendered (degenerate bounding box)"""


class UsageError(MeshError):
    """Invalid command-line usage"""


class ConfigError(MeshError, ValueError):
    """Solver or run configuration out of range"""
