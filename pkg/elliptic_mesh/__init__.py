"""
Elliptic adaptive structured-quad mesh generator
"""

from .grid import (
    GridSpacing,
    StructuredGrid,
    new_uniform_grid,
    mesh_change_norm
)

from .geometry import (
    CircleBoundary,
    PolylineBoundary,
    circle_boundary_point,
    apply_boundary,
    tfi_fill,
    load_boundary_polyline,
    square_boundary
)

from .stretching import (
    NearLine,
    TwoLines,
    BoundaryCluster,
    ClusterSpec,
    eriksson,
    cluster_near_line,
    cluster_two_lines,
    cluster_boundary,
    build_parameter_grid
)

from .fd_control import (
    ControlField,
    control_field,
    control_vectors,
    jacobian_T,
    metric_coefficients
)

from .solver import (
    SolverConfig,
    ConvergenceReport,
    sor_sweep,
    solve,
    equation_residual,
    residual_log
)

from .quality import (
    cell_jacobians,
    mesh_metrics,
    boundary_layer_thickness
)

from .writers import (
    write_gmv,
    write_matlab,
    write_svg
)

__version__ = "1.0.0"
__author__ = "Elliptic Mesh Team"

__all__ = [
    # Grid
    'GridSpacing',
    'StructuredGrid',
    'new_uniform_grid',
    'mesh_change_norm',

    # Boundaries and initial mesh
    'CircleBoundary',
    'PolylineBoundary',
    'circle_boundary_point',
    'apply_boundary',
    'tfi_fill',
    'load_boundary_polyline',
    'square_boundary',

    # Parameter-space clustering
    'NearLine',
    'TwoLines',
    'BoundaryCluster',
    'ClusterSpec',
    'eriksson',
    'cluster_near_line',
    'cluster_two_lines',
    'cluster_boundary',
    'build_parameter_grid',

    # Control functions
    'ControlField',
    'control_field',
    'control_vectors',
    'jacobian_T',
    'metric_coefficients',

    # Solver
    'SolverConfig',
    'ConvergenceReport',
    'sor_sweep',
    'solve',
    'equation_residual',
    'residual_log',

    # Quality
    'cell_jacobians',
    'mesh_metrics',
    'boundary_layer_thickness',

    # Writers
    'write_gmv',
    'write_matlab',
    'write_svg'
]
