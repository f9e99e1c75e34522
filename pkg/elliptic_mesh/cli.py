"""
Command-line front end: build the parameter grid, precompute the control
field, impose the boundary, relax with SOR and write the requested outputs.

Exit status: 0 converged, 2 not converged (outputs still written), 1 error.
"""
import argparse
import logging
import sys
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Union

from .config import (
    DEFAULT_MAX_ITER, DEFAULT_NX, DEFAULT_NY, DEFAULT_OMEGA, DEFAULT_RADIUS,
    DEFAULT_TOLERANCE, GMV_COMPAT, GMV_COMPAT_OPTIONS, LOG_LEVEL, SHOW_PROGRESS,
)
from .errors import ConfigError, MeshError, UsageError
from .fd_control import control_field
from .geometry import CircleBoundary, apply_boundary, load_boundary_polyline, tfi_fill
from .grid import MIN_NODES, new_uniform_grid
from .quality import mesh_metrics
from .solver import SolverConfig, residual_log, solve
from .stretching import BoundaryCluster, ClusterSpec, NearLine, TwoLines, build_parameter_grid
from .visualizations import plot_run_summary, write_figure_html
from .writers import write_gmv, write_matlab, write_svg

logger = logging.getLogger(__name__)

EXIT_CONVERGED = 0
EXIT_ERROR = 1
EXIT_NOT_CONVERGED = 2


@dataclass
class OutputPaths:
    gmv: Optional[str] = None
    gmv_compat: str = GMV_COMPAT
    matlab: Optional[str] = None
    svg: Optional[str] = None
    residuals: Optional[str] = None
    param_svg: Optional[str] = None
    html: Optional[str] = None

    def any_requested(self) -> bool:
        return any([self.gmv, self.matlab, self.svg, self.residuals, self.param_svg, self.html])


@dataclass
class RunConfig:
    nx: int = DEFAULT_NX
    ny: int = DEFAULT_NY
    # CircleBoundary, or the path of a boundary CSV
    boundary: Union[CircleBoundary, str] = field(default_factory=lambda: CircleBoundary(DEFAULT_RADIUS))
    clusters: List[ClusterSpec] = field(default_factory=list)
    solver: SolverConfig = field(default_factory=SolverConfig)
    outputs: OutputPaths = field(default_factory=OutputPaths)
    log_level: Optional[str] = None


class _MeshArgumentParser(argparse.ArgumentParser):
    """argparse raises UsageError instead of exiting on bad input"""

    def error(self, message):
        raise UsageError(message)


def parse_cluster(text: str) -> ClusterSpec:
    """
    Parse `near:AXIS:eta0[:alpha]`, `two:AXIS:eta1:eta2[:alpha]` or
    `bound:AXIS:eta1[:alpha]`.
    """
    parts = text.split(':')
    kind = parts[0].lower()
    arity = {'near': (1, 2), 'two': (2, 3), 'bound': (1, 2)}
    if kind not in arity or len(parts) < 2:
        raise argparse.ArgumentTypeError(
            f"cluster spec '{text}' must start with near:, two: or bound: followed by an axis"
        )
    axis = parts[1].upper()
    if axis not in ("X", "Y"):
        raise argparse.ArgumentTypeError(f"cluster spec '{text}': axis must be X or Y, got '{parts[1]}'")
    low, high = arity[kind]
    values = parts[2:]
    if not low <= len(values) <= high:
        raise argparse.ArgumentTypeError(
            f"cluster spec '{text}': {kind} takes {low} to {high} numbers, got {len(values)}"
        )
    try:
        numbers = [float(v) for v in values]
    except ValueError:
        raise argparse.ArgumentTypeError(f"cluster spec '{text}': non-numeric value")

    try:
        if kind == 'near':
            family = NearLine(*numbers)
        elif kind == 'two':
            family = TwoLines(*numbers)
        else:
            family = BoundaryCluster(*numbers)
    except MeshError as e:
        raise argparse.ArgumentTypeError(f"cluster spec '{text}': {e}")
    return ClusterSpec(axis, family)


def parse_domain(text: str) -> CircleBoundary:
    """`circle` or `circle:RADIUS`"""
    name, _, radius = text.partition(':')
    if name != 'circle':
        raise argparse.ArgumentTypeError(f"unknown domain '{text}', expected circle[:r]")
    try:
        return CircleBoundary(float(radius) if radius else DEFAULT_RADIUS)
    except (ValueError, MeshError) as e:
        raise argparse.ArgumentTypeError(f"domain '{text}': {e}")


def build_parser() -> argparse.ArgumentParser:
    parser = _MeshArgumentParser(
        prog="elliptic-mesh",
        description="Adaptive elliptic structured-quad mesh generator",
    )
    parser.add_argument('--nx', type=int, default=DEFAULT_NX, help="Nodes along xi")
    parser.add_argument('--ny', type=int, default=DEFAULT_NY, help="Nodes along eta")

    domain = parser.add_mutually_exclusive_group()
    domain.add_argument('--domain', type=parse_domain, default=None,
                        help="Analytic domain, circle[:r]")
    domain.add_argument('--boundary', metavar='FILE', default=None,
                        help="Boundary CSV with #south/#east/#north/#west blocks")

    parser.add_argument('--cluster', type=parse_cluster, action='append', default=[],
                        help="near:AXIS:eta0[:alpha] | two:AXIS:eta1:eta2[:alpha] | "
                             "bound:AXIS:eta1[:alpha]; repeatable, applied in order")

    parser.add_argument('--omega', type=float, default=DEFAULT_OMEGA, help="SOR relaxation factor")
    parser.add_argument('--tol', type=float, default=DEFAULT_TOLERANCE, help="Convergence tolerance")
    parser.add_argument('--max-iter', type=int, default=DEFAULT_MAX_ITER, help="Iteration cap")
    parser.add_argument('--no-control', action='store_true', help="Solve without control functions")
    parser.add_argument('--recompute-control', action='store_true',
                        help="Recompute the control field every iteration")

    parser.add_argument('--out-gmv', metavar='PATH')
    parser.add_argument('--gmv-paper-exact', '--gmv-legacy', dest='gmv_paper_exact',
                        action='store_true', help="GMV layout without the z coordinate block")
    parser.add_argument('--out-matlab', metavar='PATH')
    parser.add_argument('--out-svg', metavar='PATH')
    parser.add_argument('--out-residuals', metavar='PATH')
    parser.add_argument('--out-param-svg', metavar='PATH')
    parser.add_argument('--out-html', metavar='PATH', help="Interactive plotly run summary")

    parser.add_argument('--quiet', action='store_true', help="Hide the progress bar")
    parser.add_argument('--log-level', default=None,
                        choices=['DEBUG', 'INFO', 'WARNING', 'ERROR'])
    return parser


def parse_args(argv: Optional[Sequence[str]] = None) -> RunConfig:
    args = build_parser().parse_args(argv)

    if args.nx < MIN_NODES or args.ny < MIN_NODES:
        raise UsageError(f"--nx and --ny must be at least {MIN_NODES}, got {args.nx} x {args.ny}")

    try:
        solver = SolverConfig(
            omega=args.omega,
            tolerance=args.tol,
            max_iter=args.max_iter,
            use_control=not args.no_control,
            recompute_control_each_iter=args.recompute_control,
            show_progress=SHOW_PROGRESS and not args.quiet,
        )
    except ConfigError as e:
        raise UsageError(str(e)) from e

    gmv_compat = "paper-exact" if args.gmv_paper_exact else GMV_COMPAT
    if gmv_compat not in GMV_COMPAT_OPTIONS:
        raise UsageError(f"GMV_COMPAT must be one of {GMV_COMPAT_OPTIONS}, got '{gmv_compat}'")
    outputs = OutputPaths(
        gmv=args.out_gmv,
        gmv_compat=gmv_compat,
        matlab=args.out_matlab,
        svg=args.out_svg,
        residuals=args.out_residuals,
        param_svg=args.out_param_svg,
        html=args.out_html,
    )
    if not outputs.any_requested():
        raise UsageError("no outputs requested; pass at least one --out-* option")

    if args.boundary is not None:
        boundary = args.boundary
    else:
        boundary = args.domain or CircleBoundary(DEFAULT_RADIUS)

    return RunConfig(
        nx=args.nx,
        ny=args.ny,
        boundary=boundary,
        clusters=list(args.cluster),
        solver=solver,
        outputs=outputs,
        log_level=args.log_level,
    )


def _open_output(path: str):
    return open(path, 'w', encoding='utf-8', newline='\n')


def _write_outputs(config: RunConfig, param, mesh, report):
    out = config.outputs
    if out.gmv:
        with _open_output(out.gmv) as f:
            write_gmv(mesh, f, out.gmv_compat)
        logger.info(f"Wrote GMV mesh to {out.gmv}")
    if out.matlab:
        with _open_output(out.matlab) as f:
            write_matlab(mesh, f)
        logger.info(f"Wrote Matlab script to {out.matlab}")
    if out.svg:
        with _open_output(out.svg) as f:
            write_svg(mesh, f)
        logger.info(f"Wrote SVG mesh to {out.svg}")
    if out.param_svg:
        with _open_output(out.param_svg) as f:
            write_svg(param, f, interior_color_key='parameter')
        logger.info(f"Wrote parameter grid SVG to {out.param_svg}")
    if out.residuals:
        with _open_output(out.residuals) as f:
            residual_log(report, f)
        logger.info(f"Wrote residual log to {out.residuals}")
    if out.html:
        write_figure_html(plot_run_summary(param, mesh, report, config.solver.tolerance), out.html)


def run(config: RunConfig) -> int:
    """Execute the meshing pipeline and return the exit status"""
    try:
        computational = new_uniform_grid(config.nx, config.ny)

        param = build_parameter_grid(computational, config.clusters)
        control = control_field(param) if config.solver.use_control else None

        if isinstance(config.boundary, str):
            with open(config.boundary, 'rb') as f:
                boundary = load_boundary_polyline(f, name=config.boundary, nx=config.nx, ny=config.ny)
        else:
            boundary = config.boundary
        physical = tfi_fill(apply_boundary(computational, boundary))
        logger.info(f"Initial mesh by transfinite interpolation on {config.nx} x {config.ny} nodes")

        mesh, report = solve(physical, param, config.solver, control)

        metrics = mesh_metrics(mesh)
        logger.info("Mesh metrics: " + ", ".join(f"{k}={v:.6g}" for k, v in metrics.items()))
        if metrics['fold_over_count'] > 0:
            logger.warning(f"Mesh has {metrics['fold_over_count']} folded cells "
                           f"(min Jacobian {metrics['min_jacobian']:.3e})")

        _write_outputs(config, param, mesh, report)
    except (MeshError, OSError) as e:
        logger.error(f"Meshing failed: {e}", exc_info=True)
        return EXIT_ERROR

    return EXIT_CONVERGED if report.converged else EXIT_NOT_CONVERGED


def main(argv: Optional[Sequence[str]] = None) -> int:
    logging.basicConfig(level=LOG_LEVEL, format='%(asctime)s %(levelname)s %(name)s: %(message)s')
    try:
        config = parse_args(argv)
    except UsageError as e:
        logger.error(f"Usage error: {e}")
        build_parser().print_usage(sys.stderr)
        return EXIT_ERROR

    if config.log_level:
        logging.getLogger().setLevel(config.log_level)
    return run(config)
