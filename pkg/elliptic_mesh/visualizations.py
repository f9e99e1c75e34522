"""
Interactive plotly figures for meshes and convergence histories
"""
import logging
from typing import List, Optional

import plotly.graph_objects as go
from plotly.subplots import make_subplots

from .config import MESH_COLORS
from .grid import StructuredGrid
from .solver import ConvergenceReport

logger = logging.getLogger(__name__)


def _line_coordinates(grid: StructuredGrid, boundary: bool):
    """Grid lines joined into one x/y list, separated by None"""
    xs: List[Optional[float]] = []
    ys: List[Optional[float]] = []
    nx, ny = grid.shape

    for j in range(ny):
        if (j in (0, ny - 1)) == boundary:
            xs.extend(grid.x[:, j].tolist() + [None])
            ys.extend(grid.y[:, j].tolist() + [None])
    for i in range(nx):
        if (i in (0, nx - 1)) == boundary:
            xs.extend(grid.x[i, :].tolist() + [None])
            ys.extend(grid.y[i, :].tolist() + [None])
    return xs, ys


def _mesh_traces(grid: StructuredGrid, interior_color: str, name: str):
    interior_x, interior_y = _line_coordinates(grid, boundary=False)
    boundary_x, boundary_y = _line_coordinates(grid, boundary=True)
    return [
        go.Scatter(
            x=interior_x, y=interior_y, mode='lines', name=f"{name} interior",
            line=dict(color=interior_color, width=1), hoverinfo='skip',
        ),
        go.Scatter(
            x=boundary_x, y=boundary_y, mode='lines', name=f"{name} boundary",
            line=dict(color=MESH_COLORS['boundary'], width=2), hoverinfo='skip',
        ),
    ]


def plot_mesh(grid: StructuredGrid, title: str = "Mesh", color_key: str = 'interior') -> go.Figure:
    """
    Grid lines of a structured mesh with equal axis scaling.

    Args:
        grid: Mesh to draw
        title: Figure title
        color_key: MESH_COLORS entry used for interior lines
    """
    fig = go.Figure(data=_mesh_traces(grid, MESH_COLORS[color_key], title))
    fig.update_layout(
        title=f"{title} ({grid.nx} x {grid.ny})",
        xaxis_title="x",
        yaxis_title="y",
        height=600,
        showlegend=False,
        yaxis=dict(scaleanchor="x", scaleratio=1),
    )
    return fig


def plot_convergence(report: ConvergenceReport, tolerance: Optional[float] = None) -> go.Figure:
    """Residual per iteration on a log axis, with the tolerance as a reference line"""
    frame = report.to_frame()
    fig = go.Figure(data=[go.Scatter(
        x=frame['iteration'],
        y=frame['residual'],
        mode='lines+markers',
        name="Residual",
        marker=dict(color=MESH_COLORS['residual']),
    )])
    if tolerance is not None and tolerance > 0:
        fig.add_hline(y=tolerance, line_dash="dash", line_color=MESH_COLORS['tolerance'],
                      annotation_text="tolerance")

    fig.update_layout(
        title=f"SOR Convergence ({report.iterations} iterations, {report.reason or 'not run'})",
        xaxis_title="Iteration",
        yaxis_title="Residual",
        yaxis_type="log",
        height=400,
        showlegend=False,
    )
    return fig


def plot_run_summary(param: StructuredGrid, physical: StructuredGrid,
                     report: ConvergenceReport, tolerance: Optional[float] = None) -> go.Figure:
    """Parameter grid, final mesh and convergence history side by side"""
    fig = make_subplots(rows=1, cols=3, subplot_titles=(
        "Parameter grid", "Physical mesh", "Convergence",
    ))
    for trace in _mesh_traces(param, MESH_COLORS['parameter'], "Parameter"):
        fig.add_trace(trace, row=1, col=1)
    for trace in _mesh_traces(physical, MESH_COLORS['interior'], "Physical"):
        fig.add_trace(trace, row=1, col=2)

    frame = report.to_frame()
    fig.add_trace(go.Scatter(
        x=frame['iteration'], y=frame['residual'], mode='lines+markers', name="Residual",
        marker=dict(color=MESH_COLORS['residual']),
    ), row=1, col=3)
    if tolerance is not None and tolerance > 0:
        fig.add_hline(y=tolerance, line_dash="dash", line_color=MESH_COLORS['tolerance'], row=1, col=3)

    fig.update_yaxes(scaleanchor="x", scaleratio=1, row=1, col=1)
    fig.update_yaxes(scaleanchor="x2", scaleratio=1, row=1, col=2)
    fig.update_yaxes(type="log", row=1, col=3)
    fig.update_layout(
        title=f"Elliptic Mesh Run ({physical.nx} x {physical.ny})",
        height=500,
        showlegend=False,
    )
    return fig


def write_figure_html(fig: go.Figure, path: str):
    # Fixed div id keeps repeated runs byte-identical
    fig.write_html(path, include_plotlyjs='cdn', div_id="elliptic-mesh-figure")
    logger.info(f"Wrote figure to {path}")
