"""
Mesh writers: GMV ASCII, Matlab plotting script and SVG.
"""
import logging
from typing import Dict, Iterator, NamedTuple, Optional, TextIO

import svgwrite

from .config import GMV_COMPAT_OPTIONS, GMV_NO_Z_MODES, MESH_COLORS, SVG_STYLE
from .errors import ConfigError, RenderError
from .grid import StructuredGrid

logger = logging.getLogger(__name__)


class QuadCell(NamedTuple):
    """1-based node indices of one cell, counterclockwise"""
    n1: int
    n2: int
    n3: int
    n4: int


def format_number(value: float) -> str:
    """Shortest round-trip decimal, integral values without a trailing '.0'"""
    text = repr(float(value) + 0.0)
    if text.endswith('.0'):
        text = text[:-2]
    return text


def quad_cells(grid: StructuredGrid) -> Iterator[QuadCell]:
    nx = grid.nx
    for j in range(grid.ny - 1):
        for i in range(nx - 1):
            no = (i + j * nx) + 1
            no1 = i + (j + 1) * nx + 1
            yield QuadCell(no, no + 1, no1 + 1, no1)


def write_gmv(grid: StructuredGrid, sink: TextIO, compat: str = "valid-gmv"):
    """
    GMV ASCII mesh. 'paper-exact' (alias 'legacy') reproduces the reference
    layout, which has no z block. 'valid-gmv' adds the zero z coordinates GMV readers expect.
    """
    if compat not in GMV_COMPAT_OPTIONS:
        raise ConfigError(f"compat must be one of {GMV_COMPAT_OPTIONS}, got '{compat}'")
    xs, ys = grid.flat_coordinates()

    sink.write("gmvinput ascii\n")
    sink.write(f"nodes  {grid.nx * grid.ny}\n")
    sink.write("".join(f"{format_number(v)}         " for v in xs))
    sink.write("\n\n")
    sink.write("".join(f"{format_number(v)}        " for v in ys))
    sink.write("\n\n")
    if compat not in GMV_NO_Z_MODES:
        sink.write("".join(f"{format_number(0.0)}        " for _ in xs))
        sink.write("\n\n")

    sink.write(f"cells  {(grid.nx - 1) * (grid.ny - 1)}\n")
    for cell in quad_cells(grid):
        sink.write("quad  4  \n")
        sink.write(f"{cell.n1}   {cell.n2}   {cell.n3}  {cell.n4}\n")
    sink.write("\n")
    sink.write("\nendgmv\n")


def write_matlab(grid: StructuredGrid, sink: TextIO):
    """Matlab script assigning x1/y1 and plotting the grid lines"""
    sink.write("clear;\n")
    sink.write("holdon=ishold;\n")
    for j in range(grid.ny):
        for i in range(grid.nx):
            sink.write(f"x1({i + 1},{j + 1})={format_number(grid.x[i, j])};   "
                       f"y1({i + 1},{j + 1})={format_number(grid.y[i, j])};\n")

    sink.write(f"m =  {grid.nx}\n")
    sink.write(f"n =  {grid.ny}\n")

    sink.write("plot(x1(1,:),y1(1,:),'r'); hold on\n")
    sink.write("plot(x1(m,:),y1(m,:),'r');\n")
    sink.write("plot(x1(:,1),y1(:,1),'r');\n")
    sink.write("plot(x1(:,n),y1(:,n),'r');\n")

    sink.write("% Plot internal grid lines\n")
    sink.write("for i=2:m-1, plot(x1(i,:),y1(i,:),'b'); end\n")
    sink.write("for j=2:n-1, plot(x1(:,j),y1(:,j),'b'); end\n")

    sink.write("if (~holdon), hold off, end\n")
    sink.write("axis off;\n")


def write_svg(grid: StructuredGrid, sink: TextIO, style: Optional[Dict] = None,
              colors: Optional[Dict] = None, interior_color_key: str = 'interior'):
    """
    One polyline per grid row and per grid column; the view box is the
    bounding box plus a margin. SVG y points down, so y is negated.
    """
    style = {**SVG_STYLE, **(style or {})}
    colors = {**MESH_COLORS, **(colors or {})}

    xmin, xmax = float(grid.x.min()), float(grid.x.max())
    ymin, ymax = float(grid.y.min()), float(grid.y.max())
    extent = max(xmax - xmin, ymax - ymin)
    if extent <= 0.0:
        raise RenderError("All grid nodes coincide; nothing to render")
    margin = style['margin_fraction'] * extent
    view_w = (xmax - xmin) + 2 * margin
    view_h = (ymax - ymin) + 2 * margin

    size_px = style['size_px']
    scale = size_px / max(view_w, view_h)
    dwg = svgwrite.Drawing(size=(f"{view_w * scale:.2f}px", f"{view_h * scale:.2f}px"))
    dwg.viewbox(xmin - margin, -ymax - margin, view_w, view_h)

    # Stroke widths are given in pixels; convert to user units
    width = {
        'boundary': style['boundary_width'] / scale,
        'interior': style['interior_width'] / scale,
    }

    def add_line(points, kind):
        color = colors['boundary'] if kind == 'boundary' else colors[interior_color_key]
        dwg.add(dwg.polyline(points=points, stroke=color, fill='none',
                             stroke_width=width[kind], class_=kind))

    for j in range(grid.ny):
        kind = 'boundary' if j in (0, grid.ny - 1) else 'interior'
        add_line([(float(grid.x[i, j]), -float(grid.y[i, j])) for i in range(grid.nx)], kind)
    for i in range(grid.nx):
        kind = 'boundary' if i in (0, grid.nx - 1) else 'interior'
        add_line([(float(grid.x[i, j]), -float(grid.y[i, j])) for j in range(grid.ny)], kind)

    dwg.write(sink)
