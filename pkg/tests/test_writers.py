import io
import re

import numpy as np
import pytest

from elliptic_mesh.errors import ConfigError, RenderError
from elliptic_mesh.grid import StructuredGrid, new_uniform_grid
from elliptic_mesh.writers import format_number, quad_cells, write_gmv, write_matlab, write_svg

from .helpers import initial_circle_mesh


def _render(writer, grid, *args):
    sink = io.StringIO()
    writer(grid, sink, *args)
    return sink.getvalue()


@pytest.mark.parametrize("value, text", [
    (1.0, "1"),
    (0.0, "0"),
    (-0.0, "0"),
    (0.5, "0.5"),
    (-2.0, "-2"),
    (0.1, "0.1"),
    (1e-20, "1e-20"),
])
def test_format_number(value, text):
    assert format_number(value) == text


@pytest.mark.parametrize("compat, fixture", [
    ("paper-exact", "square_3x3_paper_exact.gmv"),
    ("legacy", "square_3x3_paper_exact.gmv"),
    ("valid-gmv", "square_3x3_valid.gmv"),
])
def test_gmv_golden(compat, fixture, fixtures_dir):
    expected = (fixtures_dir / fixture).read_text(encoding='utf-8')
    assert _render(write_gmv, new_uniform_grid(3, 3), compat) == expected


def test_gmv_rejects_unknown_compat():
    with pytest.raises(ConfigError):
        _render(write_gmv, new_uniform_grid(3, 3), "gmv-3d")


def test_matlab_golden(fixtures_dir):
    expected = (fixtures_dir / "square_3x3.m").read_text(encoding='utf-8')
    assert _render(write_matlab, new_uniform_grid(3, 3)) == expected


def test_quad_cells_of_4x3_grid():
    cells = list(quad_cells(new_uniform_grid(4, 3)))
    assert len(cells) == 6
    assert cells[0] == (1, 2, 6, 5)
    assert cells[-1] == (7, 8, 12, 11)


def test_gmv_cell_lines_of_4x3_grid():
    text = _render(write_gmv, new_uniform_grid(4, 3))
    cell_lines = [line for line in text.splitlines() if re.fullmatch(r"\d+ +\d+ +\d+ +\d+", line)]
    assert len(cell_lines) == 6
    assert cell_lines[0].split() == ["1", "2", "6", "5"]
    assert "cells  6\n" in text
    assert "nodes  12\n" in text


def test_svg_one_polyline_per_grid_line():
    mesh = initial_circle_mesh(9)
    text = _render(write_svg, mesh)
    assert text.count("<polyline") == 9 + 9
    assert len(re.findall(r'class="boundary"', text)) == 4
    assert "viewBox=" in text


def test_svg_is_deterministic():
    mesh = initial_circle_mesh(9)
    assert _render(write_svg, mesh) == _render(write_svg, mesh)


def test_svg_rejects_coincident_nodes():
    grid = StructuredGrid(np.zeros((3, 3)), np.zeros((3, 3)))
    with pytest.raises(RenderError):
        _render(write_svg, grid)


def test_svg_3x3_has_six_polylines():
    assert _render(write_svg, new_uniform_grid(3, 3)).count("<polyline") == 6


def test_quad_cells_join_grid_neighbours():
    grid = new_uniform_grid(5, 4)
    cells = list(quad_cells(grid))
    assert len(cells) == 4 * 3
    for cell in cells:
        (i1, j1), (i2, j2), (i3, j3), (i4, j4) = (grid.unflatten_index(n - 1) for n in cell)
        assert (i2, j2) == (i1 + 1, j1)
        assert (i3, j3) == (i1 + 1, j1 + 1)
        assert (i4, j4) == (i1, j1 + 1)


def test_matlab_assigns_every_node_once():
    text = _render(write_matlab, initial_circle_mesh(5))
    assignments = re.findall(r"^x1\((\d+),(\d+)\)=.*;   y1\(\1,\2\)=.*;$", text, flags=re.MULTILINE)
    assert len(set(assignments)) == len(assignments) == 25
    assert "for i=2:m-1" in text and "for j=2:n-1" in text
