import numpy as np
import pytest

from elliptic_mesh.errors import SingularMapError, StencilError
from elliptic_mesh.fd_control import (
    ControlField, control_field, control_vectors, d_eta, d_etaeta, d_xi, d_xieta, d_xixi,
    jacobian_T, metric_coefficients,
)
from elliptic_mesh.grid import GridSpacing, StructuredGrid, new_uniform_grid
from elliptic_mesh.stretching import BoundaryCluster, ClusterSpec, build_parameter_grid, cluster_boundary

# (operator, exact derivative of sin(xi) cos(eta))
OPERATORS = [
    (d_xi, lambda a, b: np.cos(a) * np.cos(b)),
    (d_eta, lambda a, b: -np.sin(a) * np.sin(b)),
    (d_xixi, lambda a, b: -np.sin(a) * np.cos(b)),
    (d_etaeta, lambda a, b: -np.sin(a) * np.cos(b)),
    (d_xieta, lambda a, b: -np.cos(a) * np.sin(b)),
]


def _max_error(operator, exact, n, coarse_n):
    """Max error over the interior nodes of the coarse grid, sampled on an n-node grid"""
    h = 1.0 / (n - 1)
    xi = np.arange(n) * h
    field = np.sin(xi)[:, None] * np.cos(xi)[None, :]
    stride = (n - 1) // (coarse_n - 1)
    spacing = GridSpacing(h, h)
    errors = []
    for i in range(stride, n - 1, stride):
        for j in range(stride, n - 1, stride):
            errors.append(abs(operator(field, i, j, spacing) - exact(xi[i], xi[j])))
    return max(errors)


@pytest.mark.parametrize("operator, exact", OPERATORS)
@pytest.mark.parametrize("n", [9, 17])
def test_central_differences_are_second_order(operator, exact, n):
    coarse = _max_error(operator, exact, n, n)
    fine = _max_error(operator, exact, 2 * n - 1, n)
    assert 3.6 <= coarse / fine <= 4.4


@pytest.mark.parametrize("i, j", [(0, 1), (1, 0), (2, 1), (1, 2)])
def test_stencil_must_stay_inside(i, j):
    field = np.zeros((3, 3))
    with pytest.raises(StencilError):
        d_xi(field, i, j, GridSpacing(0.5, 0.5))


def test_metric_coefficients_of_identity():
    grid = new_uniform_grid(5, 5)
    assert metric_coefficients(grid, 2, 2) == (1.0, 1.0, 0.0)


def test_metric_identity_on_random_smooth_grids():
    rng = np.random.default_rng(20)
    base = new_uniform_grid(12, 10)
    spacing = base.spacing()
    for _ in range(20):
        a, b, c, d = rng.uniform(-0.2, 0.2, size=4)
        x = base.x + a * np.sin(np.pi * base.y) + c * base.x * base.y
        y = base.y + b * np.sin(np.pi * base.x) + d * base.x ** 2
        grid = StructuredGrid(x, y)
        for j in range(1, grid.ny - 1):
            for i in range(1, grid.nx - 1):
                g11, g22, g12 = metric_coefficients(grid, i, j)
                det = (d_xi(x, i, j, spacing) * d_eta(y, i, j, spacing)
                       - d_xi(y, i, j, spacing) * d_eta(x, i, j, spacing))
                assert g11 * g22 - g12 * g12 == pytest.approx(det * det, rel=1e-12)


def test_jacobian_of_uniform_parameter_grid_is_identity():
    jac = jacobian_T(new_uniform_grid(9, 9), 4, 4)
    assert (jac.s_xi, jac.s_eta, jac.t_xi, jac.t_eta) == (1.0, 0.0, 0.0, 1.0)
    assert jac.det == 1.0


def test_uniform_parameter_grid_gives_zero_control():
    field = control_field(new_uniform_grid(33, 33))
    assert field.is_zero()
    assert field.shape == (33, 33)


def test_control_vectors_of_separable_stretch():
    # s = xi^2 is differenced exactly: s_xi = 2 xi, s_xixi = 2
    base = new_uniform_grid(9, 9)
    param = StructuredGrid(base.x ** 2, base.y)
    sample = control_vectors(param, 4, 3)
    assert sample.p11 == pytest.approx((-2.0 / (2 * 0.5), 0.0))
    assert sample.p22 == pytest.approx((0.0, 0.0))
    assert sample.p12 == pytest.approx((0.0, 0.0))


def test_control_field_matches_pointwise_vectors():
    param = build_parameter_grid(new_uniform_grid(9, 9), [
        ClusterSpec("X", BoundaryCluster(0.5)),
        ClusterSpec("Y", BoundaryCluster(0.3)),
    ])
    field = control_field(param)
    for i, j in [(1, 1), (4, 2), (7, 7)]:
        expected = control_vectors(param, i, j)
        got = field.sample(i, j)
        assert got.p11 == pytest.approx(expected.p11)
        assert got.p22 == pytest.approx(expected.p22)
        assert got.p12 == pytest.approx(expected.p12)
    # boundary ring stays zero
    assert field.sample(0, 4) == ((0.0, 0.0), (0.0, 0.0), (0.0, 0.0))
    assert field.max_abs() > 0


def test_singular_parameter_grid():
    base = new_uniform_grid(5, 5)
    param = StructuredGrid(np.zeros((5, 5)), base.y)
    with pytest.raises(SingularMapError) as excinfo:
        control_field(param)
    assert (excinfo.value.i, excinfo.value.j) == (1, 1)


def test_zero_control_field():
    field = ControlField.zeros(4, 3)
    assert field.shape == (4, 3)
    assert field.is_zero()
    assert field.max_abs() == 0.0


def test_mixed_difference_of_product_is_exact():
    grid = new_uniform_grid(5, 5)
    field = grid.x * grid.y
    spacing = grid.spacing()
    for i, j in [(1, 1), (2, 3), (3, 2)]:
        assert d_xieta(field, i, j, spacing) == 1.0


def test_second_differences_vanish_on_bilinear_fields():
    grid = new_uniform_grid(9, 7)
    field = 0.7 - 1.3 * grid.x + 2.1 * grid.y + 0.4 * grid.x * grid.y
    spacing = grid.spacing()
    for i in range(1, 8):
        for j in range(1, 6):
            assert d_xixi(field, i, j, spacing) == pytest.approx(0.0, abs=1e-12)
            assert d_etaeta(field, i, j, spacing) == pytest.approx(0.0, abs=1e-12)


@pytest.mark.parametrize("x_of, y_of, expected", [
    (lambda xi, eta: 2 * xi, lambda xi, eta: 3 * eta, (4.0, 9.0, 0.0)),
    (lambda xi, eta: xi + eta, lambda xi, eta: eta, (1.0, 2.0, 1.0)),
])
def test_metric_coefficients_of_linear_maps(x_of, y_of, expected):
    base = new_uniform_grid(5, 5)
    grid = StructuredGrid(x_of(base.x, base.y), y_of(base.x, base.y))
    assert metric_coefficients(grid, 2, 2) == pytest.approx(expected)


def test_jacobian_of_scaled_parameter_grid():
    base = new_uniform_grid(9, 9)
    jac = jacobian_T(StructuredGrid(2.0 * base.x, base.y), 4, 4)
    assert jac.s_xi == pytest.approx(2.0)
    assert jac.det == pytest.approx(2.0)


def test_jacobian_of_collapsed_parameter_grid_is_singular():
    base = new_uniform_grid(5, 5)
    with pytest.raises(SingularMapError) as excinfo:
        jacobian_T(StructuredGrid(np.zeros((5, 5)), base.y), 2, 3)
    assert (excinfo.value.i, excinfo.value.j) == (2, 3)


def test_affine_parameter_grid_gives_zero_control():
    base = new_uniform_grid(9, 9)
    param = StructuredGrid(0.2 + 0.5 * base.x + 0.1 * base.y, 0.3 * base.x + 0.8 * base.y)
    for i, j in [(1, 1), (4, 4), (7, 2)]:
        sample = control_vectors(param, i, j)
        for vector in sample:
            assert vector == pytest.approx((0.0, 0.0), abs=1e-10)
    assert control_field(param).max_abs() < 1e-10


def test_p22_uses_second_eta_derivative_of_t():
    # t depends on eta alone, so t_xieta = 0 while t_etaeta does not vanish
    param = cluster_boundary(new_uniform_grid(9, 9), "Y", BoundaryCluster(0.5))
    sample = control_vectors(param, 4, 1)
    jac = jacobian_T(param, 4, 1)
    t_etaeta = d_etaeta(param.y, 4, 1, param.spacing())
    assert sample.p22[0] == pytest.approx(0.0, abs=1e-12)
    assert sample.p22[1] != 0.0
    assert sample.p22[1] == pytest.approx(-t_etaeta / jac.t_eta)
    assert sample.p11 == pytest.approx((0.0, 0.0), abs=1e-12)
