"""Shared mesh builders for the test suite"""
from elliptic_mesh.geometry import CircleBoundary, apply_boundary, square_boundary, tfi_fill
from elliptic_mesh.grid import new_uniform_grid


def initial_circle_mesh(n=33, radius=1.0):
    return tfi_fill(apply_boundary(new_uniform_grid(n, n), CircleBoundary(radius)))


def initial_square_mesh(n):
    return tfi_fill(apply_boundary(new_uniform_grid(n, n), square_boundary(n, n)))
