import numpy as np
import pytest
from hypothesis import given, strategies as st

from polaract.linalg import (DimensionMismatch, Subspace, intersect, numeric_rank, orthonormalize,
                             principal_angles, project, same_span)


def _random_rows(seed, k, d):
    return np.random.default_rng(seed).standard_normal((k, d))


@given(st.integers(0, 10_000), st.integers(1, 6), st.integers(6, 12))
def test_orthonormalize_gives_orthonormal_basis(seed, k, d):
    S = orthonormalize(_random_rows(seed, k, d))
    assert S.dim == k
    assert np.allclose(S.basis @ S.basis.T, np.eye(k), atol=1e-12)


@given(st.integers(0, 10_000), st.integers(1, 5), st.integers(6, 10))
def test_projection_idempotent_and_residual_orthogonal(seed, k, d):
    S = orthonormalize(_random_rows(seed, k, d))
    v = np.random.default_rng(seed + 1).standard_normal(d)
    pv = project(v, S)
    assert np.allclose(project(pv, S), pv, atol=1e-12)
    assert np.abs(S.basis @ (v - pv)).max() < 1e-12


@given(st.integers(0, 10_000), st.integers(1, 5), st.integers(6, 10))
def test_complement_dimensions(seed, k, d):
    S = orthonormalize(_random_rows(seed, k, d))
    C = S.orthogonal_complement()
    assert C.dim == d - k
    assert np.abs(S.basis @ C.basis.T).max() < 1e-12
    assert (S + C).dim == d


def test_duplicate_vectors_dropped():
    v = np.array([1.0, 2.0, 3.0])
    assert orthonormalize([v, 2 * v, v + 1e-14]).dim == 1


def test_numeric_rank():
    a = np.outer([1.0, 2.0, 3.0], [1.0, 0.0, 1.0])
    assert numeric_rank(a) == 1
    assert numeric_rank(np.eye(4)) == 4
    assert numeric_rank(np.zeros((3, 3))) == 0


def test_intersection_of_coordinate_planes():
    e = np.eye(4)
    A = orthonormalize(e[[0, 1, 2]])
    B = orthonormalize(e[[1, 2, 3]])
    I = intersect(A, B)
    assert I.dim == 2
    assert same_span(I, orthonormalize(e[[1, 2]]))


def test_principal_angles_known_value():
    A = orthonormalize([[1.0, 0.0, 0.0]])
    B = orthonormalize([[1.0, 1.0, 0.0]])
    assert np.isclose(principal_angles(A, B)[0], np.pi / 4)
    assert principal_angles(A, A)[0] < 1e-8


@given(st.integers(0, 10_000))
def test_same_span_invariant_under_change_of_basis(seed):
    rng = np.random.default_rng(seed)
    rows = rng.standard_normal((3, 7))
    mix = rng.standard_normal((3, 3)) + 3 * np.eye(3)
    assert same_span(orthonormalize(rows), orthonormalize(mix @ rows))


def test_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        orthonormalize([np.zeros(3), np.zeros(4)])
    S = Subspace.full(3)
    with pytest.raises(DimensionMismatch):
        project(np.zeros(4), S)
