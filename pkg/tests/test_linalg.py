import numpy as np
import pytest

from wsmeans.linalg import (
    as_matrix,
    as_vector,
    averaging_matrix,
    centering_matrix,
    complement_basis,
    g_inverse,
    gram_schmidt,
    kronecker,
    ones_column,
    projector,
    sym_sqrt_pd,
)


def test_as_matrix_promotes_vectors_and_rejects_nan():
    m = as_matrix([1.0, 2.0, 3.0])
    assert m.shape == (3, 1)
    with pytest.raises(ValueError):
        as_matrix([[1.0, np.nan]])
    with pytest.raises(ValueError):
        as_vector([np.inf, 0.0])


def test_gram_schmidt_orthonormal_and_rank(rng):
    for _ in range(50):
        n = rng.integers(3, 10)
        k = rng.integers(1, n + 1)
        m = rng.standard_normal((n, k))
        basis = gram_schmidt(m)
        assert basis.rank == np.linalg.matrix_rank(m)
        q = basis.basis
        np.testing.assert_allclose(q.T @ q, np.eye(basis.rank), atol=1e-12)


def test_gram_schmidt_drops_dependent_columns(rng):
    m = rng.standard_normal((6, 2))
    stacked = np.hstack([m, m @ rng.standard_normal((2, 3))])
    basis = gram_schmidt(stacked)
    assert basis.rank == 2
    assert basis.source_cols == 5


def test_projector_matches_lstsq_fit(rng):
    # P_M y must equal the fitted values of regressing y on M.
    for _ in range(25):
        n = rng.integers(4, 12)
        k = rng.integers(1, n)
        m = rng.standard_normal((n, k))
        y = rng.standard_normal(n)
        coef, *_ = np.linalg.lstsq(m, y, rcond=None)
        np.testing.assert_allclose(projector(m) @ y, m @ coef, atol=1e-10)


def test_projector_idempotent_symmetric(rng):
    m = rng.standard_normal((8, 3))
    p = projector(m)
    np.testing.assert_allclose(p, p.T, atol=1e-12)
    np.testing.assert_allclose(p @ p, p, atol=1e-12)


def test_complement_basis_spans_the_rest(rng):
    for _ in range(25):
        n = int(rng.integers(2, 9))
        k = int(rng.integers(0, n))
        m = rng.standard_normal((n, k)) if k else np.zeros((n, 0))
        comp = complement_basis(m, n)
        assert comp.shape == (n, n - np.linalg.matrix_rank(m) if k else n)
        if k:
            np.testing.assert_allclose(m.T @ comp, 0.0, atol=1e-10)
        combined = np.hstack([m, comp])
        assert np.linalg.matrix_rank(combined) == n


def test_g_inverse_is_moore_penrose_on_gram_matrices(rng):
    for _ in range(25):
        n = rng.integers(2, 8)
        k = rng.integers(1, n + 1)
        x = rng.standard_normal((int(n), int(k)))
        gram = x.T @ x
        ginv = g_inverse(gram)
        np.testing.assert_allclose(gram @ ginv @ gram, gram, atol=1e-9)
        np.testing.assert_allclose(ginv, np.linalg.pinv(gram), atol=1e-8)


def test_g_inverse_rank_deficient(rng):
    x = rng.standard_normal((6, 2))
    gram = np.hstack([x, x]).T @ np.hstack([x, x])  # rank 2 of size 4
    ginv = g_inverse(gram)
    np.testing.assert_allclose(gram @ ginv @ gram, gram, atol=1e-9)


def test_g_inverse_rejects_asymmetric():
    with pytest.raises(ValueError):
        g_inverse(np.array([[1.0, 2.0], [0.0, 1.0]]))


def test_kronecker_and_centering_shapes():
    s = centering_matrix(3)
    np.testing.assert_allclose(s @ ones_column(3), 0.0, atol=1e-15)
    np.testing.assert_allclose(s @ s, s, atol=1e-15)
    k = kronecker(np.eye(2), ones_column(3))
    assert k.shape == (6, 2)
    np.testing.assert_allclose(averaging_matrix(4).sum(axis=1), 1.0)


def test_sym_sqrt_pd_squares_back(rng):
    for _ in range(20):
        r = rng.standard_normal((5, 5))
        d = r @ r.T + 0.5 * np.eye(5)
        root = sym_sqrt_pd(d)
        np.testing.assert_allclose(root @ root, d, atol=1e-10)
        np.testing.assert_allclose(root, root.T, atol=1e-12)
