"""Dense-matrix substrate: Gram-Schmidt bases, orthogonal projectors,
generalized inverses, Kronecker products, and the centering/averaging
operators used throughout the package.

Matrices are plain 2-D float ``numpy`` arrays. Every public entry point
validates that its inputs are finite; results are returned as fresh arrays
and are never mutated afterwards, so sharing across threads is safe.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

#: Default relative tolerance for rank decisions (dependent-column test).
DEFAULT_TOL = 1e-10


def as_matrix(value, name: str = "matrix") -> np.ndarray:
    """Coerce to a 2-D float array, rejecting NaN/infinity.

    1-D input is treated as a single column.
    """
    arr = np.asarray(value, dtype=float)
    if arr.ndim == 1:
        arr = arr[:, None]
    if arr.ndim != 2:
        raise ValueError(f"{name} must be 2-D, got shape {arr.shape}")
    if arr.size and not np.isfinite(arr).all():
        raise ValueError(f"{name} contains non-finite entries")
    return arr


def as_vector(value, name: str = "vector") -> np.ndarray:
    """Coerce to a 1-D float array, rejecting NaN/infinity."""
    arr = np.asarray(value, dtype=float)
    if arr.ndim == 2 and 1 in arr.shape:
        arr = arr.ravel()
    if arr.ndim != 1:
        raise ValueError(f"{name} must be 1-D, got shape {arr.shape}")
    if arr.size and not np.isfinite(arr).all():
        raise ValueError(f"{name} contains non-finite entries")
    return arr


@dataclass
class OrthonormalBasis:
    """Orthonormal basis of a matrix's column space.

    ``basis`` holds the orthonormal columns; ``rank`` is their count.
    ``source_cols`` records how many columns the source matrix had, and
    ``tolerance`` the relative threshold used to drop dependent columns.
    """

    source_cols: int
    basis: np.ndarray
    rank: int
    tolerance: float

    def project(self, y: np.ndarray) -> np.ndarray:
        """Orthogonal projection of ``y`` onto the spanned subspace."""
        return self.basis @ (self.basis.T @ y)


def gram_schmidt(m, tol: float = DEFAULT_TOL) -> OrthonormalBasis:
    """Orthonormal basis of span(m) by re-orthogonalized Gram-Schmidt.

    Each column is orthogonalized against the accepted basis twice (the
    classical single pass loses orthogonality on ill-conditioned input);
    a column whose residual norm falls at or below ``tol`` times its
    original norm (or ``tol`` itself for a zero column) is dropped as
    linearly dependent.
    """
    m = as_matrix(m)
    if tol <= 0:
        raise ValueError("tol must be positive")
    n, k = m.shape
    q = np.empty((n, k))
    r = 0
    for j in range(k):
        v = m[:, j].copy()
        norm0 = np.linalg.norm(v)
        for _ in range(2):
            if r:
                v -= q[:, :r] @ (q[:, :r].T @ v)
        norm = np.linalg.norm(v)
        if norm <= tol * (norm0 if norm0 > 0 else 1.0):
            continue
        q[:, r] = v / norm
        r += 1
    return OrthonormalBasis(source_cols=k, basis=q[:, :r].copy(), rank=r, tolerance=tol)


def projector(m, tol: float = DEFAULT_TOL) -> np.ndarray:
    """Orthogonal projection matrix onto span(m), as basis @ basis.T."""
    b = gram_schmidt(m, tol).basis
    if b.shape[1] == 0:
        return np.zeros((b.shape[0], b.shape[0]))
    return b @ b.T


def complement_basis(m, ambient_dim: int, tol: float = DEFAULT_TOL) -> np.ndarray:
    """Orthonormal basis of the orthogonal complement of span(m).

    ``m`` may be empty (zero columns or None) to mean the zero subspace,
    in which case the full standard basis is returned. The result has
    ``ambient_dim - rank(m)`` columns.
    """
    if m is None:
        m = np.zeros((ambient_dim, 0))
    m = as_matrix(m) if np.size(m) else np.asarray(m, dtype=float).reshape(ambient_dim, -1)
    if m.shape[0] != ambient_dim:
        raise ValueError(
            f"matrix has {m.shape[0]} rows but ambient dimension is {ambient_dim}"
        )
    rank = gram_schmidt(m, tol).rank
    # Gram-Schmidt walks left to right, so the first `rank` accepted columns
    # span exactly span(m); the remaining ones are an orthonormal basis of
    # its complement.
    full = gram_schmidt(np.hstack([m, np.eye(ambient_dim)]), tol)
    return full.basis[:, rank:].copy()


def g_inverse(m, tol: float = DEFAULT_TOL) -> np.ndarray:
    """Moore-Penrose pseudoinverse of a symmetric nonnegative-definite matrix.

    Intended for Gram matrices (possibly rank-deficient). Satisfies
    ``m @ g_inverse(m) @ m == m`` to working precision. Raises ValueError
    for non-square or asymmetric input.
    """
    m = as_matrix(m)
    rows, cols = m.shape
    if rows != cols:
        raise ValueError(f"g_inverse needs a square matrix, got {rows}x{cols}")
    if rows == 0:
        return np.zeros((0, 0))
    scale = np.abs(m).max()
    if np.abs(m - m.T).max() > tol * (1.0 + scale):
        raise ValueError("g_inverse needs a symmetric matrix")
    b = gram_schmidt(m, tol).basis
    if b.shape[1] == 0:
        return np.zeros_like(m)
    # m = b @ core @ b.T with core invertible on the range, so the
    # pseudoinverse is b @ inv(core) @ b.T.
    core = b.T @ m @ b
    return b @ np.linalg.solve(core, b.T)


def kronecker(a, b) -> np.ndarray:
    """Kronecker product: each entry of ``a`` replaced by that entry times ``b``."""
    return np.kron(as_matrix(a), as_matrix(b))


def ones_column(m: int) -> np.ndarray:
    """Column vector of ``m`` ones."""
    if m < 1:
        raise ValueError("m must be >= 1")
    return np.ones((m, 1))


def averaging_matrix(m: int) -> np.ndarray:
    """m x m operator replacing every entry of a vector by the mean."""
    if m < 1:
        raise ValueError("m must be >= 1")
    return np.full((m, m), 1.0 / m)


def centering_matrix(m: int) -> np.ndarray:
    """m x m operator subtracting the mean from every entry of a vector."""
    return np.eye(m) - averaging_matrix(m)


def sym_sqrt_pd(d) -> np.ndarray:
    """Symmetric positive-definite square root, via eigendecomposition.

    Eigenvalues are floored at zero before taking square roots, so slightly
    indefinite input (rounding noise) is tolerated.
    """
    d = as_matrix(d)
    if d.shape[0] != d.shape[1]:
        raise ValueError("square matrix required")
    w, v = np.linalg.eigh(0.5 * (d + d.T))
    return (v * np.sqrt(np.clip(w, 0.0, None))) @ v.T
