"""Dense linear-algebra kernel shared by the trainers.

Everything here operates on plain float64 numpy arrays. The only solver is
a Cholesky solve: every linear system in this package is symmetric and is
made positive definite by diagonal damping, and a failed factorization is
itself useful information (the damped least-squares trainer reacts to it by
raising its damping factor).
"""

import numpy as np
import scipy.linalg


class NotPositiveDefinite(Exception):
    """Cholesky factorization hit a non-positive pivot."""


def as_vector(x, name="vector"):
    """Coerce to a finite 1-D float64 array of length >= 1."""
    v = np.asarray(x, dtype=np.float64)
    if v.ndim != 1 or v.size == 0:
        raise ValueError(f"{name} must be a nonempty 1-D array, got shape {v.shape}")
    if not np.all(np.isfinite(v)):
        raise ValueError(f"{name} contains non-finite values")
    return v


def as_matrix(x, name="matrix"):
    """Coerce to a finite 2-D float64 array with at least one element."""
    m = np.asarray(x, dtype=np.float64)
    if m.ndim != 2 or m.size == 0:
        raise ValueError(f"{name} must be a nonempty 2-D array, got shape {m.shape}")
    if not np.all(np.isfinite(m)):
        raise ValueError(f"{name} contains non-finite values")
    return m


def dot(a, b):
    """Inner product of two equal-length vectors."""
    a = as_vector(a, "a")
    b = as_vector(b, "b")
    if a.shape != b.shape:
        raise ValueError(f"length mismatch: {a.shape[0]} vs {b.shape[0]}")
    return float(np.dot(a, b))


def matvec(m, v):
    """Matrix-vector product."""
    m = as_matrix(m, "m")
    v = as_vector(v, "v")
    if m.shape[1] != v.shape[0]:
        raise ValueError(f"dimension mismatch: {m.shape} @ {v.shape}")
    return m @ v


def gram(j):
    """J^T J, symmetric by construction.

    The product is formed once and the upper triangle mirrored, so the
    result is exactly symmetric regardless of how the underlying BLAS
    orders its accumulations.
    """
    j = as_matrix(j, "j")
    g = j.T @ j
    return np.triu(g) + np.triu(g, 1).T


def solve_spd(a, b):
    """Solve A x = b for symmetric positive definite A via Cholesky.

    Raises NotPositiveDefinite when a pivot is not positive, which callers
    use as a signal to increase diagonal damping.
    """
    a = as_matrix(a, "a")
    b = as_vector(b, "b")
    if a.shape[0] != a.shape[1]:
        raise ValueError(f"a must be square, got {a.shape}")
    if a.shape[0] != b.shape[0]:
        raise ValueError(f"dimension mismatch: {a.shape} vs {b.shape}")
    if not np.allclose(a, a.T, rtol=0.0, atol=0.0):
        raise ValueError("a must be symmetric")
    try:
        factor = scipy.linalg.cho_factor(a, lower=True, check_finite=False)
    except scipy.linalg.LinAlgError as exc:
        raise NotPositiveDefinite(str(exc)) from exc
    return scipy.linalg.cho_solve(factor, b, check_finite=False)
