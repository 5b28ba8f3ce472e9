"""Dense complex linear algebra for Hermitian positive-definite systems.

Every matrix inverted here has the form ``sigma2 * I + G`` with ``G`` a Gram
matrix, so a Cholesky factorization is always the right tool. Vectors are
plain 1-D arrays; each function states whether it reads a vector as the
row ``rho`` or the column ``rho^H``.
"""

from __future__ import annotations

import numpy as np
from scipy.linalg import solve_triangular

from .errors import (
    DegenerateDenominator,
    DimensionMismatch,
    NonFiniteInput,
    NotHermitian,
    NotPositiveDefinite,
)

HERMITIAN_TOL = 1e-10
DENOMINATOR_TOL = 1e-14


def as_matrix(m, name: str = "matrix") -> np.ndarray:
    """Return ``m`` as a finite 2-D complex128 array."""
    arr = np.asarray(m, dtype=np.complex128)
    if arr.ndim != 2:
        raise DimensionMismatch(f"{name} must be 2-D, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise NonFiniteInput(f"{name} has non-finite entries")
    return arr


def as_vector(v, name: str = "vector") -> np.ndarray:
    """Return ``v`` as a finite 1-D complex128 array."""
    arr = np.asarray(v, dtype=np.complex128)
    if arr.ndim != 1:
        raise DimensionMismatch(f"{name} must be 1-D, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise NonFiniteInput(f"{name} has non-finite entries")
    return arr


def hermitian_part(m: np.ndarray) -> np.ndarray:
    return 0.5 * (m + m.conj().T)


def _check_hermitian(m: np.ndarray) -> None:
    if m.shape[0] != m.shape[1]:
        raise DimensionMismatch(f"matrix must be square, got shape {m.shape}")
    if m.size and np.max(np.abs(m - m.conj().T)) > HERMITIAN_TOL:
        raise NotHermitian(
            f"max |M - M^H| = {np.max(np.abs(m - m.conj().T)):.3e} exceeds {HERMITIAN_TOL}"
        )


def cholesky(m) -> np.ndarray:
    """Lower-triangular ``L`` with ``L @ L^H == m``.

    Raises
    ------
    NotHermitian
        If ``m`` departs from its conjugate transpose by more than 1e-10.
    NotPositiveDefinite
        If a pivot is not strictly positive.
    """
    m = as_matrix(m)
    _check_hermitian(m)
    if m.shape[0] == 0:
        return m.copy()
    try:
        low = np.linalg.cholesky(hermitian_part(m))
    except np.linalg.LinAlgError as exc:
        raise NotPositiveDefinite(str(exc)) from exc
    pivots = np.diag(low).real
    if not np.all(pivots > 0.0):
        raise NotPositiveDefinite(f"nonpositive pivot {pivots.min():.3e}")
    return low


def hermitian_solve(m, b) -> np.ndarray:
    """Solve ``m @ x = b`` for Hermitian positive-definite ``m``.

    ``b`` may be 1-D or 2-D; the result has the same shape.
    """
    low = cholesky(m)
    b = np.asarray(b, dtype=np.complex128)
    if b.ndim not in (1, 2):
        raise DimensionMismatch(f"right-hand side must be 1-D or 2-D, got {b.ndim}-D")
    if b.shape[0] != low.shape[0]:
        raise DimensionMismatch(
            f"matrix is {low.shape[0]}x{low.shape[0]} but right-hand side has {b.shape[0]} rows"
        )
    if not np.all(np.isfinite(b)):
        raise NonFiniteInput("right-hand side has non-finite entries")
    if low.shape[0] == 0:
        return b.copy()
    z = solve_triangular(low, b, lower=True)
    return solve_triangular(low.conj().T, z, lower=False)


def hermitian_inverse(m) -> np.ndarray:
    """Explicit inverse of a Hermitian positive-definite matrix.

    The result is symmetrized so it is exactly Hermitian. A 0x0 input
    returns a 0x0 matrix.
    """
    m = as_matrix(m)
    n = m.shape[0]
    inv = hermitian_solve(m, np.eye(n, dtype=np.complex128))
    return hermitian_part(inv)


def quadratic_form(a: np.ndarray, rho: np.ndarray) -> complex:
    """``rho @ a @ rho^H`` with ``rho`` read as a row vector."""
    return complex(rho @ (a @ rho.conj())) if rho.size else 0j


def rank_one_inverse_update(a, rho) -> np.ndarray:
    """Update ``a = M^{-1}`` to ``(M + rho^H rho)^{-1}`` via Woodbury.

    ``rho`` is the row vector of the rank-one term. Computes::

        a1 = a - (a rho^H)(rho a) / (1 + rho a rho^H)

    and returns the Hermitian part of ``a1``.

    Raises
    ------
    DimensionMismatch
        If ``a`` is not square or ``rho`` has the wrong length.
    DegenerateDenominator
        If ``|1 + rho a rho^H| < 1e-14``.
    """
    a = as_matrix(a, "A")
    rho = as_vector(rho, "rho")
    if a.shape[0] != a.shape[1]:
        raise DimensionMismatch(f"A must be square, got shape {a.shape}")
    if rho.shape[0] != a.shape[0]:
        raise DimensionMismatch(f"rho has length {rho.shape[0]}, A is {a.shape[0]}x{a.shape[0]}")
    if a.shape[0] == 0:
        return a.copy()
    col = a @ rho.conj()  # a rho^H
    denom = 1.0 + complex(rho @ col)
    if abs(denom) < DENOMINATOR_TOL:
        raise DegenerateDenominator(f"|1 + rho A rho^H| = {abs(denom):.3e}")
    a1 = a - np.outer(col, rho @ a) / denom
    return hermitian_part(a1)
