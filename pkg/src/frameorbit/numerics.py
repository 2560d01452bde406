"""Dense complex linear algebra: SVD, Hermitian eigensolver, square roots,
polar decomposition and operator classification.

Matrices are plain complex ``ndarray`` objects. Operator "tags" are not
stored on the array; :func:`classify` computes them on demand.
"""

import enum
from typing import NamedTuple

import numpy as np

from ._validation import check_complex_array, check_square
from .exceptions import (
    ConvergenceFailure,
    NotHermitian,
    NotInvertible,
    NotPositive,
)

__all__ = [
    "RESIDUAL_RTOL",
    "INVERTIBILITY_RTOL",
    "UNITARY_TOL",
    "Tag",
    "SvdResult",
    "svd",
    "eigh_psd",
    "sqrt_psd",
    "inv_sqrt_psd",
    "polar",
    "classify",
    "op_norm",
    "hermitize",
    "is_unitary",
]

# residual checks are relative: RESIDUAL_RTOL * max(1, ||input||)
RESIDUAL_RTOL = 1e-10
# singular/eigen values at or below INVERTIBILITY_RTOL * largest count as zero
INVERTIBILITY_RTOL = 1e-12
UNITARY_TOL = 1e-10


class Tag(enum.Enum):
    INVERTIBLE = "Invertible"
    POSITIVE = "Positive"
    UNITARY = "Unitary"
    HERMITIAN = "Hermitian"

    def __repr__(self):
        return f"Tag.{self.name}"


class SvdResult(NamedTuple):
    """Full singular value decomposition ``M = left @ Sigma~ @ right^*``.

    ``Sigma~`` is the ``(rows, cols)`` matrix with ``singular_values`` on its
    diagonal; see :meth:`sigma`.
    """

    left: np.ndarray
    singular_values: np.ndarray
    right: np.ndarray

    def sigma(self):
        n, m = self.left.shape[0], self.right.shape[0]
        out = np.zeros((n, m), dtype=float)
        k = self.singular_values.shape[0]
        out[np.arange(k), np.arange(k)] = self.singular_values
        return out

    def reconstruct(self):
        return self.left @ self.sigma() @ self.right.conj().T


def op_norm(a):
    """Spectral norm (largest singular value)."""
    a = np.asarray(a)
    if a.size == 0:
        return 0.0
    return float(np.linalg.norm(a, 2))


def hermitize(a):
    return 0.5 * (a + a.conj().T)


def svd(M):
    """Full SVD of a complex matrix.

    Parameters
    ----------
    M : (n, m) array_like

    Returns
    -------
    SvdResult
        ``left`` is ``(n, n)`` unitary, ``right`` is ``(m, m)`` unitary and
        ``singular_values`` are sorted nonincreasing.

    Raises
    ------
    NonFiniteInput
        If ``M`` contains NaN or Inf.
    ConvergenceFailure
        If LAPACK fails to converge.
    """
    M = check_complex_array(M, ndim=2, name="M")
    if min(M.shape) < 1:
        raise ValueError("M must have at least one row and one column")
    try:
        u, s, vh = np.linalg.svd(M, full_matrices=True)
    except np.linalg.LinAlgError as exc:
        raise ConvergenceFailure(f"SVD did not converge: {exc}") from None
    return SvdResult(u, s, vh.conj().T)


def eigh_psd(A, tol=RESIDUAL_RTOL):
    """Eigendecomposition of a Hermitian matrix.

    Returns ``(eigenvalues, Q)`` with eigenvalues nondecreasing and
    ``A = Q diag(eigenvalues) Q^*``.
    """
    A = check_square(A, name="A")
    scale = max(1.0, op_norm(A))
    if op_norm(A - A.conj().T) > tol * scale:
        raise NotHermitian(f"matrix is not Hermitian within {tol:g} (relative)")
    try:
        w, q = np.linalg.eigh(hermitize(A))
    except np.linalg.LinAlgError as exc:
        raise ConvergenceFailure(f"eigh did not converge: {exc}") from None
    return w, q


def _positive_spectrum(A, what):
    w, q = eigh_psd(A)
    top = max(abs(w[-1]), abs(w[0]))
    if w[0] <= INVERTIBILITY_RTOL * top or w[0] <= 0.0:
        raise NotPositive(f"{what}: smallest eigenvalue {w[0]:.3e} is not positive")
    return w, q


def sqrt_psd(A):
    """Principal square root of a positive invertible matrix."""
    w, q = _positive_spectrum(A, "sqrt_psd")
    return hermitize((q * np.sqrt(w)) @ q.conj().T)


def inv_sqrt_psd(A):
    """Inverse of the principal square root of a positive invertible matrix."""
    w, q = _positive_spectrum(A, "inv_sqrt_psd")
    return hermitize((q / np.sqrt(w)) @ q.conj().T)


def polar(A):
    """Left polar decomposition ``A = P @ U``.

    ``P = (A A^*)^{1/2}`` is positive and ``U`` is unitary. Both factors are
    assembled from a single SVD ``A = X S Y^*`` as ``P = X S X^*`` and
    ``U = X Y^*``, which keeps ``U`` unitary to working precision even for
    badly conditioned ``A``.

    Raises
    ------
    NotInvertible
        If the smallest singular value is at or below the invertibility
        tolerance.
    """
    A = check_square(A, name="A")
    res = svd(A)
    s = res.singular_values
    if s[-1] <= INVERTIBILITY_RTOL * s[0] or s[-1] == 0.0:
        raise NotInvertible(f"smallest singular value {s[-1]:.3e} is too small")
    x, y = res.left, res.right
    P = hermitize((x * s) @ x.conj().T)
    U = x @ y.conj().T
    return P, U


def is_unitary(A, tol=UNITARY_TOL):
    A = np.asarray(A)
    return op_norm(A @ A.conj().T - np.eye(A.shape[0])) <= tol


def classify(A, tol=None):
    """Return the set of tags that ``A`` satisfies.

    Parameters
    ----------
    A : (m, m) array_like
    tol : float, optional
        Overrides every tolerance. By default the Hermitian check is relative
        at ``RESIDUAL_RTOL``, invertibility uses ``INVERTIBILITY_RTOL`` times
        the largest singular value and unitarity uses ``UNITARY_TOL``.

    Returns
    -------
    frozenset of Tag
    """
    A = check_square(A, name="A")
    herm_tol = RESIDUAL_RTOL if tol is None else tol
    inv_tol = INVERTIBILITY_RTOL if tol is None else tol
    unit_tol = UNITARY_TOL if tol is None else tol

    tags = set()
    s = np.linalg.svd(A, compute_uv=False)
    invertible = s[-1] > inv_tol * s[0] and s[-1] > 0.0
    if invertible:
        tags.add(Tag.INVERTIBLE)
    if invertible and is_unitary(A, unit_tol):
        tags.add(Tag.UNITARY)
    if op_norm(A - A.conj().T) <= herm_tol * max(1.0, s[0]):
        tags.add(Tag.HERMITIAN)
        w = np.linalg.eigvalsh(hermitize(A))
        if invertible and w[0] > inv_tol * max(abs(w[0]), abs(w[-1])) and w[0] > 0.0:
            tags.add(Tag.POSITIVE)
    return frozenset(tags)
