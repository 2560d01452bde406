"""Group actions on frames: adjugation, the linear action, connecting
operators, unitary equivalence, a canonical transversal for Parseval frames
under the unitary group, and the factorization ``f = P U sigma``.
"""

from dataclasses import dataclass

import numpy as np

from ._validation import check_square
from .exceptions import (
    DegenerateCanonicalForm,
    DimensionMismatch,
    NotConnected,
    NotEquivalent,
    NotInvertible,
    NotParseval,
)
from .frames import (
    Frame,
    act_on_vectors,
    frame_operator,
    is_parseval,
    parsevalize,
    same_index_space,
)
from .numerics import (
    INVERTIBILITY_RTOL,
    RESIDUAL_RTOL,
    is_unitary,
    op_norm,
    sqrt_psd,
)

__all__ = [
    "CANONICAL_RESOLUTION",
    "Factorization",
    "adjugate",
    "act",
    "connecting_operator",
    "unitary_equivalent",
    "canonical_parseval",
    "factorize",
]

# residual norms closer than this count as tied when picking pivots
CANONICAL_RESOLUTION = 1e-9


def _check_invertible(A, name="A"):
    s = np.linalg.svd(A, compute_uv=False)
    if s[-1] <= INVERTIBILITY_RTOL * s[0] or s[-1] == 0.0:
        raise NotInvertible(f"{name} is not invertible (smallest singular value {s[-1]:.3e})")


def adjugate(A, B):
    """Adjugation ``A B A^*``."""
    A = check_square(A, name="A")
    B = check_square(B, name="B")
    if A.shape != B.shape:
        raise DimensionMismatch(f"A is {A.shape}, B is {B.shape}")
    _check_invertible(A)
    return A @ B @ A.conj().T


def act(A, f):
    """The linear action ``(A f)(x) = A[f(x)]``.

    Nodes and weights are unchanged and ``S(A f) = A S(f) A^*``.
    """
    A = check_square(A, name="A")
    if A.shape[0] != f.dim:
        raise DimensionMismatch(f"A is {A.shape}, frame lives in C^{f.dim}")
    _check_invertible(A)
    return act_on_vectors(A, f)


def _pointwise_residual(A, f, g):
    return float(np.max(np.linalg.norm(g.vectors - f.vectors @ A.T, axis=1)))


def connecting_operator(f, g, tol=RESIDUAL_RTOL):
    """The unique invertible ``A`` with ``g(x_i) = A f(x_i)`` for all ``i``.

    The least-squares candidate ``A = (sum_i w_i g_i f_i^*) S(f)^{-1}`` is
    verified pointwise before it is returned.

    Raises
    ------
    NotConnected
        If the pointwise residual exceeds ``tol * max_i ||g(x_i)||`` or the
        candidate is singular.
    NodeMismatch
        If the frames do not share nodes and weights.
    """
    same_index_space(f, g)
    S = frame_operator(f)
    cross = g.vectors.T @ (f.weights[:, None] * f.vectors.conj())
    A = np.linalg.solve(S.T, cross.T).T
    residual = _pointwise_residual(A, f, g)
    if residual > tol * g.sup_norm():
        raise NotConnected(f"no linear map connects the frames (residual {residual:.3e})")
    try:
        _check_invertible(A, "connecting operator")
    except NotInvertible as exc:
        raise NotConnected(str(exc)) from None
    return A


def unitary_equivalent(f, g, tol=None):
    """The unitary ``U`` with ``g = U f`` for Parseval frames ``f`` and ``g``.

    Parameters
    ----------
    f, g : Frame
        Parseval frames on the same nodes and weights.
    tol : float, optional
        Tolerance for the Parseval, unitarity and pointwise checks; defaults
        to the looser of the two frames' Parseval tolerances.

    Raises
    ------
    NotParseval, NotEquivalent, NodeMismatch
    """
    same_index_space(f, g)
    tol = max(f.parseval_tol, g.parseval_tol) if tol is None else tol
    for name, h in (("first", f), ("second", g)):
        if not is_parseval(h, tol):
            raise NotParseval(f"{name} frame is not Parseval within {tol:g}")
    # since S(f) = I the connecting operator reduces to the synthesis of g
    # against the analysis of f
    U = g.vectors.T @ (f.weights[:, None] * f.vectors.conj())
    if not is_unitary(U, tol):
        raise NotEquivalent(
            f"candidate is not unitary (||U U* - I|| = {op_norm(U @ U.conj().T - np.eye(f.dim)):.3e})"
        )
    residual = _pointwise_residual(U, f, g)
    if residual > tol * g.sup_norm():
        raise NotEquivalent(f"pointwise residual {residual:.3e} exceeds tolerance")
    return U


def _canonical_basis(a, resolution):
    """Pivoted Gram-Schmidt on the rows of ``a`` (``a_i = sqrt(w_i) f_i``).

    At each step the row with the largest residual norm is chosen, ties at
    ``resolution`` going to the lowest index. Residual norms depend only on
    the Gram matrix of the rows, so the pivots are unitary invariants and the
    returned orthonormal basis ``Q`` rotates along with the frame.
    """
    n, m = a.shape
    residual = a.copy()
    q = np.zeros((m, m), dtype=complex)
    for k in range(m):
        norms = np.linalg.norm(residual, axis=1)
        top = norms.max()
        if top <= resolution:
            raise DegenerateCanonicalForm("frame vectors do not span the space")
        gap = top - norms
        if np.any((gap > 0.5 * resolution) & (gap < 2.0 * resolution)):
            raise DegenerateCanonicalForm(
                "pivot choice is within the tie-breaking resolution; canonical form is unstable"
            )
        j = int(np.flatnonzero(gap <= resolution)[0])
        v = residual[j] / norms[j]
        q[:, k] = v
        residual = residual - np.outer(residual @ v.conj(), v)
    return q


def canonical_parseval(f, tol=None, resolution=CANONICAL_RESOLUTION):
    """Canonical representative of the unitary orbit of a Parseval frame.

    Returns ``(sigma, u)`` with ``f = act(u, sigma)`` and ``u`` unitary. The
    representative ``sigma`` depends only on the orbit: its weighted matrix
    ``W^{1/2} T_sigma`` has orthonormal columns, and column ``k`` has a real
    positive entry at pivot row ``j_k`` and zeros at ``j_1, ..., j_{k-1}``.

    Raises
    ------
    NotParseval
        If ``f`` is not Parseval within ``tol``.
    DegenerateCanonicalForm
        If a pivot cannot be chosen stably.
    """
    tol = f.parseval_tol if tol is None else tol
    if not is_parseval(f, tol):
        raise NotParseval(f"frame is not Parseval within {tol:g}")
    a = np.sqrt(f.weights)[:, None] * f.vectors
    u = _canonical_basis(a, resolution)
    sigma = act_on_vectors(u.conj().T, f)
    return sigma, u


@dataclass(frozen=True)
class Factorization:
    """``f = positive_part @ unitary_part`` acting on ``transversal``."""

    positive_part: np.ndarray
    unitary_part: np.ndarray
    transversal: Frame

    @property
    def linear_part(self):
        """The invertible operator ``P U`` carrying the transversal to ``f``."""
        return self.positive_part @ self.unitary_part

    def reassemble(self):
        return act_on_vectors(self.linear_part, self.transversal)


def factorize(f, tol=None):
    """Unique factorization ``f = S(f)^{1/2} U sigma``.

    ``sigma`` is the canonical form of the Parsevalized frame and ``U`` the
    unitary carrying ``sigma`` onto it.
    """
    P = sqrt_psd(frame_operator(f))
    sigma, U = canonical_parseval(parsevalize(f), tol=tol)
    return Factorization(P, U, sigma)
