"""Frames as data, and the frame operator calculus.

A frame is stored as an ``(n, m)`` complex array ``vectors`` whose row ``i``
is the frame vector ``f(x_i)`` in ``C^m``, together with positive quadrature
weights ``w_i``. Integrals over the index space become weighted sums
``sum_i w_i (...)``, and a finite frame is the special case ``w_i = 1``.

Two concrete types are provided:

* :class:`FrameMatrix` - a finite frame given by its analysis matrix ``T``
  whose rows are ``f_j^*``.
* :class:`SampledFrame` - a continuous frame sampled at quadrature nodes.
"""

from dataclasses import dataclass

import numpy as np

from ._validation import (
    check_complex_array,
    check_real_array,
    check_vector,
    freeze,
)
from .exceptions import DimensionMismatch, InvalidArgument, NodeMismatch, NotAFrame
from .numerics import (
    INVERTIBILITY_RTOL,
    RESIDUAL_RTOL,
    hermitize,
    op_norm,
)

__all__ = [
    "PARSEVAL_TOL_FINITE",
    "PARSEVAL_TOL_SAMPLED",
    "Frame",
    "FrameMatrix",
    "SampledFrame",
    "CoefficientVector",
    "FrameAnalysisReport",
    "frame_operator",
    "analysis",
    "synthesis",
    "frame_bounds",
    "bounds_from_operator",
    "is_parseval",
    "canonical_dual",
    "reconstruct",
    "parsevalize",
    "act_on_vectors",
    "same_index_space",
]

PARSEVAL_TOL_FINITE = 1e-10
PARSEVAL_TOL_SAMPLED = 1e-8


def _weighted_gram(vectors, weights):
    # sum_i w_i f_i f_i^*
    return hermitize(vectors.T @ (weights[:, None] * vectors.conj()))


def _check_frame_condition(S):
    w = np.linalg.eigvalsh(S)
    if w[-1] <= 0.0 or w[0] <= INVERTIBILITY_RTOL * w[-1]:
        raise NotAFrame(
            f"frame operator is singular (smallest eigenvalue {w[0]:.3e}, largest {w[-1]:.3e})"
        )


class Frame:
    """Common behaviour of finite and sampled frames.

    Instances are immutable; their arrays are read-only.
    """

    __slots__ = ("_vectors", "_weights", "_nodes")

    parseval_tol = PARSEVAL_TOL_FINITE

    def __init__(self, vectors, weights, nodes):
        vectors = check_complex_array(vectors, ndim=2, name="vectors")
        n, m = vectors.shape
        if m < 1:
            raise InvalidArgument("frame dimension must be at least 1")
        weights = check_real_array(weights, ndim=1, name="weights")
        nodes = check_real_array(nodes, name="nodes")
        if weights.shape[0] != n or nodes.shape[0] != n:
            raise DimensionMismatch(
                f"nodes ({nodes.shape[0]}), weights ({weights.shape[0]}) and "
                f"vectors ({n}) must have equal length"
            )
        if np.any(weights <= 0.0):
            raise InvalidArgument("weights must be strictly positive")
        if n < m:
            raise NotAFrame(f"{n} vectors cannot span C^{m}")
        _check_frame_condition(_weighted_gram(vectors, weights))
        self._vectors = freeze(vectors)
        self._weights = freeze(weights)
        self._nodes = freeze(nodes)

    @property
    def vectors(self):
        """``(n, m)`` array, row ``i`` is ``f(x_i)``."""
        return self._vectors

    @property
    def weights(self):
        return self._weights

    @property
    def nodes(self):
        return self._nodes

    @property
    def dim(self):
        return self._vectors.shape[1]

    @property
    def count(self):
        return self._vectors.shape[0]

    @property
    def matrix(self):
        """Analysis matrix ``T`` whose rows are ``f(x_i)^*``."""
        return self._vectors.conj()

    @property
    def weighted_matrix(self):
        """``W^{1/2} T``; its Gram matrix ``M^* M`` is the frame operator."""
        return np.sqrt(self._weights)[:, None] * self._vectors.conj()

    def with_vectors(self, vectors):
        """A frame of the same kind on the same index space."""
        raise NotImplementedError

    def j1_norm(self):
        """``sum_i w_i ||f(x_i)||``."""
        return float(np.sum(self._weights * np.linalg.norm(self._vectors, axis=1)))

    def sup_norm(self):
        """``max_i ||f(x_i)||``."""
        return float(np.max(np.linalg.norm(self._vectors, axis=1)))

    def __len__(self):
        return self.count

    def __repr__(self):
        return f"{type(self).__name__}(dim={self.dim}, count={self.count})"


class FrameMatrix(Frame):
    """Finite frame ``{f_1, ..., f_n}`` in ``C^m`` with counting measure.

    Parameters
    ----------
    matrix : (n, m) array_like
        Analysis matrix; row ``j`` is the conjugate transpose of ``f_j``.
    """

    __slots__ = ()

    def __init__(self, matrix):
        matrix = check_complex_array(matrix, ndim=2, name="matrix")
        n = matrix.shape[0]
        super().__init__(matrix.conj(), np.ones(n), np.arange(n, dtype=float))

    @classmethod
    def from_vectors(cls, vectors):
        """Build from the frame vectors themselves (row ``j`` is ``f_j``)."""
        vectors = check_complex_array(vectors, ndim=2, name="vectors")
        return cls(vectors.conj())

    def with_vectors(self, vectors):
        return FrameMatrix.from_vectors(vectors)


class SampledFrame(Frame):
    """A frame ``f: X -> C^m`` sampled on a weighted node set.

    Parameters
    ----------
    nodes : array_like
        Either a strictly increasing 1-d array of index points, or an
        ``(n, k)`` array of distinct points for product index spaces.
    weights : (n,) array_like
        Positive quadrature weights.
    vectors : (n, m) array_like
        Row ``i`` is ``f(x_i)``.
    """

    __slots__ = ()

    parseval_tol = PARSEVAL_TOL_SAMPLED

    def __init__(self, nodes, weights, vectors):
        nodes_arr = check_real_array(nodes, name="nodes")
        if nodes_arr.ndim == 1:
            if np.any(np.diff(nodes_arr) <= 0.0):
                raise InvalidArgument("nodes must be strictly increasing")
        elif nodes_arr.ndim == 2:
            if np.unique(nodes_arr, axis=0).shape[0] != nodes_arr.shape[0]:
                raise InvalidArgument("product nodes must be distinct")
        else:
            raise DimensionMismatch("nodes must be a 1-d or 2-d array")
        super().__init__(vectors, weights, nodes_arr)

    def with_vectors(self, vectors):
        return SampledFrame(self._nodes, self._weights, vectors)


@dataclass(frozen=True)
class CoefficientVector:
    """Analysis coefficients ``<phi, f(x_i)>`` with the frame's weights."""

    values: np.ndarray
    weights: np.ndarray

    def __len__(self):
        return self.values.shape[0]

    def inner(self, other):
        """Weighted inner product ``sum_i w_i a_i conj(b_i)``."""
        b = other.values if isinstance(other, CoefficientVector) else np.asarray(other)
        return complex(np.sum(self.weights * self.values * b.conj()))


@dataclass(frozen=True)
class FrameAnalysisReport:
    lower_bound: float
    upper_bound: float
    singular_values: np.ndarray
    is_parseval: bool
    condition: float

    def as_dict(self):
        return {
            "bounds": {"A": self.lower_bound, "B": self.upper_bound},
            "singular_values": [float(s) for s in self.singular_values],
            "is_parseval": bool(self.is_parseval),
            "condition": self.condition,
        }


def frame_operator(f):
    """``S = sum_i w_i f(x_i) f(x_i)^*`` as an ``(m, m)`` Hermitian matrix.

    Raises
    ------
    NotAFrame
        If ``S`` is numerically singular.
    """
    S = _weighted_gram(f.vectors, f.weights)
    _check_frame_condition(S)
    return S


def analysis(f, phi):
    """Coefficients ``<phi, f(x_i)> = f(x_i)^* phi``."""
    phi = check_vector(phi, f.dim)
    return CoefficientVector(f.matrix @ phi, f.weights)


def synthesis(f, c):
    """``sum_i w_i c_i f(x_i)``."""
    values = c.values if isinstance(c, CoefficientVector) else c
    values = check_complex_array(values, ndim=1, name="coefficients")
    if values.shape[0] != f.count:
        raise DimensionMismatch(
            f"coefficients: expected length {f.count}, got {values.shape[0]}"
        )
    return f.vectors.T @ (f.weights * values)


def frame_bounds(f, tol=None):
    """Optimal frame bounds from the singular values of ``W^{1/2} T``.

    ``A = s_min^2`` and ``B = s_max^2``. :func:`bounds_from_operator` gives
    the same numbers from ``S`` directly.

    Parameters
    ----------
    f : Frame
    tol : float, optional
        Parseval tolerance; defaults to the frame type's.
    """
    tol = f.parseval_tol if tol is None else tol
    s = np.linalg.svd(f.weighted_matrix, compute_uv=False)
    if s[-1] <= INVERTIBILITY_RTOL * s[0]:
        raise NotAFrame(f"smallest singular value {s[-1]:.3e} is too small")
    A, B = float(s[-1] ** 2), float(s[0] ** 2)
    return FrameAnalysisReport(
        lower_bound=A,
        upper_bound=B,
        singular_values=s,
        is_parseval=abs(A - 1.0) <= tol and abs(B - 1.0) <= tol,
        condition=B / A,
    )


def bounds_from_operator(f):
    """``(1 / ||S^{-1}||, ||S||)`` computed from the frame operator."""
    S = frame_operator(f)
    return 1.0 / op_norm(np.linalg.inv(S)), op_norm(S)


def is_parseval(f, tol=None):
    """True iff ``||S - I|| <= tol`` in the spectral norm."""
    tol = f.parseval_tol if tol is None else tol
    S = _weighted_gram(f.vectors, f.weights)
    return op_norm(S - np.eye(f.dim)) <= tol


def act_on_vectors(A, f):
    """Apply ``A`` pointwise: returns ``f.with_vectors(A f(x_i))``."""
    return f.with_vectors(f.vectors @ np.asarray(A).T)


def canonical_dual(f):
    """Canonical dual frame ``S^{-1} f(x_i)`` on the same index space."""
    S = frame_operator(f)
    # rows: (S^{-1} f_i)^T = f_i^T S^{-T}
    return f.with_vectors(np.linalg.solve(S, f.vectors.T).T)


def same_index_space(f, g, rtol=RESIDUAL_RTOL):
    """Raise NodeMismatch unless ``f`` and ``g`` share nodes and weights."""
    if f.count != g.count or f.nodes.shape != g.nodes.shape:
        raise NodeMismatch(f"index spaces differ ({f.count} vs {g.count} nodes)")
    if not np.allclose(f.weights, g.weights, rtol=rtol, atol=0.0):
        raise NodeMismatch("frames carry different weights")
    if not np.allclose(f.nodes, g.nodes, rtol=rtol, atol=rtol):
        raise NodeMismatch("frames are sampled at different nodes")
    if f.dim != g.dim:
        raise DimensionMismatch(f"frames live in C^{f.dim} and C^{g.dim}")


def reconstruct(f, dual, phi):
    """``sum_i w_i <phi, f(x_i)> dual(x_i)``.

    Equals ``phi`` exactly when ``dual`` is a dual frame of ``f``; otherwise
    the raw sum is returned unchanged.
    """
    same_index_space(f, dual)
    return synthesis(dual, analysis(f, phi))


def parsevalize(f):
    """Parseval frame ``S^{-1/2} f(x_i)``.

    With ``W^{1/2} T = U s V^*`` the result has weighted matrix ``U V^*``,
    which is formed directly instead of applying ``S^{-1/2}``; this avoids
    the loss of roughly ``cond(S)`` ulps incurred by the matrix square root.
    """
    frame_operator(f)
    left, _, right_h = np.linalg.svd(f.weighted_matrix, full_matrices=False)
    isometry = left @ right_h
    return f.with_vectors(isometry.conj() / np.sqrt(f.weights)[:, None])
