"""scikit-learn compatible wrappers.

``X`` passed to ``fit`` holds the frame vectors as rows (``X[j] = f_j``), so a
data matrix of samples becomes a frame over its feature space. Complex input
is supported; scikit-learn's own ``check_array`` is not used because it
rejects complex dtypes.
"""

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from ._validation import check_complex_array, check_real_array
from .exceptions import DimensionMismatch, InvalidArgument
from .frames import (
    Frame,
    FrameMatrix,
    SampledFrame,
    canonical_dual,
    frame_bounds,
    frame_operator,
)
from .numerics import inv_sqrt_psd, sqrt_psd
from .orbit import factorize

__all__ = ["FrameAnalyzer", "Parsevalizer", "FrameFactorizer", "as_frame"]


def as_frame(X, sample_weight=None):
    """Coerce ``X`` (frame, or array with rows ``f_j``) to a :class:`Frame`."""
    if isinstance(X, Frame):
        if sample_weight is not None:
            raise InvalidArgument("sample_weight cannot be combined with a Frame instance")
        return X
    X = check_complex_array(X, ndim=2, name="X")
    if sample_weight is None:
        return FrameMatrix.from_vectors(X)
    w = check_real_array(sample_weight, ndim=1, name="sample_weight")
    return SampledFrame(np.arange(X.shape[0], dtype=float), w, X)


def _check_signals(self, Y):
    Y = check_complex_array(Y, name="X", copy=False)
    single = Y.ndim == 1
    Y = np.atleast_2d(Y)
    if Y.ndim != 2 or Y.shape[1] != self.n_features_in_:
        raise DimensionMismatch(
            f"expected signals with {self.n_features_in_} features, got shape {Y.shape}"
        )
    return Y, single


class FrameAnalyzer(TransformerMixin, BaseEstimator):
    """Analysis and canonical-dual reconstruction for a fitted frame.

    ``transform`` maps signals ``phi`` (rows) to frame coefficients
    ``<phi, f_j>``; ``inverse_transform`` reconstructs signals from
    coefficients with the canonical dual frame.

    Parameters
    ----------
    tol : float, optional
        Parseval tolerance for ``is_parseval_``.

    Attributes
    ----------
    frame_ : Frame
    frame_operator_ : ndarray of shape (m, m)
    dual_ : Frame
    lower_bound_, upper_bound_ : float
    is_parseval_ : bool
    n_features_in_ : int
    """

    def __init__(self, tol=None):
        self.tol = tol

    def fit(self, X, y=None, sample_weight=None):
        f = as_frame(X, sample_weight)
        report = frame_bounds(f, self.tol)
        self.frame_ = f
        self.frame_operator_ = frame_operator(f)
        self.dual_ = canonical_dual(f)
        self.lower_bound_ = report.lower_bound
        self.upper_bound_ = report.upper_bound
        self.is_parseval_ = report.is_parseval
        self.n_features_in_ = f.dim
        return self

    def transform(self, X):
        check_is_fitted(self, "frame_")
        Y, single = _check_signals(self, X)
        C = Y @ self.frame_.matrix.T
        return C[0] if single else C

    def inverse_transform(self, X):
        check_is_fitted(self, "frame_")
        C = check_complex_array(X, name="X", copy=False)
        single = C.ndim == 1
        C = np.atleast_2d(C)
        if C.shape[1] != self.frame_.count:
            raise DimensionMismatch(f"expected {self.frame_.count} coefficients, got {C.shape[1]}")
        out = (C * self.frame_.weights) @ self.dual_.vectors
        return out[0] if single else out


class Parsevalizer(TransformerMixin, BaseEstimator):
    """Learn ``S^{-1/2}`` from a frame and apply it to vectors.

    ``fit(X).transform(X)`` returns the Parsevalized frame vectors;
    ``inverse_transform`` multiplies by ``S^{1/2}``.
    """

    def fit(self, X, y=None, sample_weight=None):
        f = as_frame(X, sample_weight)
        S = frame_operator(f)
        self.operator_ = inv_sqrt_psd(S)
        self.inverse_operator_ = sqrt_psd(S)
        self.n_features_in_ = f.dim
        return self

    def transform(self, X):
        check_is_fitted(self, "operator_")
        Y, single = _check_signals(self, X.vectors if isinstance(X, Frame) else X)
        out = Y @ self.operator_.T
        return out[0] if single else out

    def inverse_transform(self, X):
        check_is_fitted(self, "operator_")
        Y, single = _check_signals(self, X)
        out = Y @ self.inverse_operator_.T
        return out[0] if single else out


class FrameFactorizer(BaseEstimator):
    """Factor a frame as ``S^{1/2} U sigma``.

    Attributes
    ----------
    positive_part_, unitary_part_ : ndarray of shape (m, m)
    transversal_ : Frame
        Canonical Parseval representative of the frame's orbit.
    """

    def __init__(self, tol=None):
        self.tol = tol

    def fit(self, X, y=None, sample_weight=None):
        fac = factorize(as_frame(X, sample_weight), tol=self.tol)
        self.positive_part_ = fac.positive_part
        self.unitary_part_ = fac.unitary_part
        self.transversal_ = fac.transversal
        self.n_features_in_ = fac.transversal.dim
        return self
