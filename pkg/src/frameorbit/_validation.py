"""Input validation helpers.

scikit-learn's ``check_array`` rejects complex input, so the complex-valued
checks used throughout the package live here.
"""

import numpy as np

from .exceptions import DimensionMismatch, InvalidArgument, NonFiniteInput


def check_complex_array(x, ndim=None, name="array", copy=True):
    """Convert ``x`` to a finite complex ndarray.

    Parameters
    ----------
    x : array_like
        Input data.
    ndim : int, optional
        Required number of dimensions.
    name : str
        Used in error messages.
    copy : bool
        Always return a fresh array when True.

    Raises
    ------
    NonFiniteInput
        If any entry is NaN or infinite.
    DimensionMismatch
        If ``ndim`` is given and does not match.
    """
    try:
        arr = np.array(x, dtype=complex) if copy else np.asarray(x, dtype=complex)
    except (TypeError, ValueError) as exc:
        raise InvalidArgument(f"{name}: cannot interpret as a complex array ({exc})") from None
    if ndim is not None and arr.ndim != ndim:
        raise DimensionMismatch(f"{name}: expected {ndim}-d array, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise NonFiniteInput(f"{name}: entries must be finite")
    return arr


def check_real_array(x, ndim=None, name="array"):
    try:
        arr = np.array(x, dtype=float)
    except (TypeError, ValueError) as exc:
        raise InvalidArgument(f"{name}: cannot interpret as a real array ({exc})") from None
    if ndim is not None and arr.ndim != ndim:
        raise DimensionMismatch(f"{name}: expected {ndim}-d array, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise NonFiniteInput(f"{name}: entries must be finite")
    return arr


def check_square(a, name="matrix"):
    a = check_complex_array(a, ndim=2, name=name)
    if a.shape[0] != a.shape[1]:
        raise DimensionMismatch(f"{name}: expected a square matrix, got shape {a.shape}")
    return a


def check_vector(phi, dim, name="phi"):
    phi = check_complex_array(phi, ndim=1, name=name)
    if phi.shape[0] != dim:
        raise DimensionMismatch(f"{name}: expected length {dim}, got {phi.shape[0]}")
    return phi


def check_positive_int(value, name):
    if isinstance(value, bool) or int(value) != value or value < 1:
        raise InvalidArgument(f"{name} must be a positive integer, got {value!r}")
    return int(value)


def freeze(arr):
    """Mark an array read-only so frames behave as immutable values."""
    arr.setflags(write=False)
    return arr
