"""Constructors for example frames and the quadrature grids that sample them."""

from dataclasses import dataclass

import numpy as np

from ._validation import check_complex_array, check_positive_int
from .exceptions import (
    ColumnNotUnit,
    DimensionMismatch,
    EmptyColumn,
    GridMismatch,
    GridTooCoarse,
    InvalidArgument,
    NodeMismatch,
    NotOrthonormal,
    NotOrthonormalFamily,
    NotParseval,
    NotUnitary,
)
from .frames import FrameMatrix, SampledFrame, is_parseval, same_index_space
from .numerics import is_unitary, op_norm

__all__ = [
    "ORTHONORMAL_TOL",
    "QuadratureGrid",
    "uniform_grid",
    "standard_basis",
    "random_unitary",
    "exponential_frame",
    "cos_sin_frame",
    "cos_sin_vectors",
    "tensor_frame",
    "parseval_from_unitary",
    "msigma_frame",
    "random_frame",
]

ORTHONORMAL_TOL = 1e-10


@dataclass(frozen=True)
class QuadratureGrid:
    """Midpoint rule on ``[0, d)`` with ``nodes_per_unit`` cells per unit."""

    interval_end: int
    nodes_per_unit: int

    @property
    def nodes(self):
        N = self.nodes_per_unit
        j = np.arange(self.interval_end * N)
        return (j + 0.5) / N

    @property
    def weights(self):
        return np.full(self.interval_end * self.nodes_per_unit, 1.0 / self.nodes_per_unit)

    def __len__(self):
        return self.interval_end * self.nodes_per_unit


def uniform_grid(d, nodes_per_unit):
    d = check_positive_int(d, "d")
    N = check_positive_int(nodes_per_unit, "nodes_per_unit")
    return QuadratureGrid(d, N)


def standard_basis(m):
    return np.eye(check_positive_int(m, "m"), dtype=complex)


def random_unitary(m, rng):
    """Haar-distributed unitary via QR of a complex Gaussian matrix."""
    z = rng.standard_normal((m, m)) + 1j * rng.standard_normal((m, m))
    q, r = np.linalg.qr(z)
    d = np.diagonal(r)
    return q * (d / np.abs(d))


def _check_basis(basis, name):
    basis = check_complex_array(basis, ndim=2, name=name)
    m = basis.shape[0]
    if basis.shape != (m, m):
        raise DimensionMismatch(f"{name}: expected m vectors in C^m, got shape {basis.shape}")
    if op_norm(basis @ basis.conj().T - np.eye(m)) > ORTHONORMAL_TOL:
        raise NotOrthonormal(f"{name} is not orthonormal")
    return basis


def _check_grid(grid, m):
    if grid.interval_end != m:
        raise GridMismatch(f"grid covers [0, {grid.interval_end}) but the space has dimension {m}")


def exponential_frame(basis, grid):
    """``F(x) = exp(i 2 pi x) h_floor(x)`` sampled on ``grid``.

    Parameters
    ----------
    basis : (m, m) array_like
        Row ``k`` is the orthonormal vector ``h_k``.
    grid : QuadratureGrid
        Must cover ``[0, m)``.
    """
    basis = _check_basis(basis, "basis")
    _check_grid(grid, basis.shape[0])
    x = grid.nodes
    k = np.floor(x).astype(int)
    vectors = np.exp(2j * np.pi * x)[:, None] * basis[k]
    return SampledFrame(x, grid.weights, vectors)


def cos_sin_vectors(basis_f, basis_h, x):
    """Pointwise values ``cos(2 pi x) f_floor(x) + i sin(2 pi x) h_floor(x)``."""
    k = np.floor(x).astype(int)
    return (
        np.cos(2 * np.pi * x)[:, None] * basis_f[k]
        + 1j * np.sin(2 * np.pi * x)[:, None] * basis_h[k]
    )


def cos_sin_frame(basis_f, basis_h, grid):
    """``F(x) = cos(2 pi x) f_k + i sin(2 pi x) h_k`` with ``k = floor(x)``.

    Raises
    ------
    GridTooCoarse
        If ``grid.nodes_per_unit < 3``; below that the discrete sums of
        ``cos^2`` and ``sin^2`` no longer average to one half.
    """
    basis_f = _check_basis(basis_f, "basis_f")
    basis_h = _check_basis(basis_h, "basis_h")
    if basis_f.shape != basis_h.shape:
        raise DimensionMismatch("bases must have the same dimension")
    _check_grid(grid, basis_f.shape[0])
    if grid.nodes_per_unit < 3:
        raise GridTooCoarse(f"need at least 3 nodes per unit, got {grid.nodes_per_unit}")
    x = grid.nodes
    return SampledFrame(x, grid.weights, cos_sin_vectors(basis_f, basis_h, x))


def tensor_frame(frames, coefficients, y_nodes, y_weights, tol=ORTHONORMAL_TOL):
    """Product frame ``K(x, y) = sum_j alpha_j(y) F_j(x)``.

    Parameters
    ----------
    frames : sequence of Frame
        Parseval frames ``F_j`` sharing nodes and weights.
    coefficients : (J, L) array_like
        ``coefficients[j, l] = alpha_j(y_l)``.
    y_nodes, y_weights : (L,) array_like
        Second grid and its positive weights ``nu_l``.

    Returns
    -------
    SampledFrame
        Nodes are the pairs ``(x_i, y_l)`` in ``x``-major order, weights
        ``w_i nu_l``.

    Notes
    -----
    The ``alpha_j`` must be mutually orthogonal in the weighted inner product
    with squared norms summing to one. Then the frame operator of ``K`` is
    ``sum_j ||alpha_j||^2 S(F_j) = I``. An orthonormal family of ``J``
    functions would give ``J * I`` instead.
    """
    frames = list(frames)
    if not frames:
        raise InvalidArgument("at least one frame is required")
    first = frames[0]
    for j, F in enumerate(frames):
        same_index_space(first, F)
        if not is_parseval(F):
            raise NotParseval(f"frame {j} is not Parseval")

    alpha = check_complex_array(coefficients, ndim=2, name="coefficients")
    y_nodes = np.asarray(y_nodes, dtype=float)
    y_weights = np.asarray(y_weights, dtype=float)
    J, L = alpha.shape
    if J != len(frames):
        raise DimensionMismatch(f"{J} coefficient functions for {len(frames)} frames")
    if y_nodes.shape != (L,) or y_weights.shape != (L,):
        raise NodeMismatch("second grid does not match the coefficient samples")
    if np.any(y_weights <= 0.0):
        raise InvalidArgument("y_weights must be strictly positive")

    gram = alpha @ (y_weights[:, None] * alpha.conj().T)
    off = gram - np.diag(np.diagonal(gram))
    if np.max(np.abs(off), initial=0.0) > tol or abs(np.trace(gram) - 1.0) > tol:
        raise NotOrthonormalFamily(
            "coefficient functions must be orthogonal with squared norms summing to 1"
        )

    stack = np.stack([F.vectors for F in frames])  # (J, n, m)
    vectors = np.einsum("jl,jnm->nlm", alpha, stack).reshape(-1, first.dim)
    x = first.nodes if first.nodes.ndim == 2 else first.nodes[:, None]
    n = first.count
    nodes = np.hstack([np.repeat(x, L, axis=0), np.tile(y_nodes, n)[:, None]])
    weights = np.repeat(first.weights, L) * np.tile(y_weights, n)
    return SampledFrame(nodes, weights, vectors)


def parseval_from_unitary(U_big, V_small):
    """Finite Parseval frame ``T = U_big[:, :m] V_small^*``."""
    U_big = check_complex_array(U_big, ndim=2, name="U_big")
    V_small = check_complex_array(V_small, ndim=2, name="V_small")
    n, m = U_big.shape[0], V_small.shape[0]
    if U_big.shape != (n, n) or V_small.shape != (m, m):
        raise DimensionMismatch("both arguments must be square")
    if n < m:
        raise DimensionMismatch(f"need n >= m, got n={n}, m={m}")
    for name, X in (("U_big", U_big), ("V_small", V_small)):
        if not is_unitary(X, ORTHONORMAL_TOL):
            raise NotUnitary(f"{name} is not unitary")
    return FrameMatrix(U_big[:, :m] @ V_small.conj().T)


def msigma_frame(pattern, n, m, moduli=None, phases=None, tol=ORTHONORMAL_TOL):
    """Finite frame whose analysis matrix has at most one nonzero per row.

    Parameters
    ----------
    pattern : sequence of (int or None)
        ``pattern[i]`` is the 0-based column holding row ``i``'s entry, or
        None for an empty row.
    n, m : int
        Matrix shape.
    moduli : sequence of float, optional
        Entry magnitudes; defaults to ``1/sqrt(k)`` for a column with ``k``
        rows.
    phases : sequence of complex, optional
        Unit-modulus phase per row; defaults to 1.

    Raises
    ------
    EmptyColumn
        If a column receives no row.
    ColumnNotUnit
        If a column's squared moduli do not sum to one.
    """
    n = check_positive_int(n, "n")
    m = check_positive_int(m, "m")
    pattern = list(pattern)
    if len(pattern) != n:
        raise DimensionMismatch(f"pattern has {len(pattern)} rows, expected {n}")
    for i, c in enumerate(pattern):
        if c is not None and not 0 <= c < m:
            raise InvalidArgument(f"pattern[{i}] = {c} is not a column of a {n}x{m} matrix")
    counts = np.bincount([c for c in pattern if c is not None], minlength=m)
    if np.any(counts == 0):
        raise EmptyColumn(f"column {int(np.flatnonzero(counts == 0)[0])} has no entries")
    if moduli is None:
        moduli = [0.0 if c is None else 1.0 / np.sqrt(counts[c]) for c in pattern]
    moduli = np.asarray(moduli, dtype=float)
    phases = np.ones(n, dtype=complex) if phases is None else np.asarray(phases, dtype=complex)
    if moduli.shape != (n,) or phases.shape != (n,):
        raise DimensionMismatch("moduli and phases need one entry per row")
    if np.any(np.abs(np.abs(phases) - 1.0) > tol):
        raise InvalidArgument("phases must have unit modulus")

    T = np.zeros((n, m), dtype=complex)
    for i, c in enumerate(pattern):
        if c is not None:
            T[i, c] = moduli[i] * phases[i]
    col_norms = np.sum(np.abs(T) ** 2, axis=0)
    bad = np.flatnonzero(np.abs(col_norms - 1.0) > tol)
    if bad.size:
        raise ColumnNotUnit(f"column {int(bad[0])} has squared norm {col_norms[bad[0]]:.6g}")
    return FrameMatrix(T)


def random_frame(n, m, seed=None, condition_target=1.0):
    """Seeded random finite frame with prescribed condition ``B / A``.

    A complex Gaussian ``n x m`` matrix is decomposed and its singular values
    replaced by a geometric ramp from ``sqrt(condition_target)`` down to 1.
    """
    n = check_positive_int(n, "n")
    m = check_positive_int(m, "m")
    if n < m:
        raise InvalidArgument(f"need n >= m, got n={n}, m={m}")
    if not np.isfinite(condition_target) or condition_target < 1.0:
        raise InvalidArgument(f"condition_target must be >= 1, got {condition_target}")
    rng = np.random.default_rng(seed)
    z = rng.standard_normal((n, m)) + 1j * rng.standard_normal((n, m))
    u, _, vh = np.linalg.svd(z, full_matrices=False)
    s = np.sqrt(condition_target) ** np.linspace(1.0, 0.0, m) if m > 1 else np.ones(1)
    return FrameMatrix((u * s) @ vh)
