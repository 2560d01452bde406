import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import frameorbit as fo
from frameorbit.exceptions import DimensionMismatch, InvalidArgument, NodeMismatch, NotAFrame
from frameorbit.numerics import Tag, classify, inv_sqrt_psd, op_norm

from conftest import complex_gaussian


def hand_frame_operator(vectors, weights):
    """Sum of weighted outer products, one term at a time."""
    m = len(vectors[0])
    S = np.zeros((m, m), dtype=complex)
    for v, w in zip(vectors, weights):
        v = np.asarray(v, dtype=complex)
        S += w * np.outer(v, v.conj())
    return S


def frames_strategy():
    return st.builds(
        lambda n_extra, m, seed, cond: fo.random_frame(m + n_extra, m, seed=seed, condition_target=cond),
        st.integers(0, 6),
        st.integers(1, 6),
        st.integers(0, 2**32 - 1),
        st.floats(1.0, 100.0),
    )


# -- construction -----------------------------------------------------------


def test_frame_is_immutable(e1e1e2):
    with pytest.raises(ValueError):
        e1e1e2.vectors[0, 0] = 5


def test_rank_deficient_is_rejected():
    with pytest.raises(NotAFrame):
        fo.FrameMatrix.from_vectors([[1, 0], [2, 0], [3, 0]])
    with pytest.raises(NotAFrame):
        fo.FrameMatrix.from_vectors([[1, 0]])


def test_zero_vectors_allowed():
    f = fo.FrameMatrix.from_vectors([[1, 0], [0, 0], [0, 1]])
    np.testing.assert_allclose(fo.frame_operator(f), np.eye(2))


def test_sampled_frame_validation():
    with pytest.raises(InvalidArgument):
        fo.SampledFrame([0.0, 1.0], [1.0, 0.0], np.eye(2))
    with pytest.raises(InvalidArgument):
        fo.SampledFrame([1.0, 0.0], [1.0, 1.0], np.eye(2))
    with pytest.raises(DimensionMismatch):
        fo.SampledFrame([0.0, 1.0, 2.0], [1.0, 1.0], np.eye(2))


def test_matrix_rows_are_conjugated_vectors():
    f = fo.FrameMatrix([[1j, 0], [0, 1]])
    np.testing.assert_allclose(f.vectors, [[-1j, 0], [0, 1]])


# -- frame operator ---------------------------------------------------------


def test_frame_operator_examples(basis2, e1e1e2):
    np.testing.assert_allclose(fo.frame_operator(basis2), np.eye(2))
    expected = hand_frame_operator([[1, 0], [1, 0], [0, 1]], [1, 1, 1])
    np.testing.assert_allclose(fo.frame_operator(e1e1e2), expected)
    np.testing.assert_allclose(expected, np.diag([2, 1]))
    assert Tag.POSITIVE in classify(fo.frame_operator(e1e1e2))


def test_frame_operator_exponential_frame():
    grid = fo.uniform_grid(2, 16)
    f = fo.exponential_frame(np.eye(2), grid)
    # per cell: sum_j (1/N) |e^{i2pi x}|^2 h_k h_k^* with the weights summing to 1
    cell_mass = [grid.weights[np.floor(grid.nodes) == k].sum() for k in range(2)]
    np.testing.assert_allclose(fo.frame_operator(f), np.diag(cell_mass), atol=1e-13)
    np.testing.assert_allclose(fo.frame_operator(f), np.eye(2), atol=1e-13)


# -- analysis / synthesis ---------------------------------------------------


def test_analysis_examples(basis2, e1e1e2):
    np.testing.assert_allclose(fo.analysis(basis2, [1, 0]).values, [1, 0])
    a, b = 2 - 1j, 0.5j
    np.testing.assert_allclose(fo.analysis(e1e1e2, [a, b]).values, [a, a, b])
    with pytest.raises(DimensionMismatch):
        fo.analysis(e1e1e2, [1, 2, 3])


def test_analysis_norm_identity_on_parseval(rng):
    f = fo.exponential_frame(fo.random_unitary(3, rng), fo.uniform_grid(3, 5))
    phi = complex_gaussian(rng, 3)
    c = fo.analysis(f, phi)
    assert abs(np.sum(c.weights * np.abs(c.values) ** 2) - np.linalg.norm(phi) ** 2) <= 1e-12


def test_synthesis_examples(basis2, e1e1e2, rng):
    np.testing.assert_allclose(fo.synthesis(basis2, [1, 0]), [1, 0])
    hand = sum(c * np.array(v) for c, v in zip([1, 1, 0], [[1, 0], [1, 0], [0, 1]]))
    np.testing.assert_allclose(fo.synthesis(e1e1e2, [1, 1, 0]), hand)
    np.testing.assert_allclose(hand, [2, 0])
    p = fo.parseval_from_unitary(fo.random_unitary(5, rng), fo.random_unitary(3, rng))
    phi = complex_gaussian(rng, 3)
    np.testing.assert_allclose(fo.synthesis(p, fo.analysis(p, phi)), phi, atol=1e-12)
    with pytest.raises(DimensionMismatch):
        fo.synthesis(e1e1e2, [1, 2])


@settings(max_examples=50, deadline=None)
@given(f=frames_strategy(), seed=st.integers(0, 2**32 - 1))
def test_synthesis_is_adjoint_of_analysis(f, seed):
    rng = np.random.default_rng(seed)
    phi = complex_gaussian(rng, f.dim)
    c = complex_gaussian(rng, f.count)
    lhs = fo.analysis(f, phi).inner(c)
    rhs = np.vdot(fo.synthesis(f, c), phi)  # <phi, V* c>, linear in phi
    assert abs(lhs - rhs) <= 1e-11 * max(1.0, abs(lhs))


@settings(max_examples=50, deadline=None)
@given(f=frames_strategy())
def test_frame_operator_is_synthesis_of_analysis(f):
    cols = [fo.synthesis(f, fo.analysis(f, e)) for e in np.eye(f.dim)]
    np.testing.assert_allclose(np.array(cols).T, fo.frame_operator(f), atol=1e-12 * op_norm(fo.frame_operator(f)))


# -- bounds ------------------------------------------------------------------


def test_bounds_examples(basis2, e1e1e2, rng):
    r = fo.frame_bounds(basis2)
    assert (r.lower_bound, r.upper_bound, r.is_parseval) == (1.0, 1.0, True)
    spectrum = np.linalg.eigvalsh(hand_frame_operator([[1, 0], [1, 0], [0, 1]], [1, 1, 1]))
    r = fo.frame_bounds(e1e1e2)
    assert r.lower_bound == pytest.approx(spectrum[0], abs=1e-15)
    assert r.upper_bound == pytest.approx(spectrum[-1], abs=1e-14)
    assert not r.is_parseval and r.condition == pytest.approx(2.0)
    p = fo.parseval_from_unitary(fo.random_unitary(6, rng), fo.random_unitary(4, rng))
    r = fo.frame_bounds(p)
    assert abs(r.lower_bound - 1) <= 1e-12 and abs(r.upper_bound - 1) <= 1e-12


@settings(max_examples=40, deadline=None)
@given(f=frames_strategy(), seed=st.integers(0, 2**32 - 1))
def test_frame_inequality_sampled(f, seed):
    rng = np.random.default_rng(seed)
    r = fo.frame_bounds(f)
    for _ in range(100):
        phi = complex_gaussian(rng, f.dim)
        phi /= np.linalg.norm(phi)
        energy = np.sum(np.abs(fo.analysis(f, phi).values) ** 2)
        assert r.lower_bound - 1e-9 <= energy <= r.upper_bound + 1e-9
    w, q = np.linalg.eigh(fo.frame_operator(f))
    for k, bound in ((0, r.lower_bound), (-1, r.upper_bound)):
        energy = np.sum(np.abs(fo.analysis(f, q[:, k]).values) ** 2)
        assert abs(energy - bound) <= 1e-9 * max(1.0, bound)


@settings(max_examples=60, deadline=None)
@given(f=frames_strategy())
def test_bounds_equivalence(f):
    r = fo.frame_bounds(f)
    A, B = fo.bounds_from_operator(f)
    assert abs(r.lower_bound - A) <= 1e-10 * A
    assert abs(r.upper_bound - B) <= 1e-10 * B


# -- parseval / dual / reconstruction ----------------------------------------


def test_is_parseval_examples(basis2, e1e1e2):
    assert fo.is_parseval(basis2)
    assert not fo.is_parseval(e1e1e2)


def test_canonical_dual_examples(rng, e1e1e2):
    p = fo.parseval_from_unitary(fo.random_unitary(4, rng), fo.random_unitary(2, rng))
    np.testing.assert_allclose(fo.canonical_dual(p).vectors, p.vectors, atol=1e-14)

    S_inv = np.linalg.inv(hand_frame_operator([[1, 0], [1, 0], [0, 1]], [1, 1, 1]))
    np.testing.assert_allclose(S_inv, np.diag([0.5, 1.0]))
    d = fo.canonical_dual(e1e1e2)
    np.testing.assert_allclose(d.vectors, [[0.5, 0], [0.5, 0], [0, 1]], atol=1e-15)
    np.testing.assert_allclose(fo.frame_operator(d), S_inv, atol=1e-15)


def test_double_dual(rng):
    for seed in range(20):
        f = fo.random_frame(9, 4, seed=seed, condition_target=20.0)
        dd = fo.canonical_dual(fo.canonical_dual(f))
        np.testing.assert_allclose(dd.vectors, f.vectors, atol=1e-11)


def test_dual_of_sampled_keeps_nodes():
    f = fo.SampledFrame([0.0, 0.5, 1.0], [0.2, 0.3, 0.5], [[1, 0], [1, 1], [0, 1]])
    d = fo.canonical_dual(f)
    assert isinstance(d, fo.SampledFrame)
    np.testing.assert_array_equal(d.nodes, f.nodes)
    np.testing.assert_array_equal(d.weights, f.weights)
    np.testing.assert_allclose(fo.frame_operator(d), np.linalg.inv(fo.frame_operator(f)), atol=1e-13)


def test_reconstruct_examples(rng, e1e1e2):
    p = fo.parseval_from_unitary(fo.random_unitary(5, rng), fo.random_unitary(3, rng))
    phi = complex_gaussian(rng, 3)
    np.testing.assert_allclose(fo.reconstruct(p, p, phi), phi, atol=1e-13)

    phi = np.array([3, -2j])
    dual = fo.canonical_dual(e1e1e2)
    hand = 3 * np.array([0.5, 0]) + 3 * np.array([0.5, 0]) + (-2j) * np.array([0, 1])
    np.testing.assert_allclose(hand, phi)
    np.testing.assert_allclose(fo.reconstruct(e1e1e2, dual, phi), phi, atol=1e-12)

    S = np.diag([2, 1])
    raw = fo.reconstruct(e1e1e2, e1e1e2, [1, 0])
    np.testing.assert_allclose(raw, S @ [1, 0])
    np.testing.assert_allclose(raw, [2, 0])


def test_reconstruct_node_mismatch(e1e1e2):
    g = fo.SampledFrame([0.0, 1.0, 2.0], [1.0, 1.0, 2.0], e1e1e2.vectors)
    with pytest.raises(NodeMismatch):
        fo.reconstruct(e1e1e2, g, [1, 0])


def test_parsevalize_examples(rng, e1e1e2):
    p = fo.parseval_from_unitary(fo.random_unitary(5, rng), fo.random_unitary(3, rng))
    np.testing.assert_allclose(fo.parsevalize(p).vectors, p.vectors, atol=1e-13)

    S_inv_half = np.diag([1 / np.sqrt(2), 1.0])
    t = fo.parsevalize(e1e1e2)
    np.testing.assert_allclose(t.vectors, e1e1e2.vectors @ S_inv_half.T, atol=1e-15)
    np.testing.assert_allclose(
        t.vectors, [[1 / np.sqrt(2), 0], [1 / np.sqrt(2), 0], [0, 1]], atol=1e-15
    )


def test_parsevalize_random_frames(rng):
    for k in range(1000):
        m = int(rng.integers(1, 7))
        n = int(rng.integers(m, 13))
        f = fo.random_frame(n, m, seed=k, condition_target=float(rng.uniform(1, 100)))
        t = fo.parsevalize(f)
        assert op_norm(fo.frame_operator(t) - np.eye(m)) <= 1e-10
        assert fo.is_parseval(t, 1e-10)


@settings(max_examples=50, deadline=None)
@given(f=frames_strategy())
def test_parsevalize_idempotent(f):
    t = fo.parsevalize(f)
    np.testing.assert_allclose(fo.parsevalize(t).vectors, t.vectors, atol=1e-11)


def test_parsevalize_matches_inverse_square_root(rng):
    # second route: apply S^{-1/2} from the eigendecomposition
    for _ in range(200):
        m = int(rng.integers(1, 9))
        w = rng.uniform(0.2, 3.0, m + 4)
        f = fo.SampledFrame(np.arange(m + 4.0), w, complex_gaussian(rng, m + 4, m))
        via_root = fo.act(inv_sqrt_psd(hand_frame_operator(f.vectors, w)), f)
        np.testing.assert_allclose(fo.parsevalize(f).vectors, via_root.vectors, atol=1e-10)
