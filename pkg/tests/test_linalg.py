import numpy as np
import pytest

from framedisc import (
    EigensolverError,
    InvalidParameterError,
    as_hermitian,
    counterexample_vectors,
    diagonal_delta,
    eigensystem,
    is_projection,
    opnorm,
    rank_one,
    schatten_norm,
)
from framedisc.rng import make_rng


def random_hermitian(dim, rng):
    g = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
    return (g + g.conj().T) / 2


def test_rank_one_basis_vector():
    m = rank_one([1.0, 0.0])
    assert np.allclose(m, [[1, 0], [0, 0]])


def test_rank_one_symmetric():
    v = np.array([1.0, 1.0]) / np.sqrt(2)
    assert np.allclose(rank_one(v), [[0.5, 0.5], [0.5, 0.5]])


def test_rank_one_trace_is_delta_on_family_vector():
    inst = counterexample_vectors(5)
    m = rank_one(inst.primed.vectors[0])
    assert np.real(np.trace(m)) == pytest.approx(0.4375, abs=1e-15)
    # PSD with trace ||v||^2
    assert np.min(np.linalg.eigvalsh(m)) >= -1e-14


def test_eigensystem_diagonal():
    eig = eigensystem(np.diag([3.0, 1.0, 2.0]))
    assert np.allclose(eig.eigenvalues, [1, 2, 3])


def test_eigensystem_pauli():
    eig = eigensystem(np.array([[0, 1], [1, 0]], dtype=complex))
    assert np.allclose(eig.eigenvalues, [-1, 1])


def test_eigensystem_family_frame_operator_top_eigenvalue():
    inst = counterexample_vectors(5)
    s = inst.normalized.vectors.T @ inst.normalized.vectors.conj()
    eig = eigensystem(s)
    assert eig.eigenvalues[-1] == pytest.approx(16 / 7, abs=1e-9)


def test_eigensystem_invariants_random():
    rng = make_rng(11)
    for dim in (2, 7, 23, 40):
        h = random_hermitian(dim, rng)
        eig = eigensystem(h)
        hn = opnorm(h)
        for t in range(dim):
            res = np.linalg.norm(h @ eig.eigenvectors[:, t]
                                 - eig.eigenvalues[t] * eig.eigenvectors[:, t])
            assert res <= 1e-10 * (1 + hn)
        gram = eig.eigenvectors.conj().T @ eig.eigenvectors
        assert np.max(np.abs(gram - np.eye(dim))) <= 1e-10
        # eigen-reconstruction
        rebuilt = (eig.eigenvectors * eig.eigenvalues) @ eig.eigenvectors.conj().T
        assert np.linalg.norm(rebuilt - h) <= 1e-9 * (1 + np.linalg.norm(h))


def test_eigensystem_deterministic():
    rng = make_rng(12)
    h = random_hermitian(9, rng)
    a = eigensystem(h)
    b = eigensystem(h.copy())
    assert np.array_equal(a.eigenvalues, b.eigenvalues)
    assert np.array_equal(a.eigenvectors, b.eigenvectors)


def test_opnorm_examples():
    v = make_rng(1).standard_normal(4) + 1j * make_rng(2).standard_normal(4)
    assert opnorm(rank_one(v)) == pytest.approx(np.linalg.norm(v) ** 2, rel=1e-12)
    assert opnorm(np.diag([1.0, -2.0])) == 2.0
    assert opnorm(np.zeros((3, 3))) == 0.0


def test_opnorm_dominates_quadratic_form_samples():
    rng = make_rng(3)
    h = random_hermitian(6, rng)
    top = opnorm(h)
    for _ in range(200):
        u = rng.standard_normal(6) + 1j * rng.standard_normal(6)
        u /= np.linalg.norm(u)
        assert abs(np.vdot(u, h @ u).real) <= top + 1e-12


def test_schatten_examples():
    d = np.diag([1.0, -1.0])
    assert schatten_norm(d, 1) == pytest.approx(2.0)
    assert schatten_norm(d, 2) == pytest.approx(np.sqrt(2))
    assert schatten_norm(d, np.inf) == pytest.approx(1.0)
    v = np.array([0.6, 0.8j])
    for p in (1, 2, 3, np.inf):
        assert schatten_norm(rank_one(v), p) == pytest.approx(1.0, abs=1e-12)
    inst = counterexample_vectors(5)
    assert schatten_norm(rank_one(inst.normalized.vectors[0]), 1) == pytest.approx(1.0, abs=1e-12)


def test_schatten_monotone_chain():
    rng = make_rng(4)
    for _ in range(20):
        h = random_hermitian(5, rng)
        n1, n2, ninf = (schatten_norm(h, p) for p in (1, 2, np.inf))
        assert n1 >= n2 - 1e-12 >= ninf - 2e-12


def test_schatten_rejects_p_below_1():
    with pytest.raises(InvalidParameterError):
        schatten_norm(np.eye(2), 0.5)


def test_is_projection_examples():
    assert is_projection(np.eye(3), 1e-10)
    assert is_projection([[0.5, 0.5], [0.5, 0.5]], 1e-10)
    assert not is_projection([[0.5, 0.0], [0.0, 0.5]], 1e-10)


def test_diagonal_delta_examples():
    assert diagonal_delta(np.eye(3)) == 1.0
    assert diagonal_delta([[0.5, 0.5], [0.5, 0.5]]) == 0.5
    assert diagonal_delta(np.zeros((2, 2))) == 0.0


def test_as_hermitian_rejects_far_from_hermitian():
    with pytest.raises(InvalidParameterError):
        as_hermitian([[0.0, 1.0], [0.0, 0.0]])


def test_as_hermitian_rejects_nonfinite():
    with pytest.raises(InvalidParameterError):
        as_hermitian([[np.inf, 0.0], [0.0, 0.0]])


def _hilbert_schmidt_selfadjoint_basis(k):
    mats = []
    for a in range(k):
        e = np.zeros((k, k), dtype=complex)
        e[a, a] = 1.0
        mats.append(e)
    for a in range(k):
        for b in range(a + 1, k):
            e = np.zeros((k, k), dtype=complex)
            e[a, b] = e[b, a] = 1 / np.sqrt(2)
            mats.append(e)
            f = np.zeros((k, k), dtype=complex)
            f[a, b] = 1j / np.sqrt(2)
            f[b, a] = -1j / np.sqrt(2)
            mats.append(f)
    return mats


def test_orthonormal_basis_signed_sum_hs_norm_is_k():
    # Euclidean-norm sanity anchor: any signed sum of a Hilbert-Schmidt
    # orthonormal self-adjoint basis has HS norm exactly k.
    rng = make_rng(5)
    for k in (2, 3, 4):
        basis = _hilbert_schmidt_selfadjoint_basis(k)
        assert len(basis) == k * k
        signs = np.where(rng.random(k * k) < 0.5, 1.0, -1.0)
        total = sum(s * b for s, b in zip(signs, basis))
        assert schatten_norm(total, 2) == pytest.approx(k, abs=1e-10)


def test_eigensolver_error_type_exists():
    assert issubclass(EigensolverError, RuntimeError)
