import numpy as np
import pytest

from framedisc import (
    InfeasibleError,
    InvalidParameterError,
    complete_to_tight,
    counterexample_vectors,
    frame_bound,
    frame_operator,
    partition,
    partition_certificate,
    rank_one,
    scale_system,
    subset_frame_bound,
    tight_pad_unit,
    unit_norm_lift,
    vector_system,
)
from framedisc.rng import make_rng


def random_system(n, k, rng, max_norm=1.0):
    g = rng.standard_normal((n, k)) + 1j * rng.standard_normal((n, k))
    norms = np.linalg.norm(g, axis=1, keepdims=True)
    scales = max_norm * rng.random((n, 1)) ** 0.5
    return vector_system(g / norms * scales)


def test_frame_operator_orthonormal_basis_is_identity():
    vs = vector_system(np.eye(3))
    assert np.allclose(frame_operator(vs), np.eye(3))


def test_frame_operator_two_copies_of_basis():
    vs = vector_system(np.vstack([np.eye(2), np.eye(2)]))
    assert np.allclose(frame_operator(vs), 2 * np.eye(2))


def test_frame_operator_matches_rank_one_sum():
    rng = make_rng(20)
    vs = random_system(7, 3, rng)
    direct = sum(rank_one(v) for v in vs.vectors)
    assert np.allclose(frame_operator(vs), direct, atol=1e-13)


def test_frame_bound_examples():
    assert frame_bound(vector_system(np.eye(4))) == pytest.approx(1.0)
    assert frame_bound(vector_system([[1.0, 0.0], [1.0, 0.0]])) == pytest.approx(2.0)
    inst = counterexample_vectors(5)
    assert frame_bound(inst.normalized) == pytest.approx(16 / 7, abs=1e-9)


def test_frame_bound_dominates_sampled_quadratic_sums():
    rng = make_rng(21)
    vs = random_system(9, 4, rng)
    fb = frame_bound(vs)
    for _ in range(100):
        u = rng.standard_normal(4) + 1j * rng.standard_normal(4)
        u /= np.linalg.norm(u)
        total = np.sum(np.abs(vs.vectors.conj() @ u) ** 2)
        assert total <= fb + 1e-10


def test_subset_frame_bound_examples_and_monotonicity():
    vs = vector_system(np.vstack([np.eye(2), np.eye(2)]))
    assert subset_frame_bound(vs, []) == 0.0
    assert subset_frame_bound(vs, [0]) == pytest.approx(1.0)
    assert subset_frame_bound(vs, [0, 2]) == pytest.approx(2.0)
    rng = make_rng(22)
    rvs = random_system(8, 3, rng)
    full = set(range(8))
    for _ in range(30):
        size = int(rng.integers(0, 9))
        x = set(int(i) for i in rng.choice(8, size=size, replace=False))
        y = x | {int(rng.integers(0, 8))}
        # monotone under inclusion, bounded by the whole system
        assert subset_frame_bound(rvs, x) <= subset_frame_bound(rvs, y) + 1e-12
        assert subset_frame_bound(rvs, x) <= subset_frame_bound(rvs, full) + 1e-12


def test_subset_frame_bound_rejects_out_of_range():
    vs = vector_system(np.eye(2))
    with pytest.raises(InvalidParameterError):
        subset_frame_bound(vs, [5])


def test_partition_validation():
    with pytest.raises(InvalidParameterError):
        partition(2, [0, 1, 2])
    p = partition(3, [0, 2, 1, 0])
    assert [list(q) for q in p.parts()] == [[0, 3], [2], [1]]


def test_partition_certificate_two_basis_copies():
    vs = vector_system(np.vstack([np.eye(2), np.eye(2)]))
    cert = partition_certificate(vs, partition(2, [0, 0, 1, 1]), 2.0)
    assert np.allclose(cert.per_part_bound, [1.0, 1.0])
    assert cert.slack == pytest.approx(1.0)
    bad = partition_certificate(vs, partition(2, [0, 1, 0, 1]), 2.0)
    assert np.max(bad.per_part_bound) == pytest.approx(2.0)
    assert bad.slack == pytest.approx(0.0)


def test_scale_system_quadratic_bound_and_argmin_invariance():
    rng = make_rng(23)
    vs = random_system(6, 3, rng)
    assert frame_bound(scale_system(vs, 3.0)) == pytest.approx(9 * frame_bound(vs), rel=1e-10)
    # scaling preserves which subset attains the larger bound
    a = subset_frame_bound(vs, [0, 1, 2])
    b = subset_frame_bound(vs, [3, 4, 5])
    svs = scale_system(vs, 0.37)
    sa = subset_frame_bound(svs, [0, 1, 2])
    sb = subset_frame_bound(svs, [3, 4, 5])
    assert (a < b) == (sa < sb)
    with pytest.raises(InvalidParameterError):
        scale_system(vs, 0.0)


def test_complete_to_tight_single_vector():
    vs = vector_system([[1.0, 0.0]])
    out, trace = complete_to_tight(vs, 2.0, 1.0)
    s = frame_operator(out)
    assert np.linalg.norm(s - 2 * np.eye(2)) <= 1e-10
    # input prefix preserved
    assert np.array_equal(out.vectors[:1], vs.vectors)
    assert np.allclose(trace.B, 2 * np.eye(2) - frame_operator(vs))


def test_complete_to_tight_cap_respected():
    rng = make_rng(24)
    vs = random_system(4, 3, rng, max_norm=0.9)
    for cap in (1.0, 0.25, 0.07):
        out, trace = complete_to_tight(vs, 2.5, cap)
        assert np.linalg.norm(frame_operator(out) - 2.5 * np.eye(3)) <= 1e-9
        if trace.added.size:
            assert np.max(np.sum(np.abs(trace.added) ** 2, axis=1)) <= cap * (1 + 1e-8)
        assert np.array_equal(out.vectors[:4], vs.vectors)


def test_complete_to_tight_already_tight_adds_nothing():
    vs = vector_system(np.eye(3))
    out, trace = complete_to_tight(vs, 1.0, 1.0)
    assert trace.added.shape[0] == 0
    assert out.n == 3


def test_complete_to_tight_infeasible():
    vs = vector_system([[2.0, 0.0]])
    with pytest.raises(InfeasibleError):
        complete_to_tight(vs, 1.0, 1.0)


def test_unit_norm_lift_shapes_and_norms():
    rng = make_rng(25)
    vs = random_system(5, 3, rng, max_norm=0.8)
    lifted = unit_norm_lift(vs, 4.0)
    assert lifted.n == 5 + 3
    assert lifted.k == 5 + 3
    assert np.max(np.abs(lifted.norms_squared() - 1.0)) <= 1e-12
    # original coordinates preserved in the head block
    assert np.allclose(lifted.vectors[:5, :3], vs.vectors)


def test_unit_norm_lift_bound_when_headroom():
    # frame_bound <= N - sqrt(N) with N >= 4 gives lifted frame bound <= N
    rng = make_rng(26)
    for trial in range(10):
        vs = random_system(6, 2, rng, max_norm=0.7)
        fb = frame_bound(vs)
        n_target = max(4.0, (np.sqrt(fb) + 0.5 + np.sqrt(fb + 0.25)) ** 2 / 1.0)
        # pick N with fb <= N - sqrt(N)
        n_target = max(4.0, fb + np.sqrt(fb) + 2.0)
        while n_target - np.sqrt(n_target) < fb:
            n_target += 1.0
        lifted = unit_norm_lift(vs, n_target)
        assert frame_bound(lifted) <= n_target + 1e-9


def test_unit_norm_lift_rejects_big_vectors_and_thin_systems():
    with pytest.raises(InvalidParameterError):
        unit_norm_lift(vector_system([[2.0, 0.0], [0.0, 1.0]]), 4.0)
    with pytest.raises(InvalidParameterError):
        unit_norm_lift(vector_system([[0.5, 0.0, 0.0]]), 4.0)


def test_tight_pad_unit_identity_input():
    vs = vector_system(np.eye(3))
    out, trace = tight_pad_unit(vs, 2)
    assert out.n == 6
    assert np.linalg.norm(frame_operator(out) - 2 * np.eye(3)) <= 1e-10
    assert np.max(np.abs(out.norms_squared() - 1.0)) <= 1e-10
    # DFT identity: sum over one period of added vectors equals B/(N-1)
    period = trace.added[:3]
    s = period.T @ period.conj()
    assert np.linalg.norm(s - trace.B / 1.0) <= 1e-10


def test_tight_pad_unit_random_rotations():
    rng = make_rng(27)
    for trial in range(5):
        m = int(rng.integers(2, 6))
        n_level = int(rng.integers(2, 5))
        g = rng.standard_normal((m, m)) + 1j * rng.standard_normal((m, m))
        q, _ = np.linalg.qr(g)
        vs = vector_system(q.T)  # m orthonormal rows = unit vectors
        out, trace = tight_pad_unit(vs, n_level)
        assert out.n == m * n_level
        assert np.max(np.abs(out.norms_squared() - 1.0)) <= 1e-9
        assert np.linalg.norm(frame_operator(out) - n_level * np.eye(m)) <= 1e-9
        period = trace.added[:m]
        s = period.T @ period.conj()
        assert np.linalg.norm(s - trace.B / (n_level - 1)) <= 1e-9
        assert np.array_equal(out.vectors[:m], vs.vectors)


def test_tight_pad_unit_validation():
    with pytest.raises(InvalidParameterError):
        tight_pad_unit(vector_system(np.eye(3)), 1)
    with pytest.raises(InvalidParameterError):
        tight_pad_unit(vector_system(0.5 * np.eye(2)), 2)
    with pytest.raises(InvalidParameterError):
        tight_pad_unit(vector_system(np.eye(3)[:2]), 2)
    with pytest.raises(InfeasibleError):
        # three copies of e_1 in C^3: frame bound 3 exceeds N = 2
        tight_pad_unit(vector_system(np.array([[1.0, 0, 0]] * 3)), 2)


def test_vector_system_validation():
    with pytest.raises(InvalidParameterError):
        vector_system(np.zeros((0, 3)))
    with pytest.raises(InvalidParameterError):
        vector_system([[np.nan, 0.0]])
