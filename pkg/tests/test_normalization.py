import numpy as np
import pytest

from grassnorm import (
    DimensionMismatch,
    FundamentalTensor,
    MapUndefined,
    MPair,
    NormalizingMap,
    Quadric,
    TangentDirection,
    adapted_frame,
    block_metrics,
    constant_map,
    estimate_fundamental_tensor,
    estimate_fundamental_tensor_in_frame,
    harmonic_defect,
    is_asymptotic_direction,
    is_harmonic,
    isotropic_dimension,
    lambda_rank,
    metric_rank,
    polar_lambda,
    polar_map,
    subspace_from_points,
    symmetrize_metric,
)

from _gen import (
    pair_symmetrized,
    random_lambda,
    random_polar_pair,
    random_quadric,
    random_subspace,
)


def standard_pair():
    p = subspace_from_points([[1, 0, 0, 0], [0, 1, 0, 0]])
    p_star = subspace_from_points([[0, 0, 1, 0], [0, 0, 0, 1]])
    return MPair(p=p, p_star=p_star)


def test_identity_quadric_estimate_is_minus_kronecker():
    q = Quadric(n=3, matrix=np.eye(4))
    est = estimate_fundamental_tensor(polar_map(q), standard_pair())
    expected = -np.einsum("ab,ij->abij", np.eye(2), np.eye(2))
    np.testing.assert_array_equal(est.lam, expected)  # exact for this input


def test_estimate_matches_closed_form_for_random_quadrics():
    rng = np.random.default_rng(31)
    for k in range(8):
        n, m = (3, 1) if k % 2 == 0 else (4, 1)
        q = random_quadric(rng, n)
        pair = random_polar_pair(rng, q, m)
        bm = block_metrics(adapted_frame(pair), q, m)
        exact = polar_lambda(bm).lam
        est = estimate_fundamental_tensor(polar_map(q), pair, eps=1e-5).lam
        assert np.max(np.abs(est - exact)) <= 1e-8


def test_estimate_has_no_truncation_term_on_polar_maps():
    # the complement of a sheared subspace depends linearly on the shear,
    # so central differences are exact and only rounding noise remains;
    # the error must stay tiny even at a coarse step
    rng = np.random.default_rng(32)
    q = random_quadric(rng, 3)
    pair = random_polar_pair(rng, q, 1)
    bm = block_metrics(adapted_frame(pair), q, 1)
    exact = polar_lambda(bm).lam
    for eps in (1e-2, 1e-3):
        est = estimate_fundamental_tensor(polar_map(q), pair, eps=eps).lam
        assert np.max(np.abs(est - exact)) <= 1e-10


def test_constant_map_has_zero_tensor():
    pair = standard_pair()
    est = estimate_fundamental_tensor(constant_map(pair.p_star), pair)
    np.testing.assert_array_equal(est.lam, 0.0)
    assert lambda_rank(est) == 0


def test_in_frame_variant_agrees_with_pair_variant():
    rng = np.random.default_rng(33)
    q = random_quadric(rng, 3)
    pair = random_polar_pair(rng, q, 1)
    frame = adapted_frame(pair).frame_matrix
    a = estimate_fundamental_tensor(polar_map(q), pair, eps=1e-5).lam
    b = estimate_fundamental_tensor_in_frame(polar_map(q), frame, 1, eps=1e-5)
    np.testing.assert_array_equal(a, b)


def test_map_errors_are_wrapped():
    pair = standard_pair()

    def broken(p):
        raise ValueError("no complement here")

    with pytest.raises(MapUndefined):
        estimate_fundamental_tensor(NormalizingMap(fn=broken, tag="broken"), pair)

    wrong_dim = constant_map(subspace_from_points([[0, 0, 1, 0]]))
    with pytest.raises(MapUndefined):
        estimate_fundamental_tensor(wrong_dim, pair)


def test_polar_tensor_is_full_rank_and_harmonic():
    rng = np.random.default_rng(34)
    q = random_quadric(rng, 3)
    pair = random_polar_pair(rng, q, 1)
    bm = block_metrics(adapted_frame(pair), q, 1)
    lam = polar_lambda(bm)
    assert lambda_rank(lam) == lam.rho == 4
    assert is_harmonic(lam, tol=1e-12)
    g = symmetrize_metric(lam)
    assert metric_rank(g) == 4
    assert isotropic_dimension(g) == 0


def test_harmonic_defect_vanishes_only_after_symmetrization():
    rng = np.random.default_rng(35)
    raw = random_lambda(rng, 1, 3)
    assert harmonic_defect(raw) > 1e-2
    assert not is_harmonic(raw, tol=1e-9)
    sym = pair_symmetrized(raw)
    assert harmonic_defect(sym) == 0.0
    assert is_harmonic(sym, tol=1e-15)


def test_metric_tensor_symmetrizes_on_construction():
    rng = np.random.default_rng(36)
    raw = random_lambda(rng, 1, 4)
    g = symmetrize_metric(raw)
    np.testing.assert_array_equal(g.g, g.g.transpose(1, 0, 3, 2))
    flat = g.flattened()
    assert flat.shape == (raw.rho, raw.rho)


def test_flattening_layout_row_alpha_i_col_beta_j():
    m, n = 1, 3
    lam = np.zeros((2, 2, 2, 2))
    lam[0, 1, 0, 1] = 7.0  # alpha=0, beta=1, i=0, j=1
    flat = FundamentalTensor(m=m, n=n, lam=lam).flattened()
    # row index alpha*(n-m)+i = 0, column index beta*(n-m)+j = 3
    assert flat[0, 3] == 7.0
    assert np.count_nonzero(flat) == 1


def test_rank_one_directions_are_asymptotic():
    rng = np.random.default_rng(37)
    for _ in range(10):
        col = rng.standard_normal((3, 1))
        row = rng.standard_normal((1, 3))
        d = TangentDirection(m=2, n=5, d=col @ row)
        assert is_asymptotic_direction(d)
    generic = TangentDirection(m=2, n=5, d=rng.standard_normal((3, 3)))
    assert not is_asymptotic_direction(generic)


def test_direction_shape_is_validated():
    with pytest.raises(DimensionMismatch):
        TangentDirection(m=1, n=3, d=np.ones((3, 2)))


def test_isotropic_dimension_counts_metric_kernel():
    # rank-one lam gives a metric with a large kernel
    m, n = 1, 3
    lam = np.zeros((2, 2, 2, 2))
    lam[0, 0, 0, 0] = 1.0
    ft = FundamentalTensor(m=m, n=n, lam=lam)
    g = symmetrize_metric(ft)
    assert metric_rank(g) + isotropic_dimension(g) == ft.rho
    assert isotropic_dimension(g) == ft.rho - 1
