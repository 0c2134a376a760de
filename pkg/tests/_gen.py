"""Random geometry generators shared across the test modules.

Everything takes an explicit numpy Generator so each test controls its
own seed. Samplers reject configurations that are close to degenerate;
the bounds asserted downstream presume general position, and rejection
keeps condition numbers small enough that float error stays far below
every tolerance in the suite.
"""

import numpy as np

from grassnorm import (
    BlockMetrics,
    FundamentalTensor,
    MPair,
    Quadric,
    Subspace,
    TangentDirection,
    polar_conjugate,
    subspace_from_points,
)


def random_orthogonal(rng: np.random.Generator, k: int) -> np.ndarray:
    q, r = np.linalg.qr(rng.standard_normal((k, k)))
    return q * np.sign(np.diag(r))


def random_subspace(rng: np.random.Generator, n: int, dim: int) -> Subspace:
    # orthonormal spanning rows keep the canonical form well conditioned
    basis = np.linalg.qr(rng.standard_normal((n + 1, dim + 1)))[0]
    return subspace_from_points(basis.T)


def random_invertible(rng: np.random.Generator, k: int, min_rel_sv: float = 1e-2) -> np.ndarray:
    while True:
        t = rng.standard_normal((k, k))
        s = np.linalg.svd(t, compute_uv=False)
        if s[-1] >= min_rel_sv * s[0]:
            return t


def random_symmetric_invertible(rng: np.random.Generator, k: int) -> np.ndarray:
    # eigenvalues bounded away from 0: |eig| in [0.5, 2]
    o = random_orthogonal(rng, k)
    eigs = rng.uniform(0.5, 2.0, k) * rng.choice([-1.0, 1.0], k)
    return o @ np.diag(eigs) @ o.T


def random_quadric(rng: np.random.Generator, n: int) -> Quadric:
    return Quadric(n=n, matrix=random_symmetric_invertible(rng, n + 1))


def random_pair(rng: np.random.Generator, n: int, m: int) -> MPair:
    # split one well-conditioned basis of the ambient space
    frame = random_orthogonal(rng, n + 1)
    return MPair(
        p=subspace_from_points(frame[:, : m + 1].T),
        p_star=subspace_from_points(frame[:, m + 1 :].T),
    )


def random_polar_pair(
    rng: np.random.Generator, quadric: Quadric, m: int, min_rel_sv: float = 0.3
) -> MPair:
    """Random p with its polar conjugate, rejecting near-tangent draws."""
    n = quadric.n
    while True:
        p = random_subspace(rng, n, m)
        x = p.coord_matrix
        s = np.linalg.svd(x.T @ quadric.matrix @ x, compute_uv=False)
        if s[-1] >= min_rel_sv * s[0]:
            return MPair(p=p, p_star=polar_conjugate(p, quadric))


def random_block_metrics(rng: np.random.Generator, m: int, n: int) -> BlockMetrics:
    g_ab = random_symmetric_invertible(rng, m + 1)
    g_ij = random_symmetric_invertible(rng, n - m)
    return BlockMetrics(m=m, n=n, g_ab=g_ab, g_ij=g_ij, g_ab_inv=np.linalg.inv(g_ab))


def random_lambda(rng: np.random.Generator, m: int, n: int) -> FundamentalTensor:
    return FundamentalTensor(m=m, n=n, lam=rng.standard_normal((m + 1, m + 1, n - m, n - m)))


def pair_symmetrized(tensor: FundamentalTensor) -> FundamentalTensor:
    sym = 0.5 * (tensor.lam + tensor.lam.transpose(1, 0, 3, 2))
    return FundamentalTensor(m=tensor.m, n=tensor.n, lam=sym)


def random_direction(rng: np.random.Generator, m: int, n: int) -> TangentDirection:
    d = rng.standard_normal((n - m, m + 1))
    return TangentDirection(m=m, n=n, d=d / np.max(np.abs(d)))
