"""
What makes the polar normalization special
==========================================

Two residuals separate polar normalizations from arbitrary ones.  The
fundamental tensor of a polar map satisfies a quadratic closure
identity (homogeneity), and its induced metric is covariantly constant
along the manifold.  Generic tensors fail the first; the second is
checked here by differentiating the estimated tensor field.
"""

import numpy as np

from grassnorm import (
    FundamentalTensor,
    MPair,
    Quadric,
    TangentDirection,
    adapted_frame,
    block_metrics,
    covariant_derivative_estimate,
    homogeneity_residual,
    is_homogeneous,
    polar_conjugate,
    polar_lambda,
    polar_map,
    subspace_from_points,
)

m, n = 1, 3
quadric = Quadric(n=n, matrix=np.diag([1.0, 0.5, 2.0, 1.0]))
p = subspace_from_points([[1, 0, 0.1, -0.2], [0, 1, 0.3, 0.1]])
pair = MPair(p=p, p_star=polar_conjugate(p, quadric))

# homogeneity: the polar tensor closes on itself quadratically
lam = polar_lambda(block_metrics(adapted_frame(pair), quadric, m))
print("polar tensor homogeneity residual:", homogeneity_residual(lam))
print("is_homogeneous:", is_homogeneous(lam))

rng = np.random.default_rng(11)
generic = FundamentalTensor(m=m, n=n, lam=rng.standard_normal((m + 1, m + 1, n - m, n - m)))
print("generic tensor homogeneity residual:", homogeneity_residual(generic))
print("is_homogeneous:", is_homogeneous(generic))
print()

# covariant constancy: move the base pair along a tangent direction,
# transport the frame, re-estimate the tensor field, differentiate
direction = TangentDirection(m=m, n=n, d=np.array([[0.6, -0.2], [0.1, 0.4]]))
nu = polar_map(quadric)
for eps in (1e-3, 1e-4):
    grad = covariant_derivative_estimate(nu, pair, direction, eps=eps)
    print(f"covariant derivative, eps={eps:g}: max abs = {np.max(np.abs(grad)):.3e}")

# the identity quadric in an adapted position is exactly stationary
flat_quadric = Quadric(n=n, matrix=np.eye(n + 1))
p0 = subspace_from_points([[1, 0, 0, 0], [0, 1, 0, 0]])
pair0 = MPair(p=p0, p_star=polar_conjugate(p0, flat_quadric))
grad0 = covariant_derivative_estimate(polar_map(flat_quadric), pair0, direction, eps=1e-4)
print("identity quadric at a coordinate pair:", np.max(np.abs(grad0)))
