"""
Polar normalization and the Einstein property
=============================================

Normalizing by a nondegenerate quadric (each subspace mapped to its
polar) induces a metric on the manifold of subspaces.  That metric is
Einstein: the Ricci tensor is a constant multiple of it, and the
constant depends only on the ambient dimension.
"""

import numpy as np

from grassnorm import (
    MPair,
    Quadric,
    adapted_frame,
    block_metrics,
    einstein_check,
    polar_conjugate,
    polar_lambda,
    ricci_tensor,
    subspace_from_points,
    symmetrize_metric,
)

for n, m, diag in ((3, 1, [1.0, 1.0, 1.0, 1.0]), (4, 1, [2.0, 1.0, 0.5, 1.0, 3.0])):
    quadric = Quadric(n=n, matrix=np.diag(diag))
    point_rows = np.eye(n + 1)[: m + 1] + 0.1 * np.arange(1, (m + 1) * (n + 1) + 1).reshape(
        m + 1, n + 1
    ) / (n + 1)
    p = subspace_from_points(point_rows)
    pair = MPair(p=p, p_star=polar_conjugate(p, quadric))

    bm = block_metrics(adapted_frame(pair), quadric, m)
    result = einstein_check(bm)
    print(f"G({m},{n}) with quadric diag{tuple(diag)}:")
    print("  einstein:", result.is_einstein)
    print("  constant:", result.constant, " expected (n-1)/2 =", (n - 1) / 2)
    print("  residual:", result.residual)

    # the same proportionality checked by hand: ricci of the polar
    # tensor against the product of the two block metrics (the induced
    # metric is the negative of that product)
    lam = polar_lambda(bm)
    ric = ricci_tensor(lam).ric
    model = np.einsum("bc,jk->bcjk", bm.g_ab_inv, bm.g_ij)
    print("  max |ricci - constant * model|:", np.max(np.abs(ric - result.constant * model)))
    print("  metric is minus the model:", np.max(np.abs(symmetrize_metric(lam).g + model)))
    print()

# polarity really is an involution: the polar of the polar is p itself
quadric = Quadric(n=3, matrix=np.diag([1.0, 2.0, 1.0, 0.5]))
p = subspace_from_points([[1, 0.2, 0, 0.1], [0, 1, 0.3, 0]])
back = polar_conjugate(polar_conjugate(p, quadric), quadric)
print("involution check, p** == p:", back.same_as(p, atol=1e-10))
