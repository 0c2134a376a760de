"""
Curvature of the induced connection
===================================

Once a normalization's fundamental tensor is known at a pair, the
connection it induces has a curvature tensor that is quadratic-free:
every slot is filled by Kronecker deltas against the tensor itself.
The Ricci tensor follows by contraction, and its symmetry is tied to a
trace condition on the tensor (harmonicity).
"""

import numpy as np

from grassnorm import (
    FundamentalTensor,
    curvature_tensor,
    harmonic_defect,
    is_harmonic,
    ricci_from_curvature,
    ricci_tensor,
)

rng = np.random.default_rng(7)
m, n = 1, 3

# a generic tensor, then its pair-symmetrized version
lam = rng.standard_normal((m + 1, m + 1, n - m, n - m))
generic = FundamentalTensor(m=m, n=n, lam=lam)
symmetric = FundamentalTensor(m=m, n=n, lam=0.5 * (lam + lam.transpose(1, 0, 3, 2)))

for label, ft in (("generic", generic), ("symmetrized", symmetric)):
    curv = curvature_tensor(ft)
    ric = ricci_tensor(ft)
    print(f"[{label}]")
    print("  curvature shape:", curv.r.shape)
    print("  harmonic defect:", harmonic_defect(ft))
    print("  harmonic:", is_harmonic(ft, tol=1e-12))
    asym = np.max(np.abs(ric.ric - ric.ric.transpose(1, 0, 3, 2)))
    print("  ricci asymmetry:", asym)
    print("  ricci symmetric:", ric.is_symmetric(1e-12))

# contracting the curvature reproduces the direct Ricci formula
curv = curvature_tensor(generic)
direct = ricci_tensor(generic).ric
contracted = ricci_from_curvature(curv).ric
print("contraction vs direct formula:", np.max(np.abs(direct - contracted)))

# curvature is antisymmetric in its two covariant index pairs
r = curv.r
print("pair antisymmetry residual:", np.max(np.abs(r + r.transpose(0, 1, 3, 2, 4, 5, 7, 6))))
