"""
The flat chart of a zero-rank normalization
===========================================

Fixing one complementary subspace once and for all (a constant
normalization) has a vanishing fundamental tensor, so the induced
geometry is flat.  The subspaces away from the fixed one then carry
global affine coordinates: a matrix of chart entries, computed by a
stereographic-style projection.
"""

import numpy as np

from grassnorm import (
    flatness_report,
    inverse_projection,
    stereographic_projection,
    subspace_from_points,
)

# everything the flat case promises, as exact zeros
for m, n in ((0, 2), (1, 3), (2, 5)):
    print(f"G({m},{n}):", flatness_report(m, n))
print()

# chart coordinates of a line in P^3, centered away from a fixed line
p_star = subspace_from_points([[0, 0, 1, 0], [0, 0, 0, 1]])
p = subspace_from_points([[1, 0, 0.25, 1.0], [0, 1, -0.5, 0.75]])

b = stereographic_projection(p, p_star)
print("chart matrix B:")
print(b.b)

# the chart inverts exactly: rebuild the subspace and compare as sets
# of points, not as matrices
back = inverse_projection(b, p_star)
print("round trip recovers p:", back.same_as(p, atol=1e-12))


def projector(sub):
    q, _ = np.linalg.qr(sub.coord_matrix)
    return q @ q.T


print("projector gap:", np.max(np.abs(projector(back) - projector(p))))

# straight lines in the chart are one-parameter families of subspaces;
# the affine structure means midpoints are midpoints
b2 = stereographic_projection(
    subspace_from_points([[1, 0, -0.3, 0.2], [0, 1, 0.6, -0.1]]), p_star
)
mid = type(b)(m=b.m, n=b.n, b=0.5 * (b.b + b2.b))
mid_sub = inverse_projection(mid, p_star)
print("midpoint chart coords:")
print(stereographic_projection(mid_sub, p_star).b)
