"""
Cross-ratio of two normalized subspaces
=======================================

A point-plus-complement pair in projective space plays the role a point
plays on the real line: four of them (two pairs) have a cross-ratio.
Here the cross-ratio is a matrix and its trace is the invariant.
"""

import numpy as np

from grassnorm import MPair, cr_log_distance, cross_ratio, subspace_from_points

# two pairs of (line, complementary line) in P^3
p = subspace_from_points([[1, 0, 0, 0], [0, 1, 0, 0]])
p_star = subspace_from_points([[0, 0, 1, 0], [0, 0, 0, 1]])
q = subspace_from_points([[1, 0, 0.3, 0], [0, 1, 0, 0.1]])
q_star = subspace_from_points([[0.2, 0, 1, 0], [0, -0.1, 0, 1]])

pair_a = MPair(p=p, p_star=p_star)
pair_b = MPair(p=q, p_star=q_star)

w = cross_ratio(pair_a, pair_b)
print("cross-ratio matrix:")
print(w.w)
print("trace:", w.trace)

# the trace does not depend on which points we picked to span each
# subspace: rescale and remix the spanning set of p and recompute
mix = np.array([[2.0, 1.0], [0.0, -0.5]])
p_remixed = subspace_from_points((p.coord_matrix @ mix).T)
w2 = cross_ratio(MPair(p=p_remixed, p_star=p_star), pair_b)
print("trace after respanning p:", w2.trace)
print("difference:", abs(w.trace - w2.trace))

# a projective transformation moves all four subspaces at once;
# the trace stays put (the matrix itself only changes by conjugation)
t = np.array([
    [1.0, 0.2, 0.0, 0.0],
    [0.0, 1.0, 0.0, 0.3],
    [0.1, 0.0, 1.0, 0.0],
    [0.0, 0.0, -0.2, 1.0],
])


def push(sub):
    return subspace_from_points((t @ sub.coord_matrix).T)


moved_a = MPair(p=push(p), p_star=push(p_star))
moved_b = MPair(p=push(q), p_star=push(q_star))
w3 = cross_ratio(moved_a, moved_b)
print("trace after a projective map:", w3.trace)
print("difference:", abs(w.trace - w3.trace))

# when the trace is positive the pairs have a distance, the logarithm
# of the normalized trace scaled by the subspace dimension
d = cr_log_distance(pair_a, pair_b)
print("log distance between the pairs:", d)
print("distance to itself:", cr_log_distance(pair_a, pair_a))
