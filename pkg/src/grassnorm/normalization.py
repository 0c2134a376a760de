"""Normalizations of the Grassmannian and their fundamental tensors.

A normalization assigns to each m-dimensional subspace p a complement
p_star of dimension n - m - 1.  Its first-order behaviour at a pair
(p, p_star) is captured by the fundamental tensor lam[alpha][beta][i][j]
with Greek indices on p's frame points (0..m) and Latin indices on
p_star's frame points (stored with offset, 0..n-m-1): when p's point
beta moves toward p_star's point j, p_star's point i responds toward
p's point alpha with coefficient lam[alpha][beta][i][j].

Flattening the tensor to a rho x rho matrix over row (alpha, i) and
column (beta, j), rho = (m + 1)(n - m), gives the rank of the
normalizing map.  The symmetric part in the simultaneous exchange
(alpha, i) <-> (beta, j) is the metric tensor of the normalization; the
normalization is harmonic when the tensor equals that symmetric part.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import DimensionMismatch, FramingFailure, MapUndefined
from .linalg import RANK_RTOL, min_max_singular, svd_rank
from .projective_core import MPair, Subspace, adapted_frame, subspace_from_points

#: default displacement step for finite-difference estimation
DEFAULT_EPS = 1e-5


def _check_grassmann_dims(m: int, n: int):
    if not (0 <= m <= n - 1):
        raise DimensionMismatch(f"require 0 <= m <= n - 1, got m={m}, n={n}")


def _frozen_tensor(t, m: int, n: int, name: str) -> np.ndarray:
    arr = np.asarray(t, dtype=float)
    expected = (m + 1, m + 1, n - m, n - m)
    if arr.shape != expected:
        raise DimensionMismatch(f"{name} must have shape {expected}, got {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise ValueError(f"{name} contains non-finite entries")
    arr = np.ascontiguousarray(arr)
    arr.flags.writeable = False
    return arr


@dataclass(frozen=True)
class FundamentalTensor:
    """Fundamental tensor lam[alpha][beta][i][j] of a normalization."""

    m: int
    n: int
    lam: np.ndarray

    def __post_init__(self):
        _check_grassmann_dims(self.m, self.n)
        object.__setattr__(self, "lam", _frozen_tensor(self.lam, self.m, self.n, "lam"))

    @property
    def rho(self) -> int:
        return (self.m + 1) * (self.n - self.m)

    def flattened(self) -> np.ndarray:
        """rho x rho matrix over row (alpha, i), column (beta, j)."""
        return self.lam.transpose(0, 2, 1, 3).reshape(self.rho, self.rho)


@dataclass(frozen=True)
class MetricTensor:
    """Pair-symmetric tensor g[alpha][beta][i][j] of a normalization."""

    m: int
    n: int
    g: np.ndarray

    def __post_init__(self):
        _check_grassmann_dims(self.m, self.n)
        g = np.asarray(self.g, dtype=float)
        sym = 0.5 * (g + g.transpose(1, 0, 3, 2))
        object.__setattr__(self, "g", _frozen_tensor(sym, self.m, self.n, "g"))

    @property
    def rho(self) -> int:
        return (self.m + 1) * (self.n - self.m)

    def flattened(self) -> np.ndarray:
        return self.g.transpose(0, 2, 1, 3).reshape(self.rho, self.rho)


@dataclass(frozen=True)
class TangentDirection:
    """Displacement coefficients d[i][alpha] of p's spanning points."""

    m: int
    n: int
    d: np.ndarray

    def __post_init__(self):
        _check_grassmann_dims(self.m, self.n)
        arr = np.asarray(self.d, dtype=float)
        expected = (self.n - self.m, self.m + 1)
        if arr.shape != expected:
            raise DimensionMismatch(f"direction must have shape {expected}, got {arr.shape}")
        if not np.all(np.isfinite(arr)):
            raise ValueError("direction contains non-finite entries")
        arr = np.ascontiguousarray(arr)
        arr.flags.writeable = False
        object.__setattr__(self, "d", arr)


@dataclass(frozen=True)
class NormalizingMap:
    """A map assigning to each m-subspace a complementary subspace."""

    fn: Callable[[Subspace], Subspace]
    tag: str

    def __call__(self, p: Subspace) -> Subspace:
        return self.fn(p)


def constant_map(p_star: Subspace) -> NormalizingMap:
    """Normalization sending every subspace to the same complement."""
    return NormalizingMap(
        fn=lambda p: p_star,
        tag=f"constant:n{p_star.ambient_n}:dim{p_star.dim}",
    )


def symmetrize_metric(lam: FundamentalTensor) -> MetricTensor:
    """Metric g = (lam + lam with both index pairs exchanged) / 2."""
    g = 0.5 * (lam.lam + lam.lam.transpose(1, 0, 3, 2))
    return MetricTensor(m=lam.m, n=lam.n, g=g)


def lambda_rank(lam: FundamentalTensor, rtol: float = RANK_RTOL, atol: float = 0.0) -> int:
    """Rank of the flattened tensor, the rank of the normalizing map.

    atol sets an absolute singular-value floor, useful for tensors
    estimated by finite differences (use about 10 * eps).
    """
    return svd_rank(lam.flattened(), rtol=rtol, atol=atol)


def metric_rank(g: MetricTensor, rtol: float = RANK_RTOL, atol: float = 0.0) -> int:
    """Rank of the flattened metric tensor."""
    return svd_rank(g.flattened(), rtol=rtol, atol=atol)


def isotropic_dimension(g: MetricTensor, rtol: float = RANK_RTOL, atol: float = 0.0) -> int:
    """Dimension rho - rank(g) of the null distribution of the metric."""
    return g.rho - metric_rank(g, rtol=rtol, atol=atol)


def harmonic_defect(lam: FundamentalTensor) -> float:
    """Max-abs deviation of lam from its pair-symmetric part."""
    return float(np.max(np.abs(lam.lam - lam.lam.transpose(1, 0, 3, 2)), initial=0.0))


def is_harmonic(lam: FundamentalTensor, tol: float = 1e-9) -> bool:
    """True when lam is pair-symmetric relative to its own scale."""
    scale = float(np.max(np.abs(lam.lam), initial=0.0))
    return harmonic_defect(lam) <= tol * scale


def is_asymptotic_direction(direction: TangentDirection, tol: float = 1e-9) -> bool:
    """True when the direction matrix has rank at most one.

    Checks all 2 x 2 minors of d against tol times the squared max-abs
    entry.  Rank-one directions are exactly the decomposable ones, fixed
    by every translation of the flat chart in the rank-zero case.
    """
    d = direction.d
    scale = float(np.max(np.abs(d), initial=0.0))
    minors = np.abs(
        d[:, None, :, None] * d[None, :, None, :] - d[:, None, None, :] * d[None, :, :, None]
    )
    return float(np.max(minors, initial=0.0)) <= tol * scale * scale


def _displaced_subspace(frame: np.ndarray, m: int, beta: int, j: int, step: float) -> Subspace:
    cols = frame[:, : m + 1].copy()
    cols[:, beta] = cols[:, beta] + step * frame[:, m + 1 + j]
    return subspace_from_points([cols[:, b] for b in range(m + 1)])


def _complement_in_frame(frame: np.ndarray, m: int, p_star: Subspace) -> np.ndarray:
    """Top block of p_star's coordinates in the frame, normalized to (C; I)."""
    coords = np.linalg.solve(frame, p_star.coord_matrix)
    top, bottom = coords[: m + 1, :], coords[m + 1 :, :]
    smin, smax = min_max_singular(bottom)
    if smax == 0.0 or smin <= RANK_RTOL * smax:
        raise FramingFailure("displaced complement is not transverse to the reference frame")
    return np.linalg.solve(bottom.T, top.T).T


def _apply_map(nu: NormalizingMap, p: Subspace, n: int, m: int) -> Subspace:
    try:
        star = nu(p)
    except Exception as exc:
        raise MapUndefined(f"normalizing map failed at a displaced subspace: {exc}") from exc
    if star.ambient_n != n or star.dim != n - m - 1:
        raise MapUndefined("normalizing map returned a wrong-dimensional subspace")
    return star


def estimate_fundamental_tensor_in_frame(
    nu: NormalizingMap, frame: np.ndarray, m: int, eps: float = DEFAULT_EPS
) -> np.ndarray:
    """Fundamental tensor components of nu in a given adapted frame.

    The frame's first m + 1 columns must span the subspace p and the
    remaining columns its complement nu(p).  Returns the raw component
    array lam[alpha][beta][i][j]; see estimate_fundamental_tensor.
    """
    if eps <= 0.0:
        raise ValueError("eps must be positive")
    n = frame.shape[0] - 1
    lam = np.zeros((m + 1, m + 1, n - m, n - m))
    for beta in range(m + 1):
        for j in range(n - m):
            tops = []
            for step in (eps, -eps):
                p_disp = _displaced_subspace(frame, m, beta, j, step)
                star = _apply_map(nu, p_disp, n, m)
                tops.append(_complement_in_frame(frame, m, star))
            lam[:, beta, :, j] = (tops[0] - tops[1]) / (2.0 * eps)
    return lam


def estimate_fundamental_tensor(
    nu: NormalizingMap, pair: MPair, eps: float = DEFAULT_EPS
) -> FundamentalTensor:
    """Estimate the fundamental tensor of nu at the pair (p, nu(p)).

    For each Greek-Latin direction (beta, j) the subspace p is displaced
    by moving frame point beta of the pair's adapted frame by +/- eps
    times frame point m + 1 + j.  The displaced complement nu(p') is
    expressed in the adapted frame as columns (C; I); central
    differencing of C across the two displacements gives
    lam[alpha][beta][i][j] with O(eps^2) truncation.
    """
    m, n = pair.m, pair.ambient_n
    frame = adapted_frame(pair).frame_matrix
    lam = estimate_fundamental_tensor_in_frame(nu, frame, m, eps=eps)
    return FundamentalTensor(m=m, n=n, lam=lam)
