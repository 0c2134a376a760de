"""Polar normalization by a nondegenerate quadric.

A symmetric invertible matrix G on homogeneous coordinates defines the
polarity p -> null(X^T G): the polar of an m-subspace is the
(n - m - 1)-subspace of points conjugate to all of p.  Wherever p is not
tangent to the quadric this is a complement, and the resulting
normalization has fundamental tensor

    lam[alpha][beta][i][j] = - g_ab_inv[alpha][beta] * g_ij[i][j]

built from the two diagonal blocks of G restricted to an adapted frame.
The tensor is harmonic, covariantly constant, and Einstein: its Ricci
tensor equals (n - 1)/2 times g_ab_inv (x) g_ij.

The fully covariant curvature (Greek indices raised with g_ab_inv,
Latin lowered with g_ij) has the closed form implemented by
covariant_curvature; adjust_curvature_indices performs the same raising
and lowering on a curvature tensor computed from any lam.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .connection import CurvatureTensor, ricci_tensor
from .errors import (
    DegenerateBlock,
    DimensionMismatch,
    NotPolarAdapted,
    TangentSubspace,
)
from .linalg import RANK_RTOL, as_float_matrix, min_max_singular, nullspace
from .normalization import FundamentalTensor, NormalizingMap
from .projective_core import ProjectiveFrame, Subspace, subspace_from_points


@dataclass(frozen=True)
class Quadric:
    """Nondegenerate quadric given by a symmetric matrix on P^n."""

    n: int
    matrix: np.ndarray

    def __post_init__(self):
        mat = as_float_matrix(self.matrix, "quadric matrix")
        k = self.n + 1
        if mat.shape != (k, k):
            raise DimensionMismatch(f"quadric matrix must be {k} x {k}, got {mat.shape}")
        scale = float(np.max(np.abs(mat), initial=0.0))
        if scale == 0.0 or float(np.max(np.abs(mat - mat.T))) > 1e-12 * scale:
            raise ValueError("quadric matrix must be symmetric and nonzero")
        smin, smax = min_max_singular(mat)
        if smin <= RANK_RTOL * smax:
            raise ValueError("quadric matrix is singular at the working tolerance")
        mat = 0.5 * (mat + mat.T)
        mat.flags.writeable = False
        object.__setattr__(self, "matrix", mat)


@dataclass(frozen=True)
class BlockMetrics:
    """Diagonal blocks of a quadric in a polar-adapted frame."""

    m: int
    n: int
    g_ab: np.ndarray      # (m+1) x (m+1), restriction to p's frame points
    g_ij: np.ndarray      # (n-m) x (n-m), restriction to p_star's frame points
    g_ab_inv: np.ndarray

    def __post_init__(self):
        gd, ld = self.m + 1, self.n - self.m
        for name, arr, k in (("g_ab", self.g_ab, gd), ("g_ij", self.g_ij, ld)):
            mat = as_float_matrix(arr, name)
            if mat.shape != (k, k):
                raise DimensionMismatch(f"{name} must be {k} x {k}, got {mat.shape}")
        for name in ("g_ab", "g_ij", "g_ab_inv"):
            mat = np.ascontiguousarray(np.asarray(getattr(self, name), dtype=float))
            mat.flags.writeable = False
            object.__setattr__(self, name, mat)


@dataclass(frozen=True)
class EinsteinResult:
    is_einstein: bool
    constant: float
    residual: float


def polar_conjugate(p: Subspace, quadric: Quadric) -> Subspace:
    """Polar complement of p: the null space of X^T G.

    Raises TangentSubspace when the restriction X^T G X is singular,
    i.e. when p touches the quadric and the polar is not a complement.
    """
    if p.ambient_n != quadric.n:
        raise DimensionMismatch("subspace and quadric live in different ambient spaces")
    x = p.coord_matrix
    restricted = x.T @ quadric.matrix @ x
    smin, smax = min_max_singular(restricted)
    if smax == 0.0 or smin <= RANK_RTOL * smax:
        raise TangentSubspace("subspace is tangent to the quadric")
    basis = nullspace(x.T @ quadric.matrix)
    return subspace_from_points([basis[:, k] for k in range(basis.shape[1])])


def polar_map(quadric: Quadric) -> NormalizingMap:
    """Normalizing map p -> polar_conjugate(p, quadric)."""
    return NormalizingMap(
        fn=lambda p: polar_conjugate(p, quadric),
        tag=f"polar:n{quadric.n}",
    )


def block_metrics(frame: ProjectiveFrame, quadric: Quadric, m: int) -> BlockMetrics:
    """Restrict the quadric to the two column groups of an adapted frame.

    The frame must be polar-adapted: the off-diagonal block of the Gram
    matrix vanishes relative to its overall scale, which holds for the
    adapted frame of any pair (p, polar_conjugate(p)).
    """
    if frame.ambient_n != quadric.n:
        raise DimensionMismatch("frame and quadric live in different ambient spaces")
    if not 0 <= m <= frame.ambient_n - 1:
        raise DimensionMismatch(f"m={m} out of range for ambient dimension {frame.ambient_n}")
    a = frame.frame_matrix
    gram = a.T @ quadric.matrix @ a
    gram = 0.5 * (gram + gram.T)
    scale = float(np.max(np.abs(gram), initial=0.0))
    cross = gram[m + 1 :, : m + 1]
    if float(np.max(np.abs(cross), initial=0.0)) > 1e-9 * scale:
        raise NotPolarAdapted("frame columns are not conjugate across the split")
    g_ab = gram[: m + 1, : m + 1]
    g_ij = gram[m + 1 :, m + 1 :]
    for name, block in (("g_ab", g_ab), ("g_ij", g_ij)):
        smin, smax = min_max_singular(block)
        if smax == 0.0 or smin <= RANK_RTOL * smax:
            raise DegenerateBlock(f"{name} block is singular at the working tolerance")
    return BlockMetrics(m=m, n=quadric.n, g_ab=g_ab, g_ij=g_ij, g_ab_inv=np.linalg.inv(g_ab))


def polar_lambda(bm: BlockMetrics) -> FundamentalTensor:
    """Closed-form fundamental tensor - g_ab_inv (x) g_ij of a polarity."""
    lam = -np.einsum("ab,ij->abij", bm.g_ab_inv, bm.g_ij)
    return FundamentalTensor(m=bm.m, n=bm.n, lam=lam)


@dataclass(frozen=True)
class CovariantCurvature:
    """Fully covariant curvature rc[a][b][c][e][i][j][k][l]."""

    m: int
    n: int
    rc: np.ndarray

    def __post_init__(self):
        gd, ld = self.m + 1, self.n - self.m
        expected = (gd, gd, gd, gd, ld, ld, ld, ld)
        arr = np.ascontiguousarray(np.asarray(self.rc, dtype=float))
        if arr.shape != expected:
            raise DimensionMismatch(f"covariant curvature must have shape {expected}")
        arr.flags.writeable = False
        object.__setattr__(self, "rc", arr)

    def max_abs(self) -> float:
        return float(np.max(np.abs(self.rc), initial=0.0))


def covariant_curvature(bm: BlockMetrics) -> CovariantCurvature:
    """Closed-form covariant curvature of the polar normalization:

    rc = ((g_ab_inv[a,b] g_ab_inv[c,e]) (g_ij[i,l] g_ij[j,k] - g_ij[i,k] g_ij[j,l])
          + (g_ab_inv[a,e] g_ab_inv[b,c] - g_ab_inv[a,c] g_ab_inv[b,e])
            g_ij[i,j] g_ij[k,l]) / 2
    """
    gi, gl = bm.g_ab_inv, bm.g_ij
    term_latin = np.einsum("il,jk->ijkl", gl, gl) - np.einsum("ik,jl->ijkl", gl, gl)
    term_greek = np.einsum("ae,bc->abce", gi, gi) - np.einsum("ac,be->abce", gi, gi)
    rc = 0.5 * (
        np.einsum("ab,ce,ijkl->abceijkl", gi, gi, term_latin)
        + np.einsum("abce,ij,kl->abceijkl", term_greek, gl, gl)
    )
    return CovariantCurvature(m=bm.m, n=bm.n, rc=rc)


def adjust_curvature_indices(curv: CurvatureTensor, bm: BlockMetrics) -> CovariantCurvature:
    """Raise the lower Greek index with g_ab_inv and lower the upper
    Latin index with g_ij, giving the fully covariant curvature."""
    if (curv.m, curv.n) != (bm.m, bm.n):
        raise DimensionMismatch("curvature and block metrics have different shapes")
    rc = np.einsum("aA,iI,IbceAjkl->abceijkl", bm.g_ab_inv, bm.g_ij, curv.r)
    return CovariantCurvature(m=bm.m, n=bm.n, rc=rc)


def ricci_proportionality(ric: np.ndarray, bm: BlockMetrics, tol: float = 1e-9) -> EinsteinResult:
    """Least-squares fit of ric against g_ab_inv (x) g_ij.

    The fitted multiple is the Einstein constant candidate; the check
    passes when the max-abs residual is below tol relative to the
    larger of 1 and the Ricci scale.
    """
    model = np.einsum("bc,jk->bcjk", bm.g_ab_inv, bm.g_ij)
    denom = float(np.sum(model * model))
    if denom == 0.0:
        raise DegenerateBlock("model tensor vanishes")
    c = float(np.sum(ric * model)) / denom
    residual = float(np.max(np.abs(ric - c * model), initial=0.0))
    scale = max(1.0, float(np.max(np.abs(ric), initial=0.0)))
    return EinsteinResult(is_einstein=bool(residual <= tol * scale), constant=c, residual=residual)


def einstein_check(bm: BlockMetrics, tol: float = 1e-9) -> EinsteinResult:
    """Check that the polar Ricci tensor is the constant (n - 1)/2 times
    g_ab_inv (x) g_ij, returning the fitted constant and residual."""
    ric = ricci_tensor(polar_lambda(bm)).ric
    return ricci_proportionality(ric, bm, tol=tol)
