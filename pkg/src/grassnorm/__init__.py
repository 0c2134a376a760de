"""Differential geometry of normalized Grassmann manifolds.

Subspaces of projective space, complementary m-pairs, cross-ratio
invariants, fundamental tensors of normalizing maps, the induced affine
connection with its curvature and Ricci tensors, polar normalization by
nondegenerate quadrics, and the flat affine chart of rank-zero
normalizations.
"""

from .errors import (
    DegenerateBlock,
    DependentPoints,
    DimensionMismatch,
    FramingFailure,
    GeometryError,
    InvalidPair,
    MapUndefined,
    NonPositiveTrace,
    NotComplementary,
    NotInGeneralPosition,
    NotPolarAdapted,
    SingularFrame,
    TangentSubspace,
)
from .projective_core import (
    HomogeneousPoint,
    MaurerCartanForms,
    MPair,
    ProjectiveFrame,
    Subspace,
    TangentialCoords,
    adapted_frame,
    maurer_cartan_estimate,
    pair_is_valid,
    subspace_from_points,
    tangential_coordinates,
)
from .cross_ratio import CrossRatioMatrix, cr_log_distance, cross_ratio
from .normalization import (
    FundamentalTensor,
    MetricTensor,
    NormalizingMap,
    TangentDirection,
    constant_map,
    estimate_fundamental_tensor,
    estimate_fundamental_tensor_in_frame,
    harmonic_defect,
    is_asymptotic_direction,
    is_harmonic,
    isotropic_dimension,
    lambda_rank,
    metric_rank,
    symmetrize_metric,
)
from .connection import (
    CurvatureTensor,
    RicciTensor,
    covariant_derivative_estimate,
    curvature_tensor,
    homogeneity_residual,
    is_homogeneous,
    ricci_from_curvature,
    ricci_tensor,
)
from .polar import (
    BlockMetrics,
    CovariantCurvature,
    EinsteinResult,
    Quadric,
    adjust_curvature_indices,
    block_metrics,
    covariant_curvature,
    einstein_check,
    polar_conjugate,
    polar_lambda,
    polar_map,
    ricci_proportionality,
)
from .segre_affine import (
    AffineChartPoint,
    chart_frame,
    flatness_report,
    inverse_projection,
    stereographic_projection,
)

__version__ = "0.1.0"

__all__ = [
    "AffineChartPoint",
    "BlockMetrics",
    "CovariantCurvature",
    "CrossRatioMatrix",
    "CurvatureTensor",
    "DegenerateBlock",
    "DependentPoints",
    "DimensionMismatch",
    "EinsteinResult",
    "FramingFailure",
    "FundamentalTensor",
    "GeometryError",
    "HomogeneousPoint",
    "InvalidPair",
    "MPair",
    "MapUndefined",
    "MaurerCartanForms",
    "MetricTensor",
    "NonPositiveTrace",
    "NormalizingMap",
    "NotComplementary",
    "NotInGeneralPosition",
    "NotPolarAdapted",
    "ProjectiveFrame",
    "Quadric",
    "RicciTensor",
    "SingularFrame",
    "Subspace",
    "TangentDirection",
    "TangentSubspace",
    "TangentialCoords",
    "adapted_frame",
    "adjust_curvature_indices",
    "block_metrics",
    "chart_frame",
    "constant_map",
    "covariant_curvature",
    "covariant_derivative_estimate",
    "cr_log_distance",
    "cross_ratio",
    "curvature_tensor",
    "einstein_check",
    "estimate_fundamental_tensor",
    "estimate_fundamental_tensor_in_frame",
    "flatness_report",
    "harmonic_defect",
    "homogeneity_residual",
    "inverse_projection",
    "is_asymptotic_direction",
    "is_harmonic",
    "is_homogeneous",
    "isotropic_dimension",
    "lambda_rank",
    "maurer_cartan_estimate",
    "metric_rank",
    "pair_is_valid",
    "polar_conjugate",
    "polar_lambda",
    "polar_map",
    "ricci_from_curvature",
    "ricci_proportionality",
    "ricci_tensor",
    "stereographic_projection",
    "subspace_from_points",
    "symmetrize_metric",
    "tangential_coordinates",
    "__version__",
]
