"""Convex bodies generated by sublinear expectations of probability measures."""

from .distributions import (
    AffineLaw,
    BallMarginalLaw,
    DomainError,
    EmpiricalLaw,
    MaxLaw,
    PiecewiseLinearLaw,
    ScalarLaw,
    SumOfUniformsLaw,
    WeightedSample,
    independent_sum,
    max_law,
    uniform_law,
)
from .geometry import (
    BodyEstimate,
    DirectionGrid,
    Halfspace,
    Polygon2,
    SupportField,
    aumann_integral,
    body_from_support,
    contains,
    convex_hull,
    exact_avg_quantile_body,
    halfspace_intersection,
    hausdorff,
    minkowski_sum,
    polar,
    support_touchpoint,
)
from .risk import (
    AvgQuantile,
    EssSup,
    Expectile,
    ExpectationSpec,
    MaxExt,
    Mean,
    OneSidedMoment,
    Spectral,
    SpectralMeasure,
    avg_quantile,
    avg_quantiles,
    ess_sup,
    evaluate,
    expectile,
    kusuoka_sup,
    one_sided_moment,
    orlicz_norm,
    spec_from_json,
    spectral_density,
    spectral_value,
)
from .shapes import (
    BallShape,
    BoxShape,
    ConvexShape,
    EllipseShape,
    L1BallShape,
    PolygonShape,
    project_shape,
    sample_uniform,
    shape_from_json,
)

from .transforms import (
    AtomicDepthWarning,
    centroid_body,
    centroid_via_ulam,
    classical_centroid_body,
    depth_region,
    expectile_transform,
    expected_polytope,
    floating_like_body,
    integrated_depth,
    kusuoka_body,
    max_extension_spectral_family,
    support_field,
    ulam_floating,
)
from .verify import Check, Report, SUITES, run_suite
from .experiments import EXPERIMENTS

__version__ = "0.1.0"
