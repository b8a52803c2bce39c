"""Exact vertex enumeration for Minkowski sums of V-polytopes.

The sum ``C = A + B`` of two polytopes given by point lists is the convex
hull of the ``k * l`` pairwise sums; each candidate ``a_u + b_v`` is
classified as a vertex of ``C`` or not by an exact linear program.
"""

from .core import (
    CandidatePair,
    DimensionMismatchError,
    DuplicatePointError,
    VPolytope,
    as_scalar,
    candidate_sums,
    format_scalar,
    point_add,
)
from .engine import (
    AlternativeDecomposition,
    ExtremeVerdict,
    MinkowskiSumResult,
    PairVerdict,
    SeparatingHyperplane,
    UniqueDecomposition,
    classify_pair,
    convex_hull_2d,
    extreme_points,
    is_vertex_by_separation,
    is_vertex_by_uniqueness,
    minkowski_sum,
    verify_extreme_verdict,
    verify_verdict,
)
from .formats import emit_report, parse_polytope
from .lp import LPOutcome, LPStatus, StandardFormLP, check_certificate, from_inequalities, solve

__version__ = "0.1.0"


def __getattr__(name):
    # sklearn is slow to import; load the estimator wrappers on first use.
    if name in ("MinkowskiSum", "ExtremePointFilter"):
        from . import estimators

        return getattr(estimators, name)
    raise AttributeError(f"module {__name__!r} has no attribute {name!r}")
