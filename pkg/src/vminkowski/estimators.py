"""scikit-learn style front end.

Example
-------
>>> from vminkowski.estimators import MinkowskiSum
>>> est = MinkowskiSum().fit([[0, 0], [1, 0]], [[0, 0], [2, 0]])
>>> est.vertices_.tolist()
[[Fraction(0, 1), Fraction(0, 1)], [Fraction(3, 1), Fraction(0, 1)]]
"""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from ._validation import check_points, check_polytope, to_object_array
from .core import VPolytope
from .engine import METHODS, extreme_points, minkowski_sum

__all__ = ["MinkowskiSum", "ExtremePointFilter"]


class MinkowskiSum(BaseEstimator):
    """Vertex set of the Minkowski sum of two V-polytopes.

    Parameters
    ----------
    method : {"uniqueness", "separation"}, default="uniqueness"
        LP used to classify each candidate pair.
    n_jobs : int, default=1
        Worker processes for pair classification.
    reduce_inputs : bool, default=False
        Strip non-extreme points from both operands before summing. The
        result is the same either way; reducing only shrinks the LPs.

    Attributes
    ----------
    vertices_ : ndarray of shape (n_vertices, n_features), dtype=object
        Exact vertices of ``A + B``.
    decomposition_ : ndarray of shape (n_vertices, 2)
        ``(u, v)`` indices of the operand points summing to each vertex,
        relative to the operands actually used (after reduction, if any).
    verdicts_ : tuple of PairVerdict
    result_ : MinkowskiSumResult
    n_features_in_ : int
    """

    def __init__(self, method="uniqueness", n_jobs=1, reduce_inputs=False):
        self.method = method
        self.n_jobs = n_jobs
        self.reduce_inputs = reduce_inputs

    def fit(self, A, B):
        """Compute ``A + B``. ``B`` takes the place of ``y``."""
        if self.method not in METHODS:
            raise ValueError(f"method must be one of {METHODS}, got {self.method!r}")
        A = check_polytope(A, name="A")
        B = check_polytope(B, dim=A.dim, name="B")
        if self.reduce_inputs:
            A = VPolytope(extreme_points(A.points)[0])
            B = VPolytope(extreme_points(B.points)[0])
        self.result_ = minkowski_sum(A, B, method=self.method, n_jobs=self.n_jobs)
        self.vertices_ = to_object_array(self.result_.vertices)
        self.decomposition_ = np.array(
            [self.result_.decomposition[p] for p in self.result_.vertices], dtype=int
        )
        self.verdicts_ = self.result_.verdicts
        self.n_features_in_ = A.dim
        return self

    def fit_transform(self, A, B):
        return self.fit(A, B).vertices_

    def to_polytope(self) -> VPolytope:
        check_is_fitted(self, "result_")
        return self.result_.C


class ExtremePointFilter(TransformerMixin, BaseEstimator):
    """Drop points that are not extreme in the convex hull of their cloud.

    ``transform`` filters whatever cloud it is given, so the transformer
    is stateless apart from recording ``support_`` for the fitted cloud.

    Attributes
    ----------
    support_ : ndarray of bool
        Mask of extreme rows in the data passed to ``fit``.
    verdicts_ : list of ExtremeVerdict
    n_features_in_ : int
    """

    def fit(self, X, y=None):
        pts = check_points(X)
        _, self.verdicts_ = extreme_points(pts)
        self.support_ = np.array([v.is_extreme for v in self.verdicts_], dtype=bool)
        self.n_features_in_ = len(pts[0])
        return self

    def transform(self, X):
        check_is_fitted(self, "support_")
        pts = check_points(X, dim=self.n_features_in_)
        kept, _ = extreme_points(pts)
        return to_object_array(kept)

    def fit_transform(self, X, y=None, **fit_params):
        pts = check_points(X)
        self.fit(pts)
        return to_object_array([p for p, keep in zip(pts, self.support_) if keep])
