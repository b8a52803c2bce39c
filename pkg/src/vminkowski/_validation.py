"""Input validation helpers for the estimator API.

These play the role of :func:`sklearn.utils.check_array` but keep
coordinates exact instead of casting to float.
"""

from __future__ import annotations

from typing import List, Optional

import numpy as np

from .core import DimensionMismatchError, Point, VPolytope, as_point


def check_points(X, *, dim: Optional[int] = None, name: str = "X") -> List[Point]:
    """Convert an array-like of points to a list of exact tuples.

    Accepts a :class:`VPolytope`, a 2-D numpy array (any numeric or object
    dtype) or a nested sequence. Duplicates are allowed here.
    """
    if isinstance(X, VPolytope):
        pts = list(X.points)
    else:
        if isinstance(X, np.ndarray):
            if X.ndim != 2:
                raise ValueError(f"{name} must be 2-D, got shape {X.shape}")
            X = X.tolist()
        pts = [as_point(row) for row in X]
    if not pts:
        raise ValueError(f"{name} has no points")
    n = len(pts[0]) if dim is None else dim
    for i, p in enumerate(pts):
        if len(p) != n:
            raise DimensionMismatchError(
                f"{name}[{i}] has {len(p)} coordinates, expected {n}"
            )
    return pts


def check_polytope(X, *, dim: Optional[int] = None, name: str = "X") -> VPolytope:
    if isinstance(X, VPolytope) and (dim is None or X.dim == dim):
        return X
    return VPolytope(check_points(X, dim=dim, name=name))


def to_object_array(points) -> np.ndarray:
    """2-D ``object`` array of Fractions; never casts to float."""
    points = list(points)
    out = np.empty((len(points), len(points[0]) if points else 0), dtype=object)
    for i, p in enumerate(points):
        out[i, :] = p
    return out
