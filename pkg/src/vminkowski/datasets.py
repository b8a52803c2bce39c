"""Random V-polytopes with small rational coordinates, for tests and benchmarks."""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Optional, Tuple, Union

from .core import VPolytope
from .engine import extreme_points

__all__ = ["random_cloud", "make_polytope", "make_polytope_pair", "make_sphere_polytope"]


def _rng(seed) -> random.Random:
    if isinstance(seed, random.Random):
        return seed
    return random.Random(seed)


def random_cloud(dim, n_points, *, max_denominator=8, radius=4, random_state=None):
    """``n_points`` distinct points with coordinates ``p/q``, ``1 <= q <= max_denominator``
    and ``|p/q| <= radius``."""
    rng = _rng(random_state)
    pts = {}
    while len(pts) < n_points:
        p = tuple(
            Fraction(rng.randint(-radius * q, radius * q), q)
            for q in (rng.randint(1, max_denominator) for _ in range(dim))
        )
        pts.setdefault(p, None)
    return list(pts)


def make_polytope(
    dim: int,
    n_vertices: Tuple[int, int] = (3, 10),
    *,
    cloud_size: Optional[int] = None,
    max_denominator: int = 8,
    radius: int = 4,
    random_state: Union[None, int, random.Random] = None,
    max_tries: int = 1000,
) -> VPolytope:
    """Hull of a random cloud, reduced to its extreme points.

    Clouds are redrawn until the vertex count falls in ``n_vertices``
    (inclusive bounds).
    """
    rng = _rng(random_state)
    lo, hi = n_vertices
    for _ in range(max_tries):
        size = cloud_size or rng.randint(lo, hi + 4)
        kept, _ = extreme_points(
            random_cloud(dim, size, max_denominator=max_denominator,
                         radius=radius, random_state=rng)
        )
        if lo <= len(kept) <= hi:
            return VPolytope(kept)
    raise RuntimeError(f"no {dim}-polytope with {lo}..{hi} vertices after {max_tries} draws")


def make_polytope_pair(dim, n_vertices=(3, 10), *, random_state=None, **kwargs):
    rng = _rng(random_state)
    return (
        make_polytope(dim, n_vertices, random_state=rng, **kwargs),
        make_polytope(dim, n_vertices, random_state=rng, **kwargs),
    )


def make_sphere_polytope(dim, n_vertices, *, max_denominator=8, radius=2, random_state=None):
    """``n_vertices`` rational points on the unit sphere of ``R^dim``.

    Points come from inverse stereographic projection of a random rational
    cloud in ``R^(dim-1)``, so every point is a vertex of the hull.
    """
    if dim < 2:
        raise ValueError("sphere polytopes need dim >= 2")
    rng = _rng(random_state)
    pts = {}
    while len(pts) < n_vertices:
        (x,) = random_cloud(dim - 1, 1, max_denominator=max_denominator,
                            radius=radius, random_state=rng)
        r2 = sum(c * c for c in x)
        p = tuple(2 * c / (r2 + 1) for c in x) + ((r2 - 1) / (r2 + 1),)
        pts.setdefault(p, None)
    return VPolytope(list(pts))
