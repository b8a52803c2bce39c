"""Exact scalars, points, V-polytopes and candidate-sum generation."""

from __future__ import annotations

import math
import numbers
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, NamedTuple, Sequence, Tuple

__all__ = [
    "Point",
    "VPolytope",
    "CandidatePair",
    "DimensionMismatchError",
    "DuplicatePointError",
    "as_scalar",
    "format_scalar",
    "as_point",
    "point_add",
    "candidate_sums",
]

#: A point of R^n with exact rational coordinates.
Point = Tuple[Fraction, ...]


class DimensionMismatchError(ValueError):
    """Raised when points or polytopes of different dimensions are combined."""


class DuplicatePointError(ValueError):
    """Raised when a V-polytope is given the same point twice."""


def as_scalar(value) -> Fraction:
    """Convert ``value`` to an exact :class:`~fractions.Fraction`.

    Accepts fractions, integers (including numpy integers), strings of the
    form ``"p/q"``, ``"p"`` or a finite decimal such as ``"0.25"``, and finite
    floats. Floats go through their shortest decimal ``repr`` so that ``0.1``
    becomes ``1/10`` rather than the nearest binary fraction.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not accepted as coordinates")
    if isinstance(value, numbers.Integral):
        return Fraction(int(value))
    if isinstance(value, str):
        text = value.strip()
        if not text:
            raise ValueError("empty scalar token")
        try:
            out = Fraction(text)
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"invalid scalar token {value!r}") from exc
        return out
    if isinstance(value, numbers.Rational):
        return Fraction(value.numerator, value.denominator)
    if isinstance(value, numbers.Real):
        x = float(value)
        if not math.isfinite(x):
            raise ValueError(f"non-finite coordinate {value!r}")
        return Fraction(repr(x))
    raise TypeError(f"cannot interpret {type(value).__name__} as a rational scalar")


def format_scalar(x: Fraction) -> str:
    """Canonical text form: ``"p/q"`` in lowest terms, or ``"p"`` for integers."""
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def as_point(coords: Iterable) -> Point:
    return tuple(as_scalar(c) for c in coords)


def point_add(p: Sequence[Fraction], q: Sequence[Fraction]) -> Point:
    """Coordinate-wise exact sum of two points of equal dimension."""
    if len(p) != len(q):
        raise DimensionMismatchError(
            f"cannot add points of dimension {len(p)} and {len(q)}"
        )
    return tuple(Fraction(a) + b for a, b in zip(p, q))


@dataclass(frozen=True)
class VPolytope:
    """A polytope given as the convex hull of a finite point list.

    Parameters
    ----------
    points : sequence of array-like
        The generating points. Coordinates are converted exactly with
        :func:`as_scalar`. Points need not be extreme, but duplicates are
        rejected so that indices into ``points`` stay unambiguous.
    dim : int, optional
        Ambient dimension. Inferred from the first point when omitted.
    """

    points: Tuple[Point, ...]
    dim: int = None  # type: ignore[assignment]

    def __post_init__(self):
        pts = tuple(as_point(p) for p in self.points)
        if not pts:
            raise ValueError("a V-polytope needs at least one point")
        dim = len(pts[0]) if self.dim is None else int(self.dim)
        if dim < 1:
            raise ValueError(f"dimension must be positive, got {dim}")
        seen = {}
        for i, p in enumerate(pts):
            if len(p) != dim:
                raise DimensionMismatchError(
                    f"point {i} has {len(p)} coordinates, expected {dim}"
                )
            if p in seen:
                raise DuplicatePointError(
                    f"point {i} duplicates point {seen[p]}: "
                    + " ".join(format_scalar(c) for c in p)
                )
            seen[p] = i
        object.__setattr__(self, "points", pts)
        object.__setattr__(self, "dim", dim)

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def __getitem__(self, i) -> Point:
        return self.points[i]

    def translate(self, t: Sequence) -> "VPolytope":
        t = as_point(t)
        return VPolytope([point_add(p, t) for p in self.points])

    def scale(self, factor) -> "VPolytope":
        f = as_scalar(factor)
        return VPolytope([tuple(f * c for c in p) for p in self.points])


class CandidatePair(NamedTuple):
    """Indices ``(u, v)`` into the two operands and the candidate ``a_u + b_v``."""

    u: int
    v: int
    sum: Point


def candidate_sums(A: VPolytope, B: VPolytope) -> list[CandidatePair]:
    """All ``k * l`` pairwise sums, ``u`` outer and ``v`` inner.

    Coordinate-equal sums coming from different pairs are all kept.
    """
    if A.dim != B.dim:
        raise DimensionMismatchError(
            f"operands live in R^{A.dim} and R^{B.dim}"
        )
    return [
        CandidatePair(u, v, point_add(a, b))
        for u, a in enumerate(A.points)
        for v, b in enumerate(B.points)
    ]
