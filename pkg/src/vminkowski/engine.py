"""Minkowski vertex classification and the sum driver.

Two independent linear programs decide whether a candidate ``a_u + b_v`` is
a vertex of ``C = A + B``:

* the *separation* test looks for a hyperplane isolating the candidate from
  every other pairwise sum (``f* > 0`` means vertex);
* the *uniqueness* test searches for a second way of writing the candidate
  as ``a' + b'`` with ``a'`` in ``A`` and ``b'`` in ``B`` by maximising
  ``2 - alpha_u - beta_v`` (``f* == 0`` means vertex).

Every verdict carries exact data that :func:`verify_verdict` re-checks
without calling the solver.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple, Union

from .core import (
    CandidatePair,
    DimensionMismatchError,
    Point,
    VPolytope,
    as_point,
    candidate_sums,
)
from .lp import LPStatus, StandardFormLP, from_inequalities, solve

__all__ = [
    "METHODS",
    "SeparatingHyperplane",
    "AlternativeDecomposition",
    "UniqueDecomposition",
    "ExtremeVerdict",
    "PairVerdict",
    "MinkowskiSumResult",
    "InternalLPError",
    "is_vertex_by_separation",
    "is_vertex_by_uniqueness",
    "decomposition_matrix",
    "classify_pair",
    "minkowski_sum",
    "extreme_points",
    "convex_hull_2d",
    "verify_verdict",
    "verify_extreme_verdict",
]

METHODS = ("uniqueness", "separation")


class InternalLPError(RuntimeError):
    """An LP that is feasible and bounded by construction came back otherwise."""


@dataclass(frozen=True)
class SeparatingHyperplane:
    """``<gamma, p> - offset`` is positive at the candidate, ``<= 0`` elsewhere."""

    gamma: Tuple[Fraction, ...]
    offset: Fraction


@dataclass(frozen=True)
class AlternativeDecomposition:
    """Convex weights on ``A`` and ``B`` reproducing the candidate another way."""

    alpha: Tuple[Fraction, ...]
    beta: Tuple[Fraction, ...]


@dataclass(frozen=True)
class UniqueDecomposition:
    """Dual multipliers proving the uniqueness LP cannot exceed zero.

    ``multipliers`` is ``(w_1..w_n, s, t)`` with ``<w, a_i> + s >= -[i == u]``,
    ``<w, b_j> + t >= -[j == v]`` and ``<w, a_u + b_v> + s + t == -2``.
    """

    multipliers: Tuple[Fraction, ...]


Certificate = Union[SeparatingHyperplane, AlternativeDecomposition, UniqueDecomposition]


@dataclass(frozen=True)
class ExtremeVerdict:
    """Outcome of the separation test for one point of a cloud.

    Exactly one of ``hyperplane`` (extreme) or ``weights`` (a convex
    combination of the *other* points equal to this one) is set.
    """

    index: int
    is_extreme: bool
    f_star: Fraction
    hyperplane: Optional[SeparatingHyperplane] = None
    weights: Optional[Tuple[Fraction, ...]] = None


@dataclass(frozen=True)
class PairVerdict:
    """Classification of one candidate pair.

    ``alpha`` and ``beta`` hold the optimum returned by the uniqueness LP
    (``None`` for the separation method).
    """

    pair: CandidatePair
    is_vertex: bool
    f_star: Fraction
    certificate: Certificate
    method: str
    alpha: Optional[Tuple[Fraction, ...]] = None
    beta: Optional[Tuple[Fraction, ...]] = None


@dataclass(frozen=True)
class MinkowskiSumResult:
    """Vertices of ``A + B`` together with every pair verdict.

    Attributes
    ----------
    C : VPolytope
        The Minkowski vertices, in row-major order of their ``(u, v)`` pair.
    verdicts : tuple of PairVerdict
        One verdict per candidate pair, row-major.
    decomposition : dict
        Maps each vertex of ``C`` to its unique ``(u, v)``.
    """

    A: VPolytope
    B: VPolytope
    C: VPolytope
    verdicts: Tuple[PairVerdict, ...]
    decomposition: Dict[Point, Tuple[int, int]]
    method: str

    @property
    def vertices(self) -> Tuple[Point, ...]:
        return self.C.points

    @property
    def accepted(self) -> List[PairVerdict]:
        return [v for v in self.verdicts if v.is_vertex]


def _as_cloud(cloud) -> List[Point]:
    pts = [as_point(p) for p in cloud]
    if not pts:
        raise ValueError("point cloud is empty")
    n = len(pts[0])
    for i, p in enumerate(pts):
        if len(p) != n:
            raise DimensionMismatchError(
                f"point {i} has {len(p)} coordinates, expected {n}"
            )
    return pts


def _separation(cloud: Sequence[Point], idx: int) -> ExtremeVerdict:
    target = cloud[idx]
    n = len(target)
    G = [tuple(p) + (-1,) for p in cloud]
    h = [0] * len(cloud)
    h[idx] = 1
    form = from_inequalities(G, h, tuple(target) + (-1,))
    out = solve(form.lp)
    if out.status is not LPStatus.OPTIMAL:
        raise InternalLPError(
            f"separation LP for point {idx} returned {out.status.value}"
        )
    f_star = out.value
    if f_star > 0:
        y = form.recover(out.solution)
        return ExtremeVerdict(
            idx, True, f_star, hyperplane=SeparatingHyperplane(y[:n], y[n])
        )
    # Dual of the separation LP: convex weights over the cloud reproducing
    # the target, with weight f* == 0 on the target itself.
    return ExtremeVerdict(idx, False, f_star, weights=out.duals)


def is_vertex_by_separation(cloud, idx: int) -> ExtremeVerdict:
    """Decide whether ``cloud[idx]`` is an extreme point of ``conv(cloud)``.

    Maximises ``<gamma, p_idx> - offset`` subject to ``<gamma, p_j> - offset
    <= 0`` for every other point and ``<= 1`` at ``p_idx``. The optimum is
    exactly 0 or 1; 1 means a strictly separating hyperplane exists. A
    coordinate-equal copy of ``p_idx`` elsewhere in the cloud forces 0.
    """
    pts = _as_cloud(cloud)
    if not 0 <= idx < len(pts):
        raise IndexError(f"index {idx} out of range for {len(pts)} points")
    return _separation(pts, idx)


def decomposition_matrix(A: VPolytope, B: VPolytope) -> Tuple[Tuple, ...]:
    """The ``(n+2) x (k+l)`` matrix whose columns are ``(a_i; 1; 0)`` and ``(b_j; 0; 1)``.

    It does not depend on the pair under test; only the right-hand side and
    the objective do.
    """
    if A.dim != B.dim:
        raise DimensionMismatchError(f"operands live in R^{A.dim} and R^{B.dim}")
    k, l = len(A), len(B)
    rows = [
        tuple(a[t] for a in A.points) + tuple(b[t] for b in B.points)
        for t in range(A.dim)
    ]
    rows.append((1,) * k + (0,) * l)
    rows.append((0,) * k + (1,) * l)
    return tuple(rows)


def _uniqueness(A, B, P, pair: CandidatePair) -> PairVerdict:
    k, l = len(A), len(B)
    u, v = pair.u, pair.v
    c = [0] * (k + l)
    c[u] = -1
    c[k + v] = -1
    lp = StandardFormLP(P, tuple(pair.sum) + (1, 1), c, 2)
    out = solve(lp)
    if out.status is not LPStatus.OPTIMAL:
        raise InternalLPError(
            f"uniqueness LP for pair ({u}, {v}) returned {out.status.value}"
        )
    f_star = out.value
    alpha, beta = out.solution[:k], out.solution[k:]
    if f_star == 0:
        cert = UniqueDecomposition(out.duals)
    else:
        cert = AlternativeDecomposition(alpha, beta)
    return PairVerdict(pair, f_star == 0, f_star, cert, "uniqueness", alpha, beta)


def is_vertex_by_uniqueness(A: VPolytope, B: VPolytope, u: int, v: int) -> PairVerdict:
    """Decide whether ``a_u + b_v`` is a vertex of ``A + B``.

    Solves ``max 2 - alpha_u - beta_v`` over convex weights ``alpha`` on
    ``A`` and ``beta`` on ``B`` with ``sum alpha_i a_i + sum beta_j b_j =
    a_u + b_v``. The pair ``alpha = e_u, beta = e_v`` is always feasible, so
    ``0 <= f* <= 2``; ``f* == 0`` exactly when the decomposition is unique.
    """
    if A.dim != B.dim:
        raise DimensionMismatchError(f"operands live in R^{A.dim} and R^{B.dim}")
    if not 0 <= u < len(A):
        raise IndexError(f"u={u} out of range for {len(A)} points")
    if not 0 <= v < len(B):
        raise IndexError(f"v={v} out of range for {len(B)} points")
    pair = CandidatePair(u, v, tuple(a + b for a, b in zip(A[u], B[v])))
    return _uniqueness(A, B, decomposition_matrix(A, B), pair)


def _pair_from_extreme(pair: CandidatePair, ev: ExtremeVerdict, k: int, l: int) -> PairVerdict:
    if ev.is_extreme:
        cert = ev.hyperplane
    else:
        alpha = [Fraction(0)] * k
        beta = [Fraction(0)] * l
        for idx, w in enumerate(ev.weights):
            if w:
                alpha[idx // l] += w
                beta[idx % l] += w
        cert = AlternativeDecomposition(tuple(alpha), tuple(beta))
    return PairVerdict(pair, ev.is_extreme, ev.f_star, cert, "separation")


def classify_pair(A: VPolytope, B: VPolytope, u: int, v: int, method: str = "uniqueness") -> PairVerdict:
    """Classify the single candidate ``a_u + b_v`` with either method.

    The separation method still builds its LP over all ``k * l`` sums.
    """
    if method == "uniqueness":
        return is_vertex_by_uniqueness(A, B, u, v)
    if method != "separation":
        raise ValueError(f"method must be one of {METHODS}, got {method!r}")
    if not (0 <= u < len(A) and 0 <= v < len(B)):
        raise IndexError(f"pair ({u}, {v}) out of range for k={len(A)}, l={len(B)}")
    pairs = candidate_sums(A, B)
    idx = u * len(B) + v
    ev = _separation([p.sum for p in pairs], idx)
    return _pair_from_extreme(pairs[idx], ev, len(A), len(B))


def _classify_chunk(A, B, method, start, stop, pairs=None):
    if pairs is None:
        pairs = candidate_sums(A, B)
    k, l = len(A), len(B)
    if method == "uniqueness":
        P = decomposition_matrix(A, B)
        return [_uniqueness(A, B, P, pairs[i]) for i in range(start, stop)]
    cloud = [p.sum for p in pairs]
    return [
        _pair_from_extreme(pairs[i], _separation(cloud, i), k, l)
        for i in range(start, stop)
    ]


def _effective_jobs(n_jobs: Optional[int]) -> int:
    if n_jobs is None or n_jobs == 0:
        return 1
    if n_jobs < 0:
        return max(1, (os.cpu_count() or 1) + 1 + n_jobs)
    return int(n_jobs)


def minkowski_sum(
    A: VPolytope,
    B: VPolytope,
    method: str = "uniqueness",
    n_jobs: Optional[int] = 1,
) -> MinkowskiSumResult:
    """Compute the vertex set of ``A + B``.

    Parameters
    ----------
    A, B : VPolytope
        Operands of equal dimension. Their point lists need not be reduced
        to extreme points.
    method : {"uniqueness", "separation"}
        Which LP decides each of the ``k * l`` candidate pairs.
    n_jobs : int, default 1
        Number of worker processes; negative values count back from the
        number of CPUs as in scikit-learn. Results do not depend on it.

    Returns
    -------
    MinkowskiSumResult
    """
    if method not in METHODS:
        raise ValueError(f"method must be one of {METHODS}, got {method!r}")
    pairs = candidate_sums(A, B)
    jobs = min(_effective_jobs(n_jobs), len(pairs))

    if jobs <= 1:
        verdicts = _classify_chunk(A, B, method, 0, len(pairs), pairs)
    else:
        n_chunks = min(len(pairs), jobs * 4)
        bounds = [len(pairs) * i // n_chunks for i in range(n_chunks + 1)]
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            futures = [
                ex.submit(_classify_chunk, A, B, method, lo, hi)
                for lo, hi in zip(bounds, bounds[1:])
            ]
            verdicts = [v for f in futures for v in f.result()]

    accepted = [v for v in verdicts if v.is_vertex]
    C = VPolytope([v.pair.sum for v in accepted], dim=A.dim)
    decomposition = {v.pair.sum: (v.pair.u, v.pair.v) for v in accepted}
    return MinkowskiSumResult(A, B, C, tuple(verdicts), decomposition, method)


def extreme_points(cloud) -> Tuple[List[Point], List[ExtremeVerdict]]:
    """Keep the points of ``cloud`` that are extreme in its convex hull.

    Input order is preserved. If a point occurs more than once, no copy is
    strictly separable and all copies are dropped; deduplicate first when
    that is not wanted.
    """
    pts = _as_cloud(cloud)
    verdicts = [_separation(pts, i) for i in range(len(pts))]
    kept = [p for p, ev in zip(pts, verdicts) if ev.is_extreme]
    return kept, verdicts


def _cross(o, a, b):
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def convex_hull_2d(cloud) -> List[Point]:
    """Monotone-chain convex hull in the plane, exact.

    Returns the hull's extreme points counter-clockwise starting from the
    lexicographically smallest one. Collinear boundary points are dropped.
    """
    pts = sorted(set(_as_cloud(cloud)))
    if len(pts[0]) != 2:
        raise DimensionMismatchError(f"convex_hull_2d needs planar points, got R^{len(pts[0])}")
    if len(pts) < 3:
        return pts
    lower: List[Point] = []
    for p in pts:
        while len(lower) >= 2 and _cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper: List[Point] = []
    for p in reversed(pts):
        while len(upper) >= 2 and _cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    hull = lower[:-1] + upper[:-1]
    return hull


def _dot(x, y):
    return sum(a * b for a, b in zip(x, y))


def verify_extreme_verdict(cloud, verdict: ExtremeVerdict) -> bool:
    """Check an :class:`ExtremeVerdict` by direct arithmetic on ``cloud``."""
    pts = _as_cloud(cloud)
    i = verdict.index
    if verdict.is_extreme:
        hp = verdict.hyperplane
        if hp is None or verdict.f_star <= 0:
            return False
        vals = [_dot(hp.gamma, p) - hp.offset for p in pts]
        return vals[i] == verdict.f_star and all(
            val <= 0 for j, val in enumerate(vals) if j != i
        )
    w = verdict.weights
    if w is None or verdict.f_star != 0 or len(w) != len(pts):
        return False
    if any(x < 0 for x in w) or sum(w) != 1 or w[i] != 0:
        return False
    n = len(pts[i])
    combo = tuple(sum(wj * p[t] for wj, p in zip(w, pts) if wj) for t in range(n))
    return combo == pts[i]


def verify_verdict(A: VPolytope, B: VPolytope, verdict: PairVerdict) -> bool:
    """Re-check a :class:`PairVerdict` certificate without solving an LP."""
    pair = verdict.pair
    u, v = pair.u, pair.v
    if pair.sum != tuple(a + b for a, b in zip(A[u], B[v])):
        return False
    cert = verdict.certificate
    if isinstance(cert, SeparatingHyperplane):
        if not verdict.is_vertex or verdict.f_star <= 0:
            return False
        if _dot(cert.gamma, pair.sum) - cert.offset != verdict.f_star:
            return False
        for i, a in enumerate(A.points):
            for j, b in enumerate(B.points):
                if (i, j) != (u, v):
                    if _dot(cert.gamma, a) + _dot(cert.gamma, b) - cert.offset > 0:
                        return False
        return True
    if isinstance(cert, AlternativeDecomposition):
        alpha, beta = cert.alpha, cert.beta
        if verdict.is_vertex or len(alpha) != len(A) or len(beta) != len(B):
            return False
        if any(x < 0 for x in alpha) or any(x < 0 for x in beta):
            return False
        if sum(alpha) != 1 or sum(beta) != 1:
            return False
        combo = tuple(
            sum(w * a[t] for w, a in zip(alpha, A.points) if w)
            + sum(w * b[t] for w, b in zip(beta, B.points) if w)
            for t in range(A.dim)
        )
        if combo != pair.sum:
            return False
        gap = 2 - alpha[u] - beta[v]
        if gap <= 0:
            return False
        if verdict.method == "uniqueness":
            return gap == verdict.f_star
        return verdict.f_star == 0
    if isinstance(cert, UniqueDecomposition):
        y = cert.multipliers
        n = A.dim
        if not verdict.is_vertex or verdict.f_star != 0 or len(y) != n + 2:
            return False
        w, s, t = y[:n], y[n], y[n + 1]
        for i, a in enumerate(A.points):
            if _dot(w, a) + s < -(i == u):
                return False
        for j, b in enumerate(B.points):
            if _dot(w, b) + t < -(j == v):
                return False
        return _dot(w, pair.sum) + s + t == -2
    return False
