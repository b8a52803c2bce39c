"""Exact two-phase primal simplex for standard-form linear programs.

Problems have the form::

    maximize   constant + c . x
    subject to A x = b,  x >= 0

and are solved over :class:`fractions.Fraction` with Bland's least-index
rule, so every run terminates and is reproducible bit for bit.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence, Tuple

__all__ = [
    "LPStatus",
    "StandardFormLP",
    "LPOutcome",
    "InequalityLP",
    "LPShapeError",
    "SolverError",
    "solve",
    "from_inequalities",
    "check_certificate",
]

_ZERO = Fraction(0)


class LPShapeError(ValueError):
    """Malformed LP data (ragged rows, wrong vector lengths, empty matrix)."""


class SolverError(RuntimeError):
    """The simplex exceeded its basis-count bound; indicates a solver bug."""


class LPStatus(enum.Enum):
    OPTIMAL = "optimal"
    INFEASIBLE = "infeasible"
    UNBOUNDED = "unbounded"


@dataclass(frozen=True)
class StandardFormLP:
    """``max constant + c.x  s.t.  A x = b, x >= 0``.

    Entries may be ints or Fractions; both are exact.
    """

    A: Tuple[Tuple, ...]
    b: Tuple
    c: Tuple
    constant: Fraction = _ZERO

    def __post_init__(self):
        A = tuple(tuple(row) for row in self.A)
        b, c = tuple(self.b), tuple(self.c)
        if not A:
            raise LPShapeError("constraint matrix has no rows")
        q = len(A[0])
        if q == 0:
            raise LPShapeError("constraint matrix has no columns")
        for i, row in enumerate(A):
            if len(row) != q:
                raise LPShapeError(f"row {i} has {len(row)} entries, expected {q}")
        if len(b) != len(A):
            raise LPShapeError(f"b has length {len(b)}, expected {len(A)}")
        if len(c) != q:
            raise LPShapeError(f"c has length {len(c)}, expected {q}")
        object.__setattr__(self, "A", A)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "c", c)
        object.__setattr__(self, "constant", Fraction(self.constant))

    @property
    def shape(self) -> Tuple[int, int]:
        return len(self.A), len(self.c)


@dataclass(frozen=True)
class LPOutcome:
    """Result of :func:`solve`.

    ``value``, ``solution``, ``basis`` and ``duals`` are set only when the
    status is optimal. ``duals`` is a vector ``y`` with ``A^T y >= c`` and
    ``constant + b.y == value``, i.e. a proof that nothing beats ``value``.
    """

    status: LPStatus
    value: Optional[Fraction] = None
    solution: Optional[Tuple[Fraction, ...]] = None
    basis: Optional[frozenset] = None
    duals: Optional[Tuple[Fraction, ...]] = None
    iterations: int = field(default=0, compare=False)

    @property
    def optimal(self) -> bool:
        return self.status is LPStatus.OPTIMAL


class _Tableau:
    """Dense simplex tableau with sparse-aware pivoting.

    Columns ``0..q-1`` are the structural variables, ``q..`` the artificial
    ones. ``init_col[r]`` is the identity column the basis started from for
    row ``r``; its reduced cost yields the dual value of that row.
    """

    def __init__(self, lp: StandardFormLP):
        m, q = lp.shape
        rows = [list(r) for r in lp.A]
        rhs = [Fraction(x) for x in lp.b]
        sign = [1] * m
        for i in range(m):
            if rhs[i] < 0:
                rows[i] = [-x for x in rows[i]]
                rhs[i] = -rhs[i]
                sign[i] = -1

        basis = [-1] * m
        for j, col in enumerate(zip(*rows)):
            nz = [i for i, x in enumerate(col) if x]
            if len(nz) == 1 and col[nz[0]] == 1 and basis[nz[0]] < 0:
                basis[nz[0]] = j

        n_art = 0
        for i in range(m):
            if basis[i] < 0:
                basis[i] = q + n_art
                n_art += 1
        for i in range(m):
            rows[i].extend([0] * n_art)
        for i in range(m):
            if basis[i] >= q:
                rows[i][basis[i]] = 1

        self.q = q
        self.n_art = n_art
        self.rows = rows
        self.rhs = rhs
        self.sign = sign
        self.basis = basis
        self.init_col = list(basis)
        self.active = list(range(m))  # original row index of each tableau row
        self.obj = []
        self.z = _ZERO
        self.iterations = 0

    def set_objective(self, costs: Sequence):
        """Load ``costs`` (one per column) and price out the current basis."""
        obj = list(costs)
        z = _ZERO
        for r, j in enumerate(self.basis):
            cj = obj[j]
            if cj:
                row = self.rows[r]
                for t, x in enumerate(row):
                    if x:
                        obj[t] -= cj * x
                z += cj * self.rhs[r]
        self.obj = obj
        self.z = z

    def pivot(self, r: int, s: int):
        rows, rhs = self.rows, self.rhs
        prow = rows[r]
        piv = prow[s]
        if piv != 1:
            inv = 1 / Fraction(piv)
            for t, x in enumerate(prow):
                if x:
                    prow[t] = x * inv
            rhs[r] = rhs[r] * inv
        nz = [t for t, x in enumerate(prow) if x]
        br = rhs[r]
        for i, row in enumerate(rows):
            f = row[s]
            if i == r or not f:
                continue
            for t in nz:
                row[t] -= f * prow[t]
            rhs[i] -= f * br
        f = self.obj[s]
        if f:
            obj = self.obj
            for t in nz:
                obj[t] -= f * prow[t]
            self.z += f * br
        self.basis[r] = s
        self.iterations += 1

    def run(self, n_cols: int, cap: int) -> bool:
        """Bland-rule simplex over columns ``< n_cols``; False if unbounded."""
        obj, rows, rhs, basis = self.obj, self.rows, self.rhs, self.basis
        steps = 0
        while True:
            s = next((j for j in range(n_cols) if obj[j] > 0), -1)
            if s < 0:
                return True
            best = -1
            best_ratio = None
            for i, row in enumerate(rows):
                a = row[s]
                if a > 0:
                    ratio = rhs[i] / a
                    if (
                        best < 0
                        or ratio < best_ratio
                        or (ratio == best_ratio and basis[i] < basis[best])
                    ):
                        best, best_ratio = i, ratio
            if best < 0:
                return False
            steps += 1
            if steps > cap:
                raise SolverError(
                    f"simplex exceeded {cap} pivots; Bland's rule should prevent this"
                )
            self.pivot(best, s)

    def drive_out_artificials(self):
        """Pivot zero-level artificials out of the basis; drop redundant rows."""
        q = self.q
        keep = []
        for r in range(len(self.rows)):
            if self.basis[r] < q:
                keep.append(r)
                continue
            row = self.rows[r]
            s = next((j for j in range(q) if row[j]), -1)
            if s >= 0:
                self.pivot(r, s)
                keep.append(r)
        if len(keep) != len(self.rows):
            self.rows = [self.rows[r] for r in keep]
            self.rhs = [self.rhs[r] for r in keep]
            self.basis = [self.basis[r] for r in keep]
            self.active = [self.active[r] for r in keep]


def _bases_bound(n_cols: int, m: int) -> int:
    return max(1, math.comb(n_cols, min(m, n_cols)))


def solve(lp: StandardFormLP) -> LPOutcome:
    """Solve ``lp`` exactly with the two-phase simplex method.

    Rows with a negative right-hand side are negated first. Phase I starts
    from unit columns already present in ``A`` wherever possible and adds
    artificial variables only for the remaining rows. Rows that turn out to
    be linearly dependent are dropped after phase I.

    Returns
    -------
    LPOutcome
        Optimal with an exact basic solution and dual vector, or
        Infeasible / Unbounded.
    """
    if not isinstance(lp, StandardFormLP):
        raise TypeError("solve expects a StandardFormLP")
    m, q = lp.shape
    tab = _Tableau(lp)
    n_cols = q + tab.n_art

    if tab.n_art:
        tab.set_objective([0] * q + [-1] * tab.n_art)
        tab.run(q, _bases_bound(n_cols, m))
        if tab.z < 0:
            return LPOutcome(LPStatus.INFEASIBLE, iterations=tab.iterations)
        tab.drive_out_artificials()

    tab.set_objective(list(lp.c) + [0] * tab.n_art)
    if not tab.run(q, _bases_bound(n_cols, m)):
        return LPOutcome(LPStatus.UNBOUNDED, iterations=tab.iterations)

    x = [_ZERO] * q
    for r, j in enumerate(tab.basis):
        x[j] = tab.rhs[r]
    costs = list(lp.c) + [0] * tab.n_art
    duals = tuple(
        tab.sign[i] * (costs[j] - tab.obj[j]) for i, j in enumerate(tab.init_col)
    )
    return LPOutcome(
        LPStatus.OPTIMAL,
        value=lp.constant + tab.z,
        solution=tuple(x),
        basis=frozenset(tab.basis),
        duals=tuple(Fraction(y) for y in duals),
        iterations=tab.iterations,
    )


def check_certificate(lp: StandardFormLP, out: LPOutcome) -> bool:
    """Re-verify an optimal outcome: ``A x = b``, ``x >= 0`` and the value.

    When dual values are present they are checked too (``A^T y >= c`` and
    ``constant + b.y == value``), which certifies optimality.
    """
    if not out.optimal or out.solution is None:
        return False
    x = out.solution
    m, q = lp.shape
    if len(x) != q or any(xj < 0 for xj in x):
        return False
    for row, bi in zip(lp.A, lp.b):
        if sum(a * xj for a, xj in zip(row, x) if a) != bi:
            return False
    if lp.constant + sum(cj * xj for cj, xj in zip(lp.c, x)) != out.value:
        return False
    if out.duals is not None:
        y = out.duals
        if len(y) != m:
            return False
        for j in range(q):
            if sum(lp.A[i][j] * y[i] for i in range(m) if y[i]) < lp.c[j]:
                return False
        if lp.constant + sum(bi * yi for bi, yi in zip(lp.b, y)) != out.value:
            return False
    return True


@dataclass(frozen=True)
class InequalityLP:
    """Standard form of ``max constant + c.y  s.t.  G y <= h`` with ``y`` free.

    Column ``2t`` holds ``y_t^+`` and column ``2t+1`` holds ``y_t^-``; the
    slack of row ``r`` is column ``2 n + r``.
    """

    lp: StandardFormLP
    n_free: int

    def recover(self, solution: Sequence[Fraction]) -> Tuple[Fraction, ...]:
        """Map a standard-form solution back to the free variables ``y``."""
        return tuple(
            Fraction(solution[2 * t]) - solution[2 * t + 1] for t in range(self.n_free)
        )

    def slacks(self, solution: Sequence[Fraction]) -> Tuple[Fraction, ...]:
        return tuple(solution[2 * self.n_free:])


def from_inequalities(G, h, c, constant=0) -> InequalityLP:
    """Convert ``max constant + c.y  s.t.  G y <= h`` (``y`` free) to standard form.

    Each free variable is split as ``y+ - y-`` and each row gets its own
    slack, so the slack columns form an identity block.
    """
    G = [tuple(row) for row in G]
    h = tuple(h)
    c = tuple(c)
    if not G:
        raise LPShapeError("inequality system has no rows")
    n = len(c)
    for i, row in enumerate(G):
        if len(row) != n:
            raise LPShapeError(f"row {i} has {len(row)} entries, expected {n}")
    if len(h) != len(G):
        raise LPShapeError(f"h has length {len(h)}, expected {len(G)}")
    m = len(G)
    A = []
    for r, row in enumerate(G):
        split = []
        for g in row:
            split.append(g)
            split.append(-g)
        slack = [0] * m
        slack[r] = 1
        A.append(split + slack)
    c_std = []
    for ct in c:
        c_std.append(ct)
        c_std.append(-ct)
    c_std.extend([0] * m)
    return InequalityLP(StandardFormLP(A, h, c_std, Fraction(constant)), n)
