"""Reading polytope files and writing sum reports.

Plain format::

    # optional comments start with '#'
    n k
    x_11 ... x_1n
    ...
    x_k1 ... x_kn

Structured format: a JSON object ``{"dim": n, "points": [[...], ...]}``
whose coordinates are strings (``"1/3"``, ``"0.25"``) or integers. Any
other keys are ignored, which lets a structured report be read back as
the polytope of its vertices.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Tuple

from .core import VPolytope, as_scalar, format_scalar
from .engine import MinkowskiSumResult

__all__ = [
    "ParseError",
    "ReportError",
    "SumReport",
    "parse_polytope",
    "read_polytope",
    "format_points",
    "emit_report",
]


class ParseError(ValueError):
    """Malformed polytope text; the message names the offending line or row."""


class ReportError(RuntimeError):
    """A result that cannot be reported (e.g. no vertices) reached the emitter."""


def _strip(line: str) -> str:
    return line.split("#", 1)[0].strip()


def _parse_plain(text: str) -> VPolytope:
    lines = [(no, _strip(raw)) for no, raw in enumerate(text.splitlines(), 1)]
    lines = [(no, s) for no, s in lines if s]
    if not lines:
        raise ParseError("empty input: expected header line 'n k'")
    hno, header = lines[0]
    parts = header.split()
    if len(parts) != 2 or not all(p.isdigit() for p in parts):
        raise ParseError(f"line {hno}: header must be two non-negative integers 'n k'")
    n, k = int(parts[0]), int(parts[1])
    if n < 1:
        raise ParseError(f"line {hno}: dimension must be positive")
    if k < 1:
        raise ParseError(f"line {hno}: a polytope needs at least one point")
    body = lines[1:]
    if len(body) != k:
        raise ParseError(f"line {hno}: header announces {k} rows, found {len(body)}")
    rows = []
    seen = {}
    for r, (no, s) in enumerate(body):
        toks = s.split()
        if len(toks) != n:
            raise ParseError(f"line {no} (row {r}): expected {n} tokens, got {len(toks)}")
        try:
            p = tuple(as_scalar(t) for t in toks)
        except ValueError as exc:
            raise ParseError(f"line {no} (row {r}): {exc}") from None
        if p in seen:
            raise ParseError(f"line {no} (row {r}): duplicate of row {seen[p]}")
        seen[p] = r
        rows.append(p)
    return VPolytope(rows, dim=n)


def _parse_structured(text: str) -> VPolytope:
    try:
        obj = json.loads(text, parse_float=Fraction)
    except json.JSONDecodeError as exc:
        raise ParseError(f"line {exc.lineno}: invalid JSON: {exc.msg}") from None
    if not isinstance(obj, dict) or "points" not in obj:
        raise ParseError("structured input must be an object with 'dim' and 'points'")
    pts = obj["points"]
    if not isinstance(pts, list) or not pts:
        raise ParseError("'points' must be a non-empty list")
    dim = obj.get("dim", None)
    if dim is None:
        dim = len(pts[0]) if isinstance(pts[0], list) else 0
    if isinstance(dim, bool) or not isinstance(dim, int) or dim < 1:
        raise ParseError("'dim' must be a positive integer")
    rows = []
    seen = {}
    for r, row in enumerate(pts):
        if not isinstance(row, list) or len(row) != dim:
            raise ParseError(f"row {r}: expected a list of {dim} coordinates")
        try:
            p = tuple(as_scalar(t) for t in row)
        except (TypeError, ValueError) as exc:
            raise ParseError(f"row {r}: {exc}") from None
        if p in seen:
            raise ParseError(f"row {r}: duplicate of row {seen[p]}")
        seen[p] = r
        rows.append(p)
    return VPolytope(rows, dim=dim)


def parse_polytope(text: str) -> VPolytope:
    """Parse plain or structured polytope text (detected from the first character)."""
    if text.lstrip().startswith("{"):
        return _parse_structured(text)
    return _parse_plain(text)


def read_polytope(path) -> VPolytope:
    with open(path, encoding="utf-8") as fh:
        return parse_polytope(fh.read())


def format_points(points: Sequence[Sequence[Fraction]], dim: Optional[int] = None) -> str:
    """Plain-format text for a point list; readable by :func:`parse_polytope`."""
    points = list(points)
    if dim is None:
        dim = len(points[0])
    out = [f"{dim} {len(points)}"]
    out.extend(" ".join(format_scalar(c) for c in p) for p in points)
    return "\n".join(out) + "\n"


@dataclass(frozen=True)
class SumReport:
    vertices: Tuple[Tuple[Fraction, ...], ...]
    decompositions: Tuple[Tuple[int, int], ...]
    dim: int
    k: int
    l: int
    candidates: int
    accepted: int
    method: str
    elapsed: Optional[float] = None

    @classmethod
    def from_result(cls, result: MinkowskiSumResult, elapsed: Optional[float] = None):
        vertices = tuple(result.vertices)
        if not vertices:
            raise ReportError("Minkowski sum result has no vertices")
        decomp = tuple(result.decomposition[p] for p in vertices)
        return cls(
            vertices=vertices,
            decompositions=decomp,
            dim=result.C.dim,
            k=len(result.A),
            l=len(result.B),
            candidates=len(result.verdicts),
            accepted=len(vertices),
            method=result.method,
            elapsed=elapsed,
        )

    def stats(self) -> dict:
        out = {
            "k": self.k,
            "l": self.l,
            "candidates": self.candidates,
            "accepted": self.accepted,
            "method": self.method,
        }
        if self.elapsed is not None:
            out["elapsed"] = round(self.elapsed, 6)
        return out


def emit_report(result, fmt: str = "text", elapsed: Optional[float] = None) -> str:
    """Render a sum result.

    ``elapsed`` is only written when given, so that default output is
    byte-identical across runs and worker counts.
    """
    report = result if isinstance(result, SumReport) else SumReport.from_result(result, elapsed)
    if fmt == "structured":
        # one JSON row per line keeps large reports diffable
        dump = json.dumps
        points = ",\n".join(
            "    " + dump([format_scalar(c) for c in p]) for p in report.vertices
        )
        decomp = ",\n".join("    " + dump(list(d)) for d in report.decompositions)
        return (
            "{\n"
            f'  "dim": {report.dim},\n'
            f'  "points": [\n{points}\n  ],\n'
            f'  "decompositions": [\n{decomp}\n  ],\n'
            f'  "stats": {dump(report.stats())}\n'
            "}\n"
        )
    if fmt != "text":
        raise ValueError(f"unknown report format {fmt!r}")
    lines = [f"vertices {report.dim} {report.accepted}"]
    lines.extend(" ".join(format_scalar(c) for c in p) for p in report.vertices)
    lines.append("decompositions")
    lines.extend(f"{u} {v}" for u, v in report.decompositions)
    lines.append("stats " + " ".join(f"{key}={val}" for key, val in report.stats().items()))
    return "\n".join(lines) + "\n"
