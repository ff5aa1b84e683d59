"""Centro-affine actions on surfaces and verification of the scaling law.

A centro-affine map multiplies the row-vector immersion by an invertible
3x3 matrix A, component k of the image being sum_i f_i a_ik.  Under this
action, at matched parameter points,

* the ratio K/d^4 scales by 1/det(A)^2,
* the position volume scales by det(A),
* the curvature numerator Vx Vy - Vxy^2 scales by det(A)^2.

:func:`verify_scaling` measures all three numerically over a list of
points and reports per-point residuals.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .errors import RegularityError, SignatureError, SingularPointError
from .invariants import oriented_volumes, titeica_ratio
from .jet import Jet2
from .surfaces import EUCLIDEAN, SurfaceDef, eval_surface, parametric_jets

__all__ = ["CentroAffineMap", "apply_map", "verify_scaling", "ScalingPoint", "ScalingReport"]

MIN_DET = 1e-12


@dataclass(frozen=True, eq=False)
class CentroAffineMap:
    """Invertible 3x3 real matrix acting on surfaces by row vector x matrix."""

    matrix: np.ndarray
    det: float

    @classmethod
    def of(cls, entries) -> "CentroAffineMap":
        m = np.array(entries, dtype=float).reshape(3, 3)
        d = float(np.linalg.det(m))
        if abs(d) <= MIN_DET:
            raise ValueError(f"centro-affine matrix must be invertible, |det| = {abs(d):g}")
        m.flags.writeable = False
        return cls(m, d)

    @classmethod
    def identity(cls) -> "CentroAffineMap":
        return cls.of(np.eye(3))

    def __matmul__(self, other: "CentroAffineMap") -> "CentroAffineMap":
        return CentroAffineMap.of(self.matrix @ other.matrix)


def apply_map(s: SurfaceDef, a: CentroAffineMap) -> SurfaceDef:
    """Image surface (x, y) -> f(x, y) . A on the same parameter domain.

    The scaling law is a Euclidean statement, so only Euclidean-ambient
    surfaces are accepted.
    """
    if s.ambient is not EUCLIDEAN:
        raise SignatureError(
            f"centro-affine action requires a Euclidean-ambient surface, got '{s.ambient.name}'"
        )
    m = a.matrix

    def image(jx: Jet2, jy: Jet2):
        c0, c1, c2 = parametric_jets(s, jx, jy)
        return tuple(c0 * m[0, k] + c1 * m[1, k] + c2 * m[2, k] for k in range(3))

    return SurfaceDef(f"{s.name}|mapped", "parametric", image, s.domain, EUCLIDEAN)


@dataclass(frozen=True)
class ScalingPoint:
    x: float
    y: float
    ratio_before: Optional[float] = None
    ratio_after: Optional[float] = None
    ratio_residual: Optional[float] = None
    volume_residual: Optional[float] = None
    numerator_residual: Optional[float] = None
    skipped: Optional[str] = None


@dataclass(frozen=True)
class ScalingReport:
    """Per-point and aggregate residuals of the three scaling identities."""

    surface: str
    det: float
    tol: float
    points: tuple[ScalingPoint, ...]
    n_evaluated: int
    n_skipped: int
    max_ratio_residual: float
    max_volume_residual: float
    max_numerator_residual: float
    passed: bool


def verify_scaling(s: SurfaceDef, a: CentroAffineMap, points, tol: float) -> ScalingReport:
    """Check the scaling identities at the given parameter points.

    Residuals are relative: |after - predicted| / max(1, |predicted|) for
    the ratio and the numerator, |after - predicted| / |predicted| for the
    volume.  Singular points are recorded as skipped; a run where every
    point was skipped fails.
    """
    image = apply_map(s, a)
    det2 = a.det * a.det
    rows: list[ScalingPoint] = []
    for x, y in points:
        try:
            sj = eval_surface(s, x, y)
            tj = eval_surface(image, x, y)
            before = titeica_ratio(sj, EUCLIDEAN)
            after = titeica_ratio(tj, EUCLIDEAN)
        except (SingularPointError, RegularityError, SignatureError) as exc:
            rows.append(ScalingPoint(x, y, skipped=str(exc)))
            continue
        predicted = before / det2
        ratio_res = abs(after - predicted) / max(1.0, abs(predicted))
        vols = oriented_volumes(sj)
        ivols = oriented_volumes(tj)
        v_pred = a.det * vols.V
        volume_res = abs(ivols.V - v_pred) / max(1e-300, abs(v_pred))
        num_pred = det2 * (vols.Vx * vols.Vy - vols.Vxy**2)
        num_after = ivols.Vx * ivols.Vy - ivols.Vxy**2
        numerator_res = abs(num_after - num_pred) / max(1.0, abs(num_pred))
        rows.append(ScalingPoint(x, y, before, after, ratio_res, volume_res, numerator_res))

    evaluated = [r for r in rows if r.skipped is None]
    max_r = max((r.ratio_residual for r in evaluated), default=math.inf)
    max_v = max((r.volume_residual for r in evaluated), default=math.inf)
    max_n = max((r.numerator_residual for r in evaluated), default=math.inf)
    passed = bool(evaluated) and max_r <= tol and max_v <= tol and max_n <= tol
    return ScalingReport(
        surface=s.name,
        det=a.det,
        tol=tol,
        points=tuple(rows),
        n_evaluated=len(evaluated),
        n_skipped=len(rows) - len(evaluated),
        max_ratio_residual=max_r,
        max_volume_residual=max_v,
        max_numerator_residual=max_n,
        passed=passed,
    )
