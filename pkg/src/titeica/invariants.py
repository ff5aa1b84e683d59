"""Pointwise surface invariants under a chosen ambient bilinear form.

Everything here is computed from a :class:`SurfaceJet`:

* fundamental forms E, F, G (tangent inner products) and L, M, N
  (second derivatives against the unit normal),
* Gaussian curvature K,
* the distance d from the origin to the affine tangent plane,
* the four oriented volumes Vx, Vy, Vxy (second-derivative row over the
  tangent rows) and V (position row over the tangent rows),
* the ratio K/d^4 and the residual between its curvature/distance route
  and its pure oriented-volume route (VxVy - Vxy^2)/V^4.

The normal is built from the Euclidean cross product c = f_x x f_y by
applying the ambient signature componentwise, n = S c.  That vector is
ambient-orthogonal to the tangent plane for both signatures; normalizing
by sqrt(|<n,n>|) and carrying sign(<n,n>) into K reproduces the classical
values on the unit Minkowski hyperboloid (K = -1, d = 1).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple, Optional

import numpy as np

from .errors import RegularityError, SignatureError, SingularPointError
from .surfaces import EUCLIDEAN, AmbientForm, SurfaceJet

__all__ = [
    "EPS_SINGULAR",
    "FundamentalForms",
    "OrientedVolumes",
    "InvariantReport",
    "det3",
    "fundamental_forms",
    "gaussian_curvature",
    "tangent_distance",
    "oriented_volumes",
    "titeica_ratio",
    "identity_residual",
    "point_invariants",
]

# Threshold on |V|, d and EG - F^2 below which a point is treated as
# singular and must be skipped (never silently dropped) by callers.
EPS_SINGULAR = 1e-9


class FundamentalForms(NamedTuple):
    E: float
    F: float
    G: float
    L: float
    M: float
    N: float


class OrientedVolumes(NamedTuple):
    Vx: float
    Vy: float
    Vxy: float
    V: float


@dataclass(frozen=True)
class InvariantReport:
    """Full per-point bundle used by reports and tests."""

    E: float
    F: float
    G: float
    L: float
    M: float
    N: float
    K: float
    d: float
    Vx: float
    Vy: float
    Vxy: float
    V: float
    ratio: float
    identity_residual: Optional[float]


def det3(r0, r1, r2) -> float:
    """Determinant of the 3x3 matrix with rows r0, r1, r2."""
    return float(
        r0[0] * (r1[1] * r2[2] - r1[2] * r2[1])
        - r0[1] * (r1[0] * r2[2] - r1[2] * r2[0])
        + r0[2] * (r1[0] * r2[1] - r1[1] * r2[0])
    )


def _frame(sj: SurfaceJet, amb: AmbientForm):
    """Shared scaffolding: tangent form, normal, and its self-inner-product."""
    e = amb.inner(sj.f_x, sj.f_x)
    f = amb.inner(sj.f_x, sj.f_y)
    g = amb.inner(sj.f_y, sj.f_y)
    disc = e * g - f * f
    if abs(disc) <= EPS_SINGULAR:
        raise RegularityError(f"degenerate tangent plane (EG - F^2 = {disc:g})")
    n = amb.apply(np.cross(sj.f_x, sj.f_y))
    nn = amb.inner(n, n)
    if abs(nn) <= EPS_SINGULAR:
        raise SignatureError(f"normal vector is null under the {amb.name} form")
    return e, f, g, disc, n, nn


def fundamental_forms(sj: SurfaceJet, amb: AmbientForm) -> FundamentalForms:
    e, f, g, _, n, nn = _frame(sj, amb)
    scale = 1.0 / math.sqrt(abs(nn))
    return FundamentalForms(
        E=e,
        F=f,
        G=g,
        L=amb.inner(sj.f_xx, n) * scale,
        M=amb.inner(sj.f_xy, n) * scale,
        N=amb.inner(sj.f_yy, n) * scale,
    )


def gaussian_curvature(sj: SurfaceJet, amb: AmbientForm) -> float:
    """K = sign(<n,n>) (LN - M^2) / (EG - F^2)."""
    e, f, g, disc, n, nn = _frame(sj, amb)
    scale = 1.0 / math.sqrt(abs(nn))
    l = amb.inner(sj.f_xx, n) * scale
    m = amb.inner(sj.f_xy, n) * scale
    nu = amb.inner(sj.f_yy, n) * scale
    sign = 1.0 if nn > 0.0 else -1.0
    return sign * (l * nu - m * m) / disc


def tangent_distance(sj: SurfaceJet, amb: AmbientForm) -> float:
    """Distance from the origin to the affine tangent plane,
    |<f, n>| / sqrt(|<n, n>|)."""
    _, _, _, _, n, nn = _frame(sj, amb)
    return abs(amb.inner(sj.f, n)) / math.sqrt(abs(nn))


def oriented_volumes(sj: SurfaceJet) -> OrientedVolumes:
    """Signed volumes of the parallelepipeds spanned by (row; f_x; f_y)
    with row = f_xx, f_yy, f_xy and the position f."""
    return OrientedVolumes(
        Vx=det3(sj.f_xx, sj.f_x, sj.f_y),
        Vy=det3(sj.f_yy, sj.f_x, sj.f_y),
        Vxy=det3(sj.f_xy, sj.f_x, sj.f_y),
        V=det3(sj.f, sj.f_x, sj.f_y),
    )


def titeica_ratio(sj: SurfaceJet, amb: AmbientForm) -> float:
    """The ratio K/d^4 via curvature and tangent distance."""
    d = tangent_distance(sj, amb)
    if d <= EPS_SINGULAR:
        raise SingularPointError(f"tangent plane passes through the origin (d = {d:g})")
    return gaussian_curvature(sj, amb) / d**4


def identity_residual(sj: SurfaceJet) -> float:
    """|K/d^4 - (Vx Vy - Vxy^2)/V^4| with both sides computed
    independently (Euclidean ambient).  On regular points this stays
    below 1e-9 * max(1, |ratio|)."""
    vols = oriented_volumes(sj)
    if abs(vols.V) <= EPS_SINGULAR:
        raise SingularPointError(f"position volume vanishes (V = {vols.V:g})")
    ratio = titeica_ratio(sj, EUCLIDEAN)
    volume_route = (vols.Vx * vols.Vy - vols.Vxy**2) / vols.V**4
    return abs(ratio - volume_route)


def point_invariants(sj: SurfaceJet, amb: AmbientForm) -> InvariantReport:
    """Assemble the full invariant bundle at one point.

    Raises the singularity errors of its constituents; grid drivers catch
    those and record the point as skipped.
    """
    forms = fundamental_forms(sj, amb)
    k = gaussian_curvature(sj, amb)
    d = tangent_distance(sj, amb)
    vols = oriented_volumes(sj)
    if d <= EPS_SINGULAR:
        raise SingularPointError(f"tangent plane passes through the origin (d = {d:g})")
    ratio = k / d**4
    residual = None
    if amb is EUCLIDEAN and abs(vols.V) > EPS_SINGULAR:
        residual = abs(ratio - (vols.Vx * vols.Vy - vols.Vxy**2) / vols.V**4)
    return InvariantReport(
        E=forms.E,
        F=forms.F,
        G=forms.G,
        L=forms.L,
        M=forms.M,
        N=forms.N,
        K=k,
        d=d,
        Vx=vols.Vx,
        Vy=vols.Vy,
        Vxy=vols.Vxy,
        V=vols.V,
        ratio=ratio,
        identity_residual=residual,
    )
