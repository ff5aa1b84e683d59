"""Shared test utilities: random patches, points and matrices."""

import numpy as np

from titeica import jet
from titeica.centroaffine import CentroAffineMap
from titeica.errors import GeometryError
from titeica.invariants import tangent_distance
from titeica.surfaces import EUCLIDEAN, Box, SurfaceDef, eval_surface


def random_polynomial_patch(rng, degree=4, coeff_range=2.0, name="poly"):
    """Monge patch u = sum c_ij x^i y^j with i + j <= degree."""
    terms = [
        (i, j, float(rng.uniform(-coeff_range, coeff_range)))
        for i in range(degree + 1)
        for j in range(degree + 1 - i)
    ]

    def height(x, y):
        acc = jet.constant(0.0)
        for i, j, c in terms:
            acc = acc + jet.pow_int(x, i) * jet.pow_int(y, j) * c
        return acc

    return SurfaceDef(name, "monge", height, Box(-1.0, 1.0, -1.0, 1.0), EUCLIDEAN)


def random_regular_point(rng, surface, min_distance=1e-2, max_tries=200):
    """Domain point where the tangent plane stays clear of the origin."""
    box = surface.domain
    for _ in range(max_tries):
        x = float(rng.uniform(box.x0 + 0.02 * (box.x1 - box.x0), box.x1 - 0.02 * (box.x1 - box.x0)))
        y = float(rng.uniform(box.y0 + 0.02 * (box.y1 - box.y0), box.y1 - 0.02 * (box.y1 - box.y0)))
        try:
            if tangent_distance(eval_surface(surface, x, y), surface.ambient) >= min_distance:
                return x, y
        except GeometryError:
            continue
    raise AssertionError(f"no regular point found on '{surface.name}'")


def random_map(rng, det_range=(0.1, 5.0), entry_range=2.0):
    """Random invertible matrix with |det| inside det_range."""
    lo, hi = det_range
    while True:
        entries = rng.uniform(-entry_range, entry_range, size=(3, 3))
        det = abs(np.linalg.det(entries))
        if lo <= det <= hi:
            return CentroAffineMap.of(entries)


def random_orthogonal(rng, det_sign=1.0):
    """Haar-ish random orthogonal matrix with the requested determinant sign."""
    q, r = np.linalg.qr(rng.normal(size=(3, 3)))
    q = q @ np.diag(np.sign(np.diag(r)))
    if np.sign(np.linalg.det(q)) != np.sign(det_sign):
        q[:, 0] = -q[:, 0]
    return CentroAffineMap.of(q)
