"""Second-order forward-mode automatic differentiation in two variables.

A :class:`Jet2` bundles the value of a scalar quantity with its exact
gradient and Hessian with respect to two independent parameters.  The
arithmetic operators and the elementary functions below propagate all six
fields through the sum, product, quotient and chain rules, so any scalar
expression built from seeded coordinates carries exact first and second
derivatives -- no symbolic algebra, no finite differencing.  Only one
mixed entry ``dxy`` is stored; symmetry of the Hessian is structural.

Typical use::

    x, y = seed_xy(1.0, 2.0)
    u = 1.0 / (x * y)
    u.dx, u.dxy     # exact du/dx and d2u/dxdy at (1, 2)

Jets are immutable and every operation is a pure function, so evaluation
is safe to spread over any number of threads.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError

__all__ = [
    "Jet2",
    "constant",
    "seed_x",
    "seed_y",
    "seed_xy",
    "sin",
    "cos",
    "exp",
    "log",
    "sqrt",
    "sinh",
    "cosh",
    "tanh",
    "atan",
    "atanh",
    "pow_int",
]


@dataclass(frozen=True, slots=True)
class Jet2:
    """Value, gradient and symmetric Hessian of a scalar in (x, y)."""

    val: float
    dx: float = 0.0
    dy: float = 0.0
    dxx: float = 0.0
    dxy: float = 0.0
    dyy: float = 0.0

    def __add__(self, other):
        o = _lift(other)
        if o is None:
            return NotImplemented
        return Jet2(
            self.val + o.val,
            self.dx + o.dx,
            self.dy + o.dy,
            self.dxx + o.dxx,
            self.dxy + o.dxy,
            self.dyy + o.dyy,
        )

    __radd__ = __add__

    def __sub__(self, other):
        o = _lift(other)
        if o is None:
            return NotImplemented
        return Jet2(
            self.val - o.val,
            self.dx - o.dx,
            self.dy - o.dy,
            self.dxx - o.dxx,
            self.dxy - o.dxy,
            self.dyy - o.dyy,
        )

    def __rsub__(self, other):
        o = _lift(other)
        if o is None:
            return NotImplemented
        return o - self

    def __neg__(self):
        return Jet2(-self.val, -self.dx, -self.dy, -self.dxx, -self.dxy, -self.dyy)

    def __mul__(self, other):
        # Grouped so that a*b and b*a agree bitwise (addition of the same
        # products in commuted operand order).
        o = _lift(other)
        if o is None:
            return NotImplemented
        a, b = self, o
        return Jet2(
            a.val * b.val,
            a.dx * b.val + a.val * b.dx,
            a.dy * b.val + a.val * b.dy,
            (a.dxx * b.val + a.val * b.dxx) + 2.0 * (a.dx * b.dx),
            (a.dxy * b.val + a.val * b.dxy) + (a.dx * b.dy + a.dy * b.dx),
            (a.dyy * b.val + a.val * b.dyy) + 2.0 * (a.dy * b.dy),
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = _lift(other)
        if o is None:
            return NotImplemented
        if o.val == 0.0:
            raise DomainError("division by a jet with value 0")
        # Quotient rule, written around q = a/b so the second-order terms
        # reuse the already-computed first-order ones.
        iw = 1.0 / o.val
        q = self.val * iw
        qx = (self.dx - q * o.dx) * iw
        qy = (self.dy - q * o.dy) * iw
        return Jet2(
            q,
            qx,
            qy,
            (self.dxx - 2.0 * qx * o.dx - q * o.dxx) * iw,
            (self.dxy - qx * o.dy - qy * o.dx - q * o.dxy) * iw,
            (self.dyy - 2.0 * qy * o.dy - q * o.dyy) * iw,
        )

    def __rtruediv__(self, other):
        o = _lift(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, exponent):
        if isinstance(exponent, int):
            return pow_int(self, exponent)
        if isinstance(exponent, float):
            return _pow_real(self, exponent)
        return NotImplemented


def _lift(v):
    if isinstance(v, Jet2):
        return v
    if isinstance(v, (int, float)):
        return Jet2(float(v))
    return None


def constant(c: float) -> Jet2:
    """Jet of a constant: all derivative fields are zero."""
    return Jet2(float(c))


def seed_x(v: float) -> Jet2:
    """Jet of the first coordinate at value v (dx = 1, everything else 0)."""
    return Jet2(float(v), dx=1.0)


def seed_y(v: float) -> Jet2:
    """Jet of the second coordinate at value v (dy = 1, everything else 0)."""
    return Jet2(float(v), dy=1.0)


def seed_xy(x: float, y: float) -> tuple[Jet2, Jet2]:
    """Coordinate seeds for evaluating an expression at the point (x, y)."""
    return seed_x(x), seed_y(y)


def _chain(a: Jet2, val: float, d1: float, d2: float) -> Jet2:
    # Chain rule through second order for a scalar map with derivatives
    # d1, d2 at a.val.
    return Jet2(
        val,
        d1 * a.dx,
        d1 * a.dy,
        d1 * a.dxx + d2 * (a.dx * a.dx),
        d1 * a.dxy + d2 * (a.dx * a.dy),
        d1 * a.dyy + d2 * (a.dy * a.dy),
    )


def sin(a: Jet2) -> Jet2:
    s, c = math.sin(a.val), math.cos(a.val)
    return _chain(a, s, c, -s)


def cos(a: Jet2) -> Jet2:
    s, c = math.sin(a.val), math.cos(a.val)
    return _chain(a, c, -s, -c)


def exp(a: Jet2) -> Jet2:
    e = math.exp(a.val)
    return _chain(a, e, e, e)


def log(a: Jet2) -> Jet2:
    v = a.val
    if v <= 0.0:
        raise DomainError(f"log: argument {v!r} not in (0, inf)")
    iv = 1.0 / v
    return _chain(a, math.log(v), iv, -iv * iv)


def sqrt(a: Jet2) -> Jet2:
    v = a.val
    if v <= 0.0:
        raise DomainError(f"sqrt: argument {v!r} not in (0, inf)")
    s = math.sqrt(v)
    d1 = 0.5 / s
    return _chain(a, s, d1, -0.5 * d1 / v)


def sinh(a: Jet2) -> Jet2:
    s, c = math.sinh(a.val), math.cosh(a.val)
    return _chain(a, s, c, s)


def cosh(a: Jet2) -> Jet2:
    s, c = math.sinh(a.val), math.cosh(a.val)
    return _chain(a, c, s, c)


def tanh(a: Jet2) -> Jet2:
    t = math.tanh(a.val)
    sech2 = 1.0 - t * t
    return _chain(a, t, sech2, -2.0 * t * sech2)


def atan(a: Jet2) -> Jet2:
    v = a.val
    d1 = 1.0 / (1.0 + v * v)
    return _chain(a, math.atan(v), d1, -2.0 * v * d1 * d1)


def atanh(a: Jet2) -> Jet2:
    v = a.val
    if not -1.0 < v < 1.0:
        raise DomainError(f"atanh: argument {v!r} not in (-1, 1)")
    d1 = 1.0 / (1.0 - v * v)
    return _chain(a, math.atanh(v), d1, 2.0 * v * d1 * d1)


def pow_int(a: Jet2, n: int) -> Jet2:
    """Integer power a**n; negative bases are fine for integer exponents."""
    if n == 0:
        return _chain(a, 1.0, 0.0, 0.0)
    if n == 1:
        return _chain(a, a.val, 1.0, 0.0)
    v = a.val
    if v == 0.0 and n < 0:
        raise DomainError(f"pow_int: zero base with negative exponent {n}")
    return _chain(a, v**n, n * v ** (n - 1), n * (n - 1) * v ** (n - 2))


def _pow_real(a: Jet2, p: float) -> Jet2:
    v = a.val
    if v <= 0.0:
        raise DomainError(f"pow: fractional exponent needs positive base, got {v!r}")
    return _chain(a, v**p, p * v ** (p - 1.0), p * (p - 1.0) * v ** (p - 2.0))
