"""Trigonometric solution of a real cubic with three distinct real roots."""
from __future__ import annotations

import math
from typing import Literal, NamedTuple

Order = Literal["decreasing", "increasing"]


class CubicCoefficients(NamedTuple):
    """Monic cubic h^3 - s1 h^2 + s2 h - s3."""

    s1: float
    s2: float
    s3: float

    def discriminant(self) -> float:
        s1, s2, s3 = self
        return (s1 * s1 * s2 * s2 - 4 * s1**3 * s3 - 4 * s2**3
                + 18 * s1 * s2 * s3 - 27 * s3 * s3)

    def __call__(self, h: float) -> float:
        s1, s2, s3 = self
        return ((h - s1) * h + s2) * h - s3

    def derivative(self, h: float) -> float:
        return (3 * h - 2 * self.s1) * h + self.s2


class DegenerateCubic(ValueError):
    pass


def trig_angle(c: CubicCoefficients, order: Order = "decreasing") -> float:
    """The angle in (0, pi/3) used by the trigonometric root formula."""
    s1, s2, s3 = c
    spread = s1 * s1 - 3 * s2
    shape = 2 * s1**3 - 9 * s1 * s2 + 27 * s3
    if not spread > 0:
        raise DegenerateCubic("s1^2 - 3 s2 must be positive")
    arg = shape / (2 * spread**1.5)
    if order == "increasing":
        arg = -arg
    # rounding can push |arg| a hair past 1
    return math.acos(max(-1.0, min(1.0, arg))) / 3


def solve_cubic_trig(c: CubicCoefficients, order: Order = "decreasing",
                     polish: bool = True) -> tuple[float, float, float]:
    """Roots h_j = s1/3 + (2/3) sqrt(s1^2 - 3 s2) cos(t - 2 pi j / 3).

    ``order="decreasing"`` gives h0 > h1 > h2. ``"increasing"`` uses the
    angle of the reflected cubic and flips the sign of the cosine term,
    giving h0 < h1 < h2. Raises DegenerateCubic unless the discriminant is strictly positive.
    """
    if order not in ("decreasing", "increasing"):
        raise ValueError(f"unknown order {order!r}")
    c = CubicCoefficients(*map(float, c))
    if not all(math.isfinite(x) for x in c):
        raise ValueError("coefficients must be finite")
    if not c.discriminant() > 0:
        raise DegenerateCubic("degenerate or complex roots (discriminant <= 0)")
    s1, s2, s3 = c
    spread = s1 * s1 - 3 * s2
    shape = 2 * s1**3 - 9 * s1 * s2 + 27 * s3
    assert spread > 0 and abs(shape) < 2 * spread**1.5 * (1 + 1e-12)
    t = trig_angle(c, order)
    radius = 2.0 / 3.0 * math.sqrt(spread)
    if order == "increasing":
        radius = -radius
    roots = [s1 / 3 + radius * math.cos(t - 2 * math.pi * j / 3) for j in range(3)]
    if polish:
        roots = [_newton_step(c, h) for h in roots]
    return tuple(roots)


def _newton_step(c: CubicCoefficients, h: float) -> float:
    d = c.derivative(h)
    if d == 0:
        return h
    h1 = h - c(h) / d
    return h1 if abs(c(h1)) <= abs(c(h)) else h
