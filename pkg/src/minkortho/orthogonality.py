"""Isosceles and Birkhoff orthogonality: defect measures, predicates, partners.

x is isosceles orthogonal to y when ||x + y|| = ||x - y||; x is Birkhoff
orthogonal to y when ||x + t y|| >= ||x|| for every real t.  Both relations
get a nonnegative defect (zero iff the relation holds) so callers pick their
own thresholds.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from ._search import bisect_root, golden_min
from .errors import ConstructionFailure
from .plane import Circle, NormSpec, ORIGIN, Vec2, circle_point

DEFAULT_TOL = 1e-9


@dataclass(frozen=True, slots=True)
class OrthoDefect:
    """Tagged orthogonality defect; value 0 means the relation holds."""

    value: float
    kind: str  # "isosceles" | "birkhoff"

    @staticmethod
    def isosceles(spec: NormSpec, x: Vec2, y: Vec2) -> "OrthoDefect":
        return OrthoDefect(isosceles_defect(spec, x, y), "isosceles")

    @staticmethod
    def birkhoff(spec: NormSpec, x: Vec2, y: Vec2) -> "OrthoDefect":
        return OrthoDefect(birkhoff_defect(spec, x, y), "birkhoff")


def isosceles_defect(spec: NormSpec, x: Vec2, y: Vec2) -> float:
    """| ||x+y|| - ||x-y|| |; zero iff x and y are isosceles orthogonal."""
    return abs(spec(x + y) - spec(x - y))


def is_isosceles_orthogonal(spec: NormSpec, x: Vec2, y: Vec2, tol: float = DEFAULT_TOL) -> bool:
    return isosceles_defect(spec, x, y) <= tol


def birkhoff_defect(spec: NormSpec, x: Vec2, y: Vec2, width: float = 1e-12) -> float:
    """||x|| - min_t ||x + t y||, a nonnegative convex-minimization residual.

    Zero iff x is Birkhoff orthogonal to y.  The minimum is bracketed by
    |t| <= 2 ||x|| / ||y|| + 1 (outside it ||x + t y|| >= ||t y|| - ||x|| > ||x||)
    and located by golden-section search, which needs no derivatives and so
    also handles the piecewise linear sections of polyhedral gauges.
    By convention the defect against y = 0 is 0.
    """
    ny = spec(y)
    if ny == 0.0:
        return 0.0
    nx = spec(x)
    if nx == 0.0:
        return 0.0
    bound = 2.0 * nx / ny + 1.0

    def along(t: float) -> float:
        return spec.value_xy(x.x + t * y.x, x.y + t * y.y)

    _, fmin = golden_min(along, -bound, bound, width=width * max(1.0, bound))
    return max(0.0, nx - fmin)


def is_birkhoff_orthogonal(spec: NormSpec, x: Vec2, y: Vec2, tol: float = DEFAULT_TOL) -> bool:
    return birkhoff_defect(spec, x, y) <= tol


def isosceles_partner(spec: NormSpec, x: Vec2, r: float, sweep: int = 64) -> Vec2:
    """A vector y with ||y|| = r and x isosceles orthogonal to y.

    Found as a root of g(theta) = ||x + y(theta)|| - ||x - y(theta)|| over the
    circle parameterization of C(O, r).  Since g(theta + pi) = -g(theta), the
    sweep over [0, pi] always brackets a sign change; bisection refines it.
    The partner with the smallest bracketing angle is returned; the mirrored
    partner is its negation.
    """
    if x == ORIGIN:
        raise ValueError("isosceles_partner requires x != 0")
    if not r > 0.0:
        raise ValueError(f"partner radius must be positive, got {r}")
    circ = Circle(ORIGIN, r)
    scale = max(1.0, spec(x), r)
    gtol = 1e-12 * scale

    def g(theta: float) -> float:
        y = circle_point(spec, circ, theta)
        return spec(x + y) - spec(x - y)

    thetas = [math.pi * i / sweep for i in range(sweep + 1)]
    values = [g(t) for t in thetas]
    root = None
    for i in range(sweep + 1):
        if abs(values[i]) <= gtol:
            root = thetas[i]
            break
        if i < sweep and (values[i] > 0.0) != (values[i + 1] > 0.0):
            root, resid = bisect_root(g, thetas[i], thetas[i + 1], values[i], values[i + 1],
                                      ftol=gtol)
            if abs(resid) > 1e-9 * scale:
                raise ConstructionFailure(
                    f"isosceles partner bisection stalled at defect {abs(resid):.3e}"
                )
            break
    if root is None:
        # Unreachable for a continuous gauge: g flips sign across half a turn.
        raise ConstructionFailure("no isosceles partner bracket found over the sweep")
    return circle_point(spec, circ, root)
