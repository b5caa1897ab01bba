"""2-D normed plane: vectors, pluggable symmetric gauges, and circle parameterization.

A plane is described by a ``NormSpec``: the Minkowski functional of a centrally
symmetric convex unit ball.  Three variants are supported: the lp family
(closed forms, including p = 1 and p = inf), polygonal unit balls, and
caller-supplied black-box gauges (validated by sampling).
"""

from __future__ import annotations

import json
import math
import random
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from .errors import ConfigurationError

DEFAULT_TOL = 1e-9


@dataclass(frozen=True, slots=True)
class Vec2:
    """Point / vector of the plane.  Components must be finite."""

    x: float
    y: float

    def __post_init__(self):
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise ValueError(f"non-finite Vec2 components: ({self.x}, {self.y})")

    def __add__(self, other: "Vec2") -> "Vec2":
        return Vec2(self.x + other.x, self.y + other.y)

    def __sub__(self, other: "Vec2") -> "Vec2":
        return Vec2(self.x - other.x, self.y - other.y)

    def __neg__(self) -> "Vec2":
        return Vec2(-self.x, -self.y)

    def __mul__(self, s: float) -> "Vec2":
        return Vec2(self.x * s, self.y * s)

    __rmul__ = __mul__

    def __truediv__(self, s: float) -> "Vec2":
        return Vec2(self.x / s, self.y / s)

    def dot(self, other: "Vec2") -> float:
        return self.x * other.x + self.y * other.y

    def cross(self, other: "Vec2") -> float:
        return self.x * other.y - self.y * other.x

    def euclidean(self) -> float:
        return math.hypot(self.x, self.y)

    def as_tuple(self) -> tuple[float, float]:
        return (self.x, self.y)

    @staticmethod
    def from_seq(seq: Sequence[float]) -> "Vec2":
        if len(seq) != 2:
            raise ValueError(f"expected two coordinates, got {seq!r}")
        return Vec2(float(seq[0]), float(seq[1]))


ORIGIN = Vec2(0.0, 0.0)


@dataclass(frozen=True, slots=True)
class Circle:
    """Metric circle: center + radius * (unit ball boundary)."""

    center: Vec2
    radius: float

    def __post_init__(self):
        if not (self.radius > 0.0 and math.isfinite(self.radius)):
            raise ValueError(f"circle radius must be positive and finite, got {self.radius}")


class NormSpec:
    """A symmetric gauge on the plane.  Subclasses implement the functional.

    Instances are immutable and safe to share across threads.  ``spec(v)``
    evaluates the norm of a ``Vec2``; ``value_array`` is the vectorized form
    used by the numerical kernels.
    """

    label: str = "norm"

    def __call__(self, v: Vec2) -> float:
        return self.value_xy(v.x, v.y)

    def value_xy(self, x: float, y: float) -> float:
        raise NotImplementedError

    def value_array(self, xy: np.ndarray) -> np.ndarray:
        """Norms of an (..., 2) array of vectors."""
        raise NotImplementedError

    def to_json_dict(self) -> dict:
        raise NotImplementedError

    def __repr__(self):
        return f"<{type(self).__name__} {self.label}>"


class LpNorm(NormSpec):
    """lp gauge, 1 <= p <= inf.  p = 1 and p = inf use exact closed forms."""

    def __init__(self, p: float):
        p = float(p)
        if math.isnan(p) or p < 1.0:
            raise ConfigurationError(f"lp norm requires 1 <= p <= inf, got {p}")
        self.p = p
        self.label = "lp(inf)" if math.isinf(p) else f"lp({p:g})"

    def value_xy(self, x: float, y: float) -> float:
        p = self.p
        ax = abs(x)
        ay = abs(y)
        if p == 1.0:
            return ax + ay
        if math.isinf(p):
            return ax if ax > ay else ay
        if p == 2.0:
            return math.hypot(ax, ay)
        # Rescale by the max component so the power sum stays well conditioned.
        m = ax if ax > ay else ay
        if m == 0.0:
            return 0.0
        return m * ((ax / m) ** p + (ay / m) ** p) ** (1.0 / p)

    def value_array(self, xy: np.ndarray) -> np.ndarray:
        a = np.abs(np.asarray(xy, dtype=float))
        p = self.p
        if p == 1.0:
            return a.sum(axis=-1)
        if math.isinf(p):
            return a.max(axis=-1)
        if p == 2.0:
            return np.hypot(a[..., 0], a[..., 1])
        m = a.max(axis=-1)
        safe = np.where(m > 0.0, m, 1.0)
        scaled = a / safe[..., None]
        out = safe * (scaled[..., 0] ** p + scaled[..., 1] ** p) ** (1.0 / p)
        return np.where(m > 0.0, out, 0.0)

    def to_json_dict(self) -> dict:
        return {"kind": "lp", "p": "inf" if math.isinf(self.p) else self.p}


class PolygonalNorm(NormSpec):
    """Gauge of a centrally symmetric convex polygon containing the origin.

    The functional is evaluated exactly as the max of the per-edge linear
    forms a_e . v, where a_e . w = 1 on the supporting line of edge e; the
    maximizing edge is the one hit by the ray from the origin through v, and
    a_e . v is the corresponding 1-D scaling factor.
    """

    SYMMETRY_TOL = 1e-12

    def __init__(self, vertices: Sequence[Vec2 | Sequence[float]]):
        verts = [v if isinstance(v, Vec2) else Vec2.from_seq(v) for v in vertices]
        n = len(verts)
        if n < 4 or n % 2 != 0:
            raise ConfigurationError(
                f"polygonal unit ball needs an even number (>= 4) of vertices, got {n}"
            )
        # Normalize to counterclockwise order.
        area2 = sum(verts[i].cross(verts[(i + 1) % n]) for i in range(n))
        if area2 < 0:
            verts.reverse()
        elif area2 == 0:
            raise ConfigurationError("degenerate polygon: zero area")
        for i in range(n):
            a, b, c = verts[i], verts[(i + 1) % n], verts[(i + 2) % n]
            if (b - a).cross(c - b) <= 0:
                raise ConfigurationError(
                    "polygon vertices must make strict counterclockwise turns "
                    "(convex, no repeated or collinear vertices)"
                )
        half = n // 2
        scale = max(max(abs(v.x), abs(v.y)) for v in verts)
        for i in range(half):
            d = verts[i] + verts[i + half]
            if max(abs(d.x), abs(d.y)) > self.SYMMETRY_TOL * max(1.0, scale):
                raise ConfigurationError(
                    f"polygon is not centrally symmetric: vertex {i} vs {i + half}"
                )
        forms = []
        for i in range(n):
            a, b = verts[i], verts[(i + 1) % n]
            det = a.cross(b)
            if det <= 0:
                raise ConfigurationError("origin is not interior to the polygon")
            # Solve (f . a, f . b) = (1, 1).
            forms.append(((b.y - a.y) / det, (a.x - b.x) / det))
        self.vertices = tuple(verts)
        self._edge_forms = np.array(forms)
        self.label = f"polygonal[{n}]"

    def value_xy(self, x: float, y: float) -> float:
        best = 0.0
        for fx, fy in self._edge_forms:
            t = fx * x + fy * y
            if t > best:
                best = t
        return best

    def value_array(self, xy: np.ndarray) -> np.ndarray:
        xy = np.asarray(xy, dtype=float)
        vals = xy @ self._edge_forms.T
        return np.maximum(vals.max(axis=-1), 0.0)

    def to_json_dict(self) -> dict:
        return {"kind": "polygonal", "vertices": [[v.x, v.y] for v in self.vertices]}


class CustomNorm(NormSpec):
    """Black-box gauge, trusted after randomized validation at construction.

    Symmetry, homogeneity, the triangle inequality and strict positivity are
    checked on ``samples`` random draws; any violation is a configuration
    error rather than a silent acceptance.
    """

    def __init__(self, gauge: Callable[[Vec2], float], samples: int = 10_000,
                 label: str = "custom", check_tol: float = 1e-9):
        self.gauge = gauge
        self.label = label
        self._validate(samples, check_tol)

    def _validate(self, samples: int, tol: float):
        rng = random.Random(0x5EED)
        g = self.gauge
        z = g(ORIGIN)
        if abs(z) > tol:
            raise ConfigurationError(f"custom gauge nonzero at origin: {z}")
        for _ in range(samples):
            u = Vec2(rng.uniform(-10, 10), rng.uniform(-10, 10))
            v = Vec2(rng.uniform(-10, 10), rng.uniform(-10, 10))
            nu, nv = g(u), g(v)
            scale = max(1.0, nu, nv)
            if nu < 0 or nv < 0:
                raise ConfigurationError("custom gauge returned a negative value")
            if u != ORIGIN and nu <= tol * u.euclidean():
                raise ConfigurationError(f"custom gauge vanishes at nonzero {u}")
            if abs(g(-u) - nu) > tol * scale:
                raise ConfigurationError(f"custom gauge not symmetric at {u}")
            t = rng.uniform(-4.0, 4.0)
            if abs(g(u * t) - abs(t) * nu) > tol * scale * max(1.0, abs(t)):
                raise ConfigurationError(f"custom gauge not homogeneous at {u}, t={t}")
            if g(u + v) > nu + nv + tol * scale:
                raise ConfigurationError(f"custom gauge violates triangle inequality at {u}, {v}")

    def value_xy(self, x: float, y: float) -> float:
        return float(self.gauge(Vec2(x, y)))

    def value_array(self, xy: np.ndarray) -> np.ndarray:
        xy = np.asarray(xy, dtype=float)
        flat = xy.reshape(-1, 2)
        out = np.array([self.gauge(Vec2(px, py)) for px, py in flat])
        return out.reshape(xy.shape[:-1])

    def to_json_dict(self) -> dict:
        raise ConfigurationError("custom gauges have no JSON form")


def lp(p: float) -> LpNorm:
    return LpNorm(p)


def polygonal(vertices: Sequence[Vec2 | Sequence[float]]) -> PolygonalNorm:
    return PolygonalNorm(vertices)


def custom(gauge: Callable[[Vec2], float], samples: int = 10_000, label: str = "custom") -> CustomNorm:
    return CustomNorm(gauge, samples=samples, label=label)


def norm_from_json(data: dict | str) -> NormSpec:
    """Parse {"kind":"lp","p":2.0} or {"kind":"polygonal","vertices":[...]}.

    "p": "inf" (any capitalization) selects the max norm.
    """
    if isinstance(data, str):
        data = json.loads(data)
    if not isinstance(data, dict) or "kind" not in data:
        raise ConfigurationError(f"norm spec must be an object with a 'kind' field: {data!r}")
    kind = data["kind"]
    if kind == "lp":
        p = data.get("p")
        if isinstance(p, str):
            if p.lower() in ("inf", "infinity"):
                p = math.inf
            else:
                raise ConfigurationError(f"unrecognized lp exponent {p!r}")
        if p is None:
            raise ConfigurationError("lp norm spec requires 'p'")
        return LpNorm(p)
    if kind == "polygonal":
        verts = data.get("vertices")
        if not verts:
            raise ConfigurationError("polygonal norm spec requires 'vertices'")
        return PolygonalNorm(verts)
    raise ConfigurationError(f"unknown norm kind {kind!r}")


def norm(spec: NormSpec, v: Vec2) -> float:
    """Minkowski functional of the unit ball at v."""
    return spec(v)


def distance(spec: NormSpec, a: Vec2, b: Vec2) -> float:
    """norm(a - b); symmetric because the gauge is symmetric."""
    return spec.value_xy(a.x - b.x, a.y - b.y)


def unit_vector(spec: NormSpec, theta: float) -> Vec2:
    """The point of the unit sphere in Euclidean direction theta."""
    c, s = math.cos(theta), math.sin(theta)
    n = spec.value_xy(c, s)
    return Vec2(c / n, s / n)


def circle_point(spec: NormSpec, c: Circle, theta: float) -> Vec2:
    """Point of C(center, radius) in Euclidean direction theta from the center.

    Continuous and 2*pi-periodic in theta; sweeps the whole circle once since
    the unit ball is star-shaped about its center.
    """
    u = unit_vector(spec, theta)
    return Vec2(c.center.x + c.radius * u.x, c.center.y + c.radius * u.y)


def strict_convexity_probe(spec: NormSpec, samples: int = 1000, tol: float = DEFAULT_TOL,
                           seed: int = 0) -> bool:
    """Probabilistic certificate that the unit sphere has no flat segment.

    Samples pairs of unit vectors with Euclidean-angle separation in
    [0.05, 0.5]; a midpoint of norm >= 1 - tol is a flat spot.  Returns False
    on the first flat spot found, True otherwise (which proves nothing, but
    makes false negatives unlikely at the default sample count).
    """
    if samples < 1:
        raise ValueError("samples must be >= 1")
    rng = random.Random(seed)
    for _ in range(samples):
        theta = rng.uniform(0.0, 2.0 * math.pi)
        delta = rng.uniform(0.05, 0.5)
        u = unit_vector(spec, theta)
        v = unit_vector(spec, theta + delta)
        mid = (u + v) * 0.5
        if spec(mid) >= 1.0 - tol:
            return False
    return True
