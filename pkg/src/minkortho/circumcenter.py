"""Circumcenter sets in a normed plane, found by multi-start root finding.

The circumcenter set of a triangle is every point equidistant (in the gauge)
from its three vertices.  Depending on the gauge it may be empty, a single
point, or a continuum, so the solver reports every converged cluster
representative instead of assuming uniqueness.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import PreconditionError
from .plane import NormSpec, Vec2

COLLINEAR_TOL = 1e-12
ACCEPT_TOL = 1e-9


@dataclass(frozen=True, slots=True)
class Triangle:
    a: Vec2
    b: Vec2
    c: Vec2

    def vertices(self) -> tuple[Vec2, Vec2, Vec2]:
        return (self.a, self.b, self.c)

    def diameter(self) -> float:
        """Largest pairwise Euclidean distance between vertices."""
        return max((self.a - self.b).euclidean(),
                   (self.a - self.c).euclidean(),
                   (self.b - self.c).euclidean())

    def has_duplicate_vertex(self) -> bool:
        return self.a == self.b or self.a == self.c or self.b == self.c

    def is_collinear(self, tol: float = COLLINEAR_TOL) -> bool:
        d = self.diameter()
        return abs((self.b - self.a).cross(self.c - self.a)) <= tol * max(1.0, d * d)

    def translated(self, v: Vec2) -> "Triangle":
        return Triangle(self.a + v, self.b + v, self.c + v)


@dataclass(frozen=True, slots=True)
class CircumcenterSet:
    """Deduplicated circumcenter representatives with their radii and residuals."""

    centers: tuple[Vec2, ...]
    radius_at: tuple[float, ...]
    residual_at: tuple[float, ...]
    possibly_continuum: bool
    note: str | None = None

    def __len__(self) -> int:
        return len(self.centers)

    def __bool__(self) -> bool:
        return bool(self.centers)


def bisector_residual(spec: NormSpec, tri: Triangle, x: Vec2) -> tuple[float, float]:
    """(||x-a|| - ||x-b||, ||x-a|| - ||x-c||); both zero iff x is a circumcenter."""
    da = spec(x - tri.a)
    return (da - spec(x - tri.b), da - spec(x - tri.c))


def circumcenters(spec: NormSpec, tri: Triangle, grid: int = 16, max_iter: int = 60,
                  accept_tol: float = ACCEPT_TOL, dedup_factor: float = 1e-6) -> CircumcenterSet:
    """All circumcenters reachable from a start grid around the triangle.

    Damped Newton iterations with central-difference Jacobians run from a
    grid x grid lattice over the bounding box inflated by twice the triangle
    diameter.  Starts whose Jacobian goes singular or whose residual stops
    improving are abandoned; everything that ends with residual components
    <= accept_tol is clustered at dedup_factor * diameter and reported.
    The search is deliberately local: bisector curves are unbounded, but
    centers of non-degenerate triangles at this scale live near the triangle.
    """
    if tri.has_duplicate_vertex():
        raise PreconditionError("circumcenters requires pairwise distinct vertices")
    verts = np.array([v.as_tuple() for v in tri.vertices()])
    diam = tri.diameter()

    def residual(pts: np.ndarray) -> np.ndarray:
        da = spec.value_array(pts - verts[0])
        db = spec.value_array(pts - verts[1])
        dc = spec.value_array(pts - verts[2])
        return np.stack([da - db, da - dc], axis=-1)

    lo = verts.min(axis=0) - 2.0 * diam
    hi = verts.max(axis=0) + 2.0 * diam
    gx = np.linspace(lo[0], hi[0], grid)
    gy = np.linspace(lo[1], hi[1], grid)
    X = np.stack(np.meshgrid(gx, gy, indexing="ij"), axis=-1).reshape(-1, 2)

    h = 1e-7 * (1.0 + diam)
    resid_floor = 1e-13 * (1.0 + diam)
    max_step = 8.0 * diam

    R = residual(X)
    rn = np.abs(R).max(axis=1)
    active = np.ones(len(X), dtype=bool)
    ex = np.array([h, 0.0])
    ey = np.array([0.0, h])

    for _ in range(max_iter):
        act = np.flatnonzero(active)
        if act.size == 0:
            break
        act = act[rn[act] > resid_floor]
        active[:] = False
        active[act] = True
        if act.size == 0:
            break
        P = X[act]
        Fx = (residual(P + ex) - residual(P - ex)) / (2.0 * h)
        Fy = (residual(P + ey) - residual(P - ey)) / (2.0 * h)
        j11, j21 = Fx[:, 0], Fx[:, 1]
        j12, j22 = Fy[:, 0], Fy[:, 1]
        det = j11 * j22 - j12 * j21
        jscale = (np.abs(j11) + np.abs(j12)) * (np.abs(j21) + np.abs(j22))
        ok = np.abs(det) > 1e-12 * (jscale + 1e-300)
        active[act[~ok]] = False
        act = act[ok]
        if act.size == 0:
            break
        F = R[act]
        d = np.empty((act.size, 2))
        dd = det[ok]
        d[:, 0] = (-F[:, 0] * j22[ok] + F[:, 1] * j12[ok]) / dd
        d[:, 1] = (F[:, 0] * j21[ok] - F[:, 1] * j11[ok]) / dd
        dlen = np.hypot(d[:, 0], d[:, 1])
        clip = np.where(dlen > max_step, max_step / np.maximum(dlen, 1e-300), 1.0)
        d *= clip[:, None]
        # Halve the step until the residual improves; abandon stalled starts.
        undecided = np.ones(act.size, dtype=bool)
        base = rn[act]
        s = 1.0
        for _ in range(24):
            idx = np.flatnonzero(undecided)
            if idx.size == 0:
                break
            trial = X[act[idx]] + s * d[idx]
            tr = residual(trial)
            trn = np.abs(tr).max(axis=1)
            better = trn < base[idx]
            hit = idx[better]
            X[act[hit]] = trial[better]
            R[act[hit]] = tr[better]
            rn[act[hit]] = trn[better]
            undecided[hit] = False
            s *= 0.5
        active[act[undecided]] = False

    rn_final = np.abs(residual(X)).max(axis=1)
    keep = np.flatnonzero(rn_final <= accept_tol)
    note = None
    if keep.size == 0 and tri.is_collinear():
        note = "degenerate: collinear"

    order = keep[np.lexsort((X[keep, 1], X[keep, 0]))]
    dedup = dedup_factor * max(diam, 1e-300)
    reps: list[int] = []
    members: list[list[int]] = []
    for i in order:
        for k, r in enumerate(reps):
            if math.hypot(X[i, 0] - X[r, 0], X[i, 1] - X[r, 1]) < dedup:
                members[k].append(i)
                break
        else:
            reps.append(i)
            members.append([i])
    centers: list[Vec2] = []
    radii: list[float] = []
    residuals: list[float] = []
    for k in range(len(reps)):
        best = min(members[k], key=lambda i: (rn_final[i], i))
        c = Vec2(float(X[best, 0]), float(X[best, 1]))
        centers.append(c)
        radii.append(spec(c - tri.a))
        residuals.append(float(rn_final[best]))
    return CircumcenterSet(
        centers=tuple(centers),
        radius_at=tuple(radii),
        residual_at=tuple(residuals),
        possibly_continuum=len(centers) >= 3,
        note=note,
    )


def circumradius(spec: NormSpec, tri: Triangle, center: Vec2, tol: float = 1e-6) -> float:
    """||center - a|| once center is verified equidistant from all vertices."""
    r1, r2 = bisector_residual(spec, tri, center)
    radius = spec(center - tri.a)
    if max(abs(r1), abs(r2)) > tol * (1.0 + radius):
        raise PreconditionError(
            f"point is not a circumcenter: bisector residual ({r1:.3e}, {r2:.3e})"
        )
    return radius
