"""Antitriangle and orthocenter constructions for triangles in a normed plane.

Given a base triangle x1 x2 x3 and a reference point p4, reflecting p4
through the three side midpoints yields the antitriangle p1 p2 p3.  Both
triangles are point-symmetric about a common center q, and when p4 is a
circumcenter the reflected point x4 = S_q(p4) plays the role of the
orthocenter: the three circles of radius lambda around p1, p2, p3 all pass
through it, and the six side midpoints lie on a circle of radius lambda / 2
around q.  The construction itself is pure affine algebra and never touches
the gauge; the gauge enters only through the verification predicates.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from .circumcenter import Triangle, bisector_residual
from .errors import ConstructionFailure, DegenerateInputError, PreconditionError
from .plane import NormSpec, Vec2

MEMBERSHIP_TOL = 1e-9


def point_symmetry(p: Vec2, w: Vec2) -> Vec2:
    """Reflection of w through p: 2p - w.  An involution and an isometry."""
    return Vec2(2.0 * p.x - w.x, 2.0 * p.y - w.y)


def homothety_minus2(g: Vec2, w: Vec2) -> Vec2:
    """Homothety with center g and ratio -2: 3g - 2w."""
    return Vec2(3.0 * g.x - 2.0 * w.x, 3.0 * g.y - 2.0 * w.y)


@dataclass(frozen=True, slots=True)
class OrthocentricConfig:
    """Base triangle, its antitriangle, and every derived point.

    radius is the shared circle radius and is only set when p4 was verified
    as a circumcenter of the base triangle.
    """

    x1: Vec2
    x2: Vec2
    x3: Vec2
    p4: Vec2
    m1: Vec2
    m2: Vec2
    m3: Vec2
    p1: Vec2
    p2: Vec2
    p3: Vec2
    q: Vec2
    x4: Vec2
    d1: Vec2
    d2: Vec2
    d3: Vec2
    g: Vec2
    g1: Vec2
    radius: float | None
    degenerate: bool

    def base_triangle(self) -> Triangle:
        return Triangle(self.x1, self.x2, self.x3)

    def anti_triangle(self) -> Triangle:
        return Triangle(self.p1, self.p2, self.p3)

    def to_json_dict(self) -> dict:
        out: dict = {}
        for name in ("x1", "x2", "x3", "x4", "p1", "p2", "p3", "p4",
                     "m1", "m2", "m3", "d1", "d2", "d3", "q", "g", "g1"):
            v: Vec2 = getattr(self, name)
            out[name] = [v.x, v.y]
        out["radius"] = self.radius
        out["degenerate"] = self.degenerate
        return out


def antitriangle(x1: Vec2, x2: Vec2, x3: Vec2, p4: Vec2) -> OrthocentricConfig:
    """Build the full configuration from the base points and p4.

    Norm-free: every field is an affine combination of the inputs.  Collinear
    or coincident base points do not abort the construction (the identities
    still hold); they only set the degenerate flag, which makes the
    verification operations refuse to certify.
    """
    m1 = (x2 + x3) * 0.5
    m2 = (x1 + x3) * 0.5
    m3 = (x1 + x2) * 0.5
    p1 = point_symmetry(m1, p4)
    p2 = point_symmetry(m2, p4)
    p3 = point_symmetry(m3, p4)
    q = (x1 + x2 + x3 - p4) * 0.5
    x4 = point_symmetry(q, p4)
    d1 = (p2 + p3) * 0.5
    d2 = (p1 + p3) * 0.5
    d3 = (p1 + p2) * 0.5
    g = (x1 + x2 + x3) / 3.0
    g1 = (p1 + p2 + p3) / 3.0
    tri = Triangle(x1, x2, x3)
    degenerate = tri.has_duplicate_vertex() or tri.is_collinear()
    return OrthocentricConfig(x1=x1, x2=x2, x3=x3, p4=p4, m1=m1, m2=m2, m3=m3,
                              p1=p1, p2=p2, p3=p3, q=q, x4=x4, d1=d1, d2=d2, d3=d3,
                              g=g, g1=g1, radius=None, degenerate=degenerate)


def orthocenter_from_circumcenter(spec: NormSpec, tri: Triangle, p4: Vec2,
                                  tol: float = MEMBERSHIP_TOL) -> OrthocentricConfig:
    """Configuration with the shared radius set, for a verified circumcenter p4.

    Deterministic: one circumcenter in, exactly one orthocenter out.  Raises
    if p4 fails the equidistance check, reporting both residual components.
    """
    r1, r2 = bisector_residual(spec, tri, p4)
    if max(abs(r1), abs(r2)) > tol:
        raise PreconditionError(
            f"p4 is not a circumcenter of the triangle: residual ({r1:.3e}, {r2:.3e})"
        )
    cfg = antitriangle(tri.a, tri.b, tri.c, p4)
    lam = spec(p4 - tri.a)
    cfg = replace(cfg, radius=lam)
    worst = max(abs(spec(cfg.x4 - p) - lam) for p in (cfg.p1, cfg.p2, cfg.p3))
    if worst > 2.0 * tol * (1.0 + lam) + 1e-12:
        raise ConstructionFailure(
            f"x4 failed certification as circumcenter of the antitriangle (defect {worst:.3e})"
        )
    return cfg


def _require_certifiable(cfg: OrthocentricConfig) -> float:
    if cfg.radius is None:
        raise PreconditionError("configuration has no radius: p4 was not verified as a circumcenter")
    if cfg.degenerate:
        raise DegenerateInputError("degenerate configuration: refusing to certify")
    return cfg.radius


def three_circles_check(spec: NormSpec, cfg: OrthocentricConfig) -> float:
    """Max defect of the shared-point memberships across the three circles.

    Checks ||x4 - p_i|| = lambda for i = 1, 2, 3 together with the cross
    memberships ||x1 - p2|| = ||x2 - p1|| = lambda.  All of them follow from
    point symmetry being an isometry, so the defect is tiny in every gauge
    whenever p4 is a genuine circumcenter.
    """
    lam = _require_certifiable(cfg)
    dists = (
        spec(cfg.x4 - cfg.p1),
        spec(cfg.x4 - cfg.p2),
        spec(cfg.x4 - cfg.p3),
        spec(cfg.x1 - cfg.p2),
        spec(cfg.x2 - cfg.p1),
    )
    return max(abs(d - lam) for d in dists)


def six_point_circle(spec: NormSpec, cfg: OrthocentricConfig) -> tuple[Vec2, float, float]:
    """(center, radius, max defect) of the circle through all six midpoints.

    The circle is centered at q with radius lambda / 2 and passes through the
    three side midpoints of the base triangle and the three of the
    antitriangle.
    """
    lam = _require_certifiable(cfg)
    half = 0.5 * lam
    pts = (cfg.m1, cfg.m2, cfg.m3, cfg.d1, cfg.d2, cfg.d3)
    defect = max(abs(spec(cfg.q - pt) - half) for pt in pts)
    return cfg.q, half, defect


@dataclass(frozen=True, slots=True)
class SystemWitness:
    """Index of the orthocenter point and the circumcenter that certifies it."""

    index: int
    circumcenter: Vec2
    residual: float


@dataclass(frozen=True, slots=True)
class SystemVerdict:
    status: str  # "orthocentric" | "not-orthocentric" | "indeterminate"
    witness: SystemWitness | None
    detail: str

    @property
    def is_orthocentric(self) -> bool:
        return self.status == "orthocentric"


def is_orthocentric_system(spec: NormSpec, p1: Vec2, p2: Vec2, p3: Vec2, p4: Vec2,
                           tol: float = 1e-8) -> SystemVerdict:
    """Decide whether one of the four points is an orthocenter of the others.

    For candidate index i, p_i is an orthocenter of the remaining triangle T
    exactly when w = (sum(T) - p_i) / 2 is a circumcenter of T, so the test
    inverts the orthocenter map and checks the equidistance residual of w
    directly.  That covers gauges whose circumcenter sets are continua, where
    enumerating representatives could miss the witness.
    """
    pts = (p1, p2, p3, p4)
    scale = max(1.0, max((a - b).euclidean() for a in pts for b in pts))
    for i, a in enumerate(pts):
        for j in range(i + 1, 4):
            if (a - pts[j]).euclidean() <= 1e-12 * scale:
                return SystemVerdict("indeterminate", None,
                                     f"degenerate: points {i} and {j} coincide")
    for i in range(4):
        others = [pts[j] for j in range(4) if j != i]
        w = (others[0] + others[1] + others[2] - pts[i]) * 0.5
        tri = Triangle(*others)
        r1, r2 = bisector_residual(spec, tri, w)
        resid = max(abs(r1), abs(r2))
        if resid <= tol * (1.0 + spec(w - others[0])):
            return SystemVerdict("orthocentric", SystemWitness(i, w, resid),
                                 f"point {i} is the orthocenter; circumcenter "
                                 f"({w.x:.12g}, {w.y:.12g})")
    return SystemVerdict("not-orthocentric", None,
                         "no candidate circumcenter satisfies the equidistance residual")
