"""Busemann angular bisectors and line-membership defects."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DegenerateInputError
from .plane import NormSpec, Vec2


@dataclass(frozen=True, slots=True)
class Ray:
    origin: Vec2
    through: Vec2

    def __post_init__(self):
        if self.through == self.origin:
            raise ValueError("ray needs a point distinct from its origin")

    def direction(self) -> Vec2:
        return self.through - self.origin


def busemann_bisector(spec: NormSpec, p: Vec2, a: Vec2, b: Vec2) -> Ray:
    """Bisector of the angle spanned by the rays from p through a and b.

    The ray from p in the direction of the half-sum of the gauge-normalized
    directions toward a and b.  Invariant under rescaling a or b along their
    rays; when ||a - p|| = ||b - p|| it passes through (a + b) / 2.
    """
    da = a - p
    db = b - p
    na = spec(da)
    nb = spec(db)
    if na == 0.0 or nb == 0.0:
        raise DegenerateInputError("bisector endpoints must be distinct from the apex")
    s = Vec2(0.5 * (da.x / na + db.x / nb), 0.5 * (da.y / na + db.y / nb))
    if s.euclidean() <= 1e-12:
        raise DegenerateInputError("opposite rays: angular bisector undefined")
    return Ray(p, p + s)


def line_membership_defect(point: Vec2, line_p: Vec2, line_q: Vec2) -> float:
    """Euclidean distance from a point to the line through line_p and line_q.

    Collinearity is an affine notion, so the truth of "defect == 0" does not
    depend on the gauge; the auxiliary Euclidean metric is only a reporting
    choice for the nonzero magnitudes.
    """
    d = line_q - line_p
    length = d.euclidean()
    if length == 0.0:
        raise DegenerateInputError("line through two coincident points is undefined")
    return abs((point - line_p).cross(d)) / length
