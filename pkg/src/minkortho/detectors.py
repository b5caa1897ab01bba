"""Euclideanity detectors driven by sampled orthocentric systems.

Starting from an isosceles-orthogonal pair (x, y), a four-point orthocentric
system is built constructively: with p4 = y, p3 = -y, x1 = x, x2 = -x and
lambda = ||x + y||, a third base point x3 is located on an arc of the circle
around p4 where the chords to x1 and x2 balance.  Five defect functionals
are then evaluated on such systems; each vanishes identically exactly in the
Euclidean plane, so positive defects over random samples are a non-Euclidean
signature.  The converse only ever yields a "consistent with Euclidean"
verdict: finite sampling cannot certify Euclideanity.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass

from ._search import bisect_root
from .busemann import busemann_bisector, line_membership_defect
from .errors import ConstructionFailure, DegenerateInputError, PreconditionError
from .orthogonality import birkhoff_defect, isosceles_defect, isosceles_partner
from .orthocentric import point_symmetry
from .plane import Circle, NormSpec, Vec2, circle_point

DETECTOR_NAMES = ("T2", "T3", "T4", "T5a", "T5b")
ISO_PAIR_TOL = 1e-8

TWO_PI = 2.0 * math.pi


@dataclass(frozen=True, slots=True)
class Lemma1Instance:
    """Constructive orthocentric system seeded by an isosceles-orthogonal pair."""

    x: Vec2
    y: Vec2
    lam: float
    x1: Vec2
    x2: Vec2
    x3: Vec2
    x4: Vec2
    p1: Vec2
    p2: Vec2
    p3: Vec2
    p4: Vec2
    q: Vec2
    arc: int

    def points(self) -> tuple[Vec2, Vec2, Vec2, Vec2]:
        return (self.p1, self.p2, self.p3, self.p4)


def _require_iso_pair(spec: NormSpec, x: Vec2, y: Vec2, tol: float) -> None:
    scale = max(1.0, spec(x), spec(y))
    defect = isosceles_defect(spec, x, y)
    if defect > tol * scale:
        raise PreconditionError(
            f"(x, y) is not an isosceles-orthogonal pair: defect {defect:.3e}"
        )


def _arc_interval(spec: NormSpec, circ: Circle, start: Vec2, end: Vec2,
                  side_a: Vec2, side_b: Vec2, arc: int) -> tuple[float, float]:
    """Angular interval of the arc from start to end on the requested side.

    The side is the sign of cross(z - side_a, side_b - side_a) at probe
    points of the arc; a probe of sign 0 (arc lying on the chord line, as
    happens on flat pieces of polyhedral circles) is accepted for either
    requested side if the opposite side matched the other candidate.
    """
    t1 = math.atan2(start.y - circ.center.y, start.x - circ.center.x)
    t2 = math.atan2(end.y - circ.center.y, end.x - circ.center.x)
    delta = (t2 - t1) % TWO_PI
    if delta == 0.0:
        raise ConstructionFailure("arc endpoints coincide in direction")
    candidates = [(t1, t1 + delta), (t2, t2 + (TWO_PI - delta))]
    chord = side_b - side_a

    def probe_sign(lo: float, hi: float) -> int:
        best = 0.0
        for f in (0.25, 0.5, 0.75):
            z = circle_point(spec, circ, lo + f * (hi - lo))
            s = (z - side_a).cross(chord)
            if abs(s) > abs(best):
                best = s
        if best > 0.0:
            return 1
        if best < 0.0:
            return -1
        return 0

    signs = [probe_sign(*candidates[0]), probe_sign(*candidates[1])]
    for k in (0, 1):
        if signs[k] == arc:
            return candidates[k]
    for k in (0, 1):
        if signs[k] == 0:
            return candidates[k]
    raise ConstructionFailure(f"no arc found on side {arc:+d}")


def lemma1_construct(spec: NormSpec, x: Vec2, y: Vec2, arc: int = 1,
                     tol: float = ISO_PAIR_TOL, check: bool = True) -> Lemma1Instance:
    """Build the instance, locating x3 on the chosen arc by bisection.

    arc = +1 selects the side of the oriented line x1 -> x2 where
    cross(z - x1, x2 - x1) > 0; arc = -1 the mirror side.  The chord-balance
    function f(theta) = ||x2 - x3(theta)|| - ||x1 - x3(theta)|| changes sign
    between the arc ends (it equals +/- ||x1 - x2|| there), so a root always
    exists; flat pieces of polyhedral gauges merely make it non-unique.
    """
    if arc not in (1, -1):
        raise ValueError("arc must be +1 or -1")
    if x == Vec2(0.0, 0.0) or y == Vec2(0.0, 0.0):
        raise PreconditionError("lemma1_construct requires x != 0 and y != 0")
    _require_iso_pair(spec, x, y, tol)
    lam = spec(x + y)
    p4, p3, x1, x2 = y, -y, x, -x
    circ = Circle(p4, lam)
    lo, hi = _arc_interval(spec, circ, x1, x2, x1, x2, arc)

    def f(theta: float) -> float:
        z = circle_point(spec, circ, theta)
        return spec(x2 - z) - spec(x1 - z)

    scale = max(1.0, lam)
    ftol = 1e-11 * scale
    flo, fhi = f(lo), f(hi)
    if flo == 0.0 and fhi == 0.0:
        # Whole arc balanced (flat polyhedral case): take the midpoint.
        theta, fval = 0.5 * (lo + hi), 0.0
    elif (flo > 0.0) == (fhi > 0.0):
        raise ConstructionFailure(
            f"chord-balance function does not change sign over the arc "
            f"(f = {flo:.3e} .. {fhi:.3e}); expected +/- ||x1 - x2||"
        )
    else:
        theta, fval = bisect_root(f, lo, hi, flo, fhi, ftol=ftol)
    if abs(fval) > 1e-8 * scale:
        raise ConstructionFailure(f"chord balance stalled at {abs(fval):.3e}")
    x3 = circle_point(spec, circ, theta)
    q = (p3 + x3) * 0.5
    p1 = point_symmetry(q, x1)
    p2 = point_symmetry(q, x2)
    x4 = point_symmetry(q, p4)
    inst = Lemma1Instance(x=x, y=y, lam=lam, x1=x1, x2=x2, x3=x3, x4=x4,
                          p1=p1, p2=p2, p3=p3, p4=p4, q=q, arc=arc)
    if check:
        verify_instance(spec, inst)
    return inst


def verify_instance(spec: NormSpec, inst: Lemma1Instance, tol: float = 1e-8) -> None:
    """Assert the four invariant groups of a constructed instance."""
    scale = max(1.0, inst.lam)
    checks = {
        "isosceles pair": isosceles_defect(spec, inst.x, inst.y),
        "x3 on circle": abs(spec(inst.x3 - inst.p4) - inst.lam),
        "chord balance": abs(spec(inst.x1 - inst.x3) - spec(inst.x2 - inst.x3)),
        "q on half-radius circle": abs(spec(inst.q) - 0.5 * inst.lam),
        "cross membership x1-p2": abs(spec(inst.x1 - inst.p2) - inst.lam),
        "cross membership x2-p1": abs(spec(inst.x2 - inst.p1) - inst.lam),
        "cross membership p3-x4": abs(spec(inst.p3 - inst.x4) - inst.lam),
    }
    for name, defect in checks.items():
        if defect > tol * scale:
            raise ConstructionFailure(f"instance invariant '{name}' violated: {defect:.3e}")


def arc_separation_diagnostic(inst: Lemma1Instance) -> bool | None:
    """Whether p3 and the line through p1, p2 fall on opposite sides of L1.

    L1 is the line through the reflections of p3 across x1 and x2; it is
    parallel to the line through p1 and p2, so one side probe per object
    decides.  Returns None when either object lies on L1 (no separation
    verdict).  Diagnostic of instance geometry only, not a detector.
    """
    a = point_symmetry(inst.x1, inst.p3)
    b = point_symmetry(inst.x2, inst.p3)
    chord = b - a
    if chord.euclidean() == 0.0:
        return None
    s_line = (inst.p1 - a).cross(chord)
    s_p3 = (inst.p3 - a).cross(chord)
    if s_line == 0.0 or s_p3 == 0.0:
        return None
    return (s_line > 0.0) != (s_p3 > 0.0)


def detector_T2(spec: NormSpec, inst: Lemma1Instance) -> float:
    """Worst Birkhoff-orthogonality defect across the three diagonal pairings.

    For each splitting of {p1, p2, p3, p4} into two pairs, the difference
    vector of one pair should be Birkhoff orthogonal to that of the other.
    The relation quantifies over every index assignment and Birkhoff
    orthogonality is not symmetric, so each pairing is measured in both
    orders; every defect is normalized by the length of its first vector.
    """
    p1, p2, p3, p4 = inst.points()
    worst = 0.0
    for (a, b), (c, d) in (((p1, p2), (p3, p4)),
                           ((p1, p3), (p2, p4)),
                           ((p1, p4), (p2, p3))):
        u = a - b
        v = c - d
        for lhs, rhs in ((u, v), (v, u)):
            nl = spec(lhs)
            if nl == 0.0:
                continue
            worst = max(worst, birkhoff_defect(spec, lhs, rhs) / nl)
    return worst


def detector_T3(spec: NormSpec, inst: Lemma1Instance) -> float:
    """Distance of p4 from the line through p3 and the midpoint of p1 p2.

    Applies because the construction balances ||p3 - p1|| and ||p3 - p2||.
    Normalized by the instance radius.
    """
    mid = (inst.p1 + inst.p2) * 0.5
    if (mid - inst.p3).euclidean() <= 1e-12 * max(1.0, inst.lam):
        raise DegenerateInputError("median line undefined: p3 coincides with the midpoint")
    return line_membership_defect(inst.p4, inst.p3, mid) / inst.lam


def detector_T4(spec: NormSpec, x: Vec2, y: Vec2, tol: float = ISO_PAIR_TOL) -> float:
    """Equality defect for the system whose p4 sits on the median line by design.

    Uses the explicit points p1 = lambda y/||y|| - x, p2 = lambda y/||y|| + x,
    p3 = -y, for which p4 = y automatically lies on the line through p3 and
    (p1 + p2)/2.  The returned value equals the isosceles defect of
    (x, t y) with t = 1 + lambda/||y||, normalized by lambda.
    """
    _require_iso_pair(spec, x, y, tol)
    ny = spec(y)
    if ny == 0.0:
        raise PreconditionError("detector_T4 requires y != 0")
    lam = spec(x + y)
    t = 1.0 + lam / ny
    ty = y * t
    return abs(spec(x - ty) - spec(x + ty)) / lam


def _bisector_alignment(spec: NormSpec, p3: Vec2, p4: Vec2, p1: Vec2, p2: Vec2) -> float:
    """Signed, scale-free misalignment of p4 from the bisector line at p3."""
    ray = busemann_bisector(spec, p3, p1, p2)
    w = ray.direction()
    d4 = p4 - p3
    denom = w.euclidean() * d4.euclidean()
    if denom == 0.0:
        raise DegenerateInputError("alignment undefined: zero direction")
    return w.cross(d4) / denom


def detector_T5b(spec: NormSpec, x: Vec2, y: Vec2, tol: float = ISO_PAIR_TOL,
                 samples: int = 33) -> float:
    """Equality defect for a system whose p4 lies on the Busemann bisector line.

    If the explicit points of detector_T4 already put p4 on the bisector of
    the rays from p3 toward p1 and p2 (they do whenever the chord norms
    balance, in particular in the Euclidean plane), their equality defect is
    returned directly.  Otherwise a balanced system is forced by moving x3
    along the arc between the antipodes of x1 and x2 until the signed
    bisector misalignment of p4 crosses zero, and the equality defect is
    measured there.
    """
    _require_iso_pair(spec, x, y, tol)
    ny = spec(y)
    if ny == 0.0:
        raise PreconditionError("detector_T5b requires y != 0")
    lam = spec(x + y)
    p4, p3, x1, x2 = y, -y, x, -x
    scale = max(1.0, lam)

    unit_y = y / ny
    p1e = unit_y * lam - x
    p2e = unit_y * lam + x
    try:
        if abs(_bisector_alignment(spec, p3, p4, p1e, p2e)) <= 1e-9:
            return abs(spec(p3 - p1e) - spec(p3 - p2e)) / lam
    except DegenerateInputError:
        pass

    circ = Circle(p4, lam)
    a1 = point_symmetry(p4, x1)
    a2 = point_symmetry(p4, x2)

    def system_at(theta: float) -> tuple[Vec2, Vec2]:
        x3 = circle_point(spec, circ, theta)
        q = (p3 + x3) * 0.5
        return point_symmetry(q, x1), point_symmetry(q, x2)

    def alignment(theta: float) -> float:
        p1, p2 = system_at(theta)
        return _bisector_alignment(spec, p3, p4, p1, p2)

    last_error: ConstructionFailure | None = None
    for arc in (1, -1):
        try:
            lo, hi = _arc_interval(spec, circ, a1, a2, a1, a2, arc)
        except ConstructionFailure as err:
            last_error = err
            continue
        span = hi - lo
        grid = [lo + span * (k + 0.5) / samples for k in range(samples)]
        vals = []
        for theta in grid:
            try:
                vals.append(alignment(theta))
            except DegenerateInputError:
                vals.append(math.nan)
        root = None
        for i in range(samples):
            if math.isnan(vals[i]):
                continue
            if abs(vals[i]) <= 1e-12:
                root = grid[i]
                break
            if i + 1 < samples and not math.isnan(vals[i + 1]) and \
                    (vals[i] > 0.0) != (vals[i + 1] > 0.0):
                root, _ = bisect_root(alignment, grid[i], grid[i + 1],
                                      vals[i], vals[i + 1], ftol=1e-12)
                break
        if root is None:
            last_error = ConstructionFailure(
                f"bisector alignment has no crossing on arc {arc:+d}"
            )
            continue
        p1r, p2r = system_at(root)
        return abs(spec(p3 - p1r) - spec(p3 - p2r)) / lam
    raise last_error if last_error is not None else ConstructionFailure(
        "bisector-aligned system not found"
    )


def detector_T5a(spec: NormSpec, inst: Lemma1Instance, tol: float = 1e-8) -> float:
    """Distance of p4 from the line containing the Busemann bisector at p3.

    Requires the equal-chord hypothesis ||p3 - p1|| = ||p3 - p2||, which the
    constructive instances satisfy.  Normalized by the instance radius.
    """
    n1 = spec(inst.p3 - inst.p1)
    n2 = spec(inst.p3 - inst.p2)
    if abs(n1 - n2) > tol * max(1.0, inst.lam):
        raise PreconditionError(
            f"equal-chord hypothesis violated: {n1:.12g} vs {n2:.12g}"
        )
    ray = busemann_bisector(spec, inst.p3, inst.p1, inst.p2)
    return line_membership_defect(inst.p4, ray.origin, ray.through) / inst.lam


@dataclass(frozen=True, slots=True)
class DetectorStats:
    max: float
    mean: float
    count: int
    excluded: int


@dataclass(frozen=True, slots=True)
class DetectorReport:
    """Per-detector defect statistics for one gauge over seeded samples."""

    norm_id: str
    seed: int
    samples: int
    failures: int
    detectors: dict[str, DetectorStats]

    def worst(self) -> float:
        return max((s.max for s in self.detectors.values()), default=0.0)

    def to_json_dict(self) -> dict:
        return {
            "norm_id": self.norm_id,
            "seed": self.seed,
            "samples": self.samples,
            "failures": self.failures,
            "detectors": {
                name: {"max": s.max, "mean": s.mean, "count": s.count, "excluded": s.excluded}
                for name, s in self.detectors.items()
            },
        }

    def csv_rows(self) -> list[list]:
        return [[name, repr(s.max), repr(s.mean), s.count, s.excluded]
                for name, s in self.detectors.items()]

    def verdict_lines(self, tol: float = 1e-7) -> list[str]:
        lines = []
        for name, s in self.detectors.items():
            if s.count == 0:
                verdict = "no data"
            elif s.max <= tol:
                verdict = f"consistent with Euclidean (max defect <= {tol:g})"
            else:
                verdict = f"non-Euclidean signature (max defect {s.max:.3e} >= {tol:g})"
            lines.append(f"{name}: max {s.max:.6e}  mean {s.mean:.6e}  "
                         f"n {s.count}  excluded {s.excluded}  -> {verdict}")
        return lines


class _Accumulator:
    __slots__ = ("max", "total", "count", "excluded")

    def __init__(self):
        self.max = 0.0
        self.total = 0.0
        self.count = 0
        self.excluded = 0

    def add(self, value: float):
        self.max = max(self.max, value)
        self.total += value
        self.count += 1

    def stats(self) -> DetectorStats:
        mean = self.total / self.count if self.count else 0.0
        return DetectorStats(self.max, mean, self.count, self.excluded)


def euclideanity_report(spec: NormSpec, n_samples: int, seed: int = 0,
                        mag_range: tuple[float, float] = (0.1, 10.0)) -> DetectorReport:
    """Aggregate all five detectors over seeded random orthocentric systems.

    Each sample draws a direction uniformly and magnitudes log-uniformly,
    finds an isosceles partner, and builds constructive instances on both
    arcs.  Construction failures are counted and excluded; more than half of
    the samples failing aborts the report.
    """
    if n_samples < 1:
        raise ValueError("n_samples must be >= 1")
    rng = random.Random(seed)
    log_lo, log_hi = math.log(mag_range[0]), math.log(mag_range[1])
    acc = {name: _Accumulator() for name in DETECTOR_NAMES}
    failures = 0
    for _ in range(n_samples):
        theta = rng.uniform(0.0, TWO_PI)
        mag = math.exp(rng.uniform(log_lo, log_hi))
        x = Vec2(mag * math.cos(theta), mag * math.sin(theta))
        r = math.exp(rng.uniform(log_lo, log_hi))
        try:
            y = isosceles_partner(spec, x, r)
        except ConstructionFailure:
            failures += 1
            continue
        instances = []
        for arc in (1, -1):
            try:
                instances.append(lemma1_construct(spec, x, y, arc))
            except (ConstructionFailure, PreconditionError):
                pass
        if not instances:
            failures += 1
            continue
        for inst in instances:
            acc["T2"].add(detector_T2(spec, inst))
            for name, fn in (("T3", detector_T3), ("T5a", detector_T5a)):
                try:
                    acc[name].add(fn(spec, inst))
                except (DegenerateInputError, PreconditionError):
                    acc[name].excluded += 1
        try:
            acc["T4"].add(detector_T4(spec, x, y))
        except PreconditionError:
            acc["T4"].excluded += 1
        try:
            acc["T5b"].add(detector_T5b(spec, x, y))
        except (ConstructionFailure, PreconditionError, DegenerateInputError):
            acc["T5b"].excluded += 1
    if failures > n_samples // 2:
        raise ConstructionFailure(
            f"{failures} of {n_samples} sample constructions failed; report aborted"
        )
    return DetectorReport(
        norm_id=spec.label,
        seed=seed,
        samples=n_samples,
        failures=failures,
        detectors={name: acc[name].stats() for name in DETECTOR_NAMES},
    )
