import json
import math
import random

import pytest

from minkortho import (Circle, DegenerateInputError, PreconditionError,
                       Triangle, Vec2, antitriangle, circle_point,
                       circumcenters, homothety_minus2,
                       is_orthocentric_system, lp, norm,
                       orthocenter_from_circumcenter, point_symmetry,
                       polygonal, six_point_circle, three_circles_check)

INF = float("inf")
SQRT2 = math.sqrt(2)
RIGHT = Triangle(Vec2(0, 0), Vec2(4, 0), Vec2(0, 3))


def approx_vec(v, x, y, tol=1e-12):
    assert abs(v.x - x) <= tol and abs(v.y - y) <= tol, f"{v} != ({x}, {y})"


def test_point_symmetry_examples():
    approx_vec(point_symmetry(Vec2(1, 1), Vec2(3, 0)), -1.0, 2.0, tol=0)
    w = Vec2(2.5, -7)
    assert point_symmetry(w, w) == w
    p, w = Vec2(0.5, -2), Vec2(7, 7)
    assert point_symmetry(p, point_symmetry(p, w)) == w


def test_point_symmetry_is_isometry(all_norms):
    rng = random.Random(1)
    for _, spec in all_norms:
        for _ in range(50):
            p = Vec2(rng.uniform(-10, 10), rng.uniform(-10, 10))
            w = Vec2(rng.uniform(-10, 10), rng.uniform(-10, 10))
            v = Vec2(rng.uniform(-10, 10), rng.uniform(-10, 10))
            d0 = norm(spec, w - v)
            d1 = norm(spec, point_symmetry(p, w) - point_symmetry(p, v))
            assert abs(d1 - d0) <= 1e-12 * max(1.0, d0)


def test_homothety_examples():
    approx_vec(homothety_minus2(Vec2(0, 0), Vec2(1, 2)), -2.0, -4.0, tol=0)
    g = Vec2(0.3, -0.4)
    assert (homothety_minus2(g, g) - g).euclidean() <= 1e-15
    approx_vec(homothety_minus2(Vec2(4 / 3, 1), Vec2(1, 1)), 2.0, 1.0)


def test_antitriangle_worked_example():
    cfg = antitriangle(Vec2(0, 0), Vec2(4, 0), Vec2(0, 3), Vec2(1, 1))
    approx_vec(cfg.m1, 2, 1.5)
    approx_vec(cfg.m2, 0, 1.5)
    approx_vec(cfg.m3, 2, 0)
    approx_vec(cfg.p1, 3, 2)
    approx_vec(cfg.p2, -1, 2)
    approx_vec(cfg.p3, 3, -1)
    approx_vec(cfg.q, 1.5, 1)
    approx_vec(cfg.x4, 2, 1)
    approx_vec(cfg.g, 4 / 3, 1)
    approx_vec(cfg.g1, 5 / 3, 1)
    assert cfg.radius is None
    assert not cfg.degenerate


def test_antitriangle_total_degeneracy():
    z = Vec2(0, 0)
    cfg = antitriangle(z, z, z, z)
    for name in ("m1", "p1", "q", "x4", "g", "g1", "d3"):
        assert getattr(cfg, name) == z
    assert cfg.degenerate


def test_antitriangle_lemma_style_instance():
    cfg = antitriangle(Vec2(1, 0), Vec2(-1, 0), Vec2(0, 1 + SQRT2), Vec2(0, 1))
    approx_vec(cfg.q, 0, SQRT2 / 2)
    approx_vec(cfg.p1, -1, SQRT2)
    approx_vec(cfg.p2, 1, SQRT2)
    approx_vec(cfg.p3, 0, -1)
    approx_vec(cfg.x4, 0, SQRT2 - 1)


def test_config_invariants_random():
    rng = random.Random(8)
    for _ in range(200):
        pts = [Vec2(rng.uniform(-10, 10), rng.uniform(-10, 10)) for _ in range(4)]
        cfg = antitriangle(*pts)
        tol = 1e-12
        for xi, pi in ((cfg.x1, cfg.p1), (cfg.x2, cfg.p2), (cfg.x3, cfg.p3),
                       (cfg.x4, cfg.p4)):
            assert ((xi + pi) * 0.5 - cfg.q).euclidean() <= tol
        assert (cfg.x4 - (cfg.x1 + cfg.x2 + cfg.x3 - cfg.p4 * 2)).euclidean() <= tol
        xs = (cfg.x1, cfg.x2, cfg.x3, cfg.x4)
        ps = (cfg.p1, cfg.p2, cfg.p3, cfg.p4)
        for i in range(4):
            for j in range(4):
                if i != j:
                    assert ((xs[i] - xs[j]) - (ps[j] - ps[i])).euclidean() <= tol
        import itertools
        for i, j, k, l in itertools.permutations(range(4)):
            assert ((xs[i] - ps[j]) - (ps[k] - xs[l])).euclidean() <= tol
        for mi, pi in ((cfg.m1, cfg.p1), (cfg.m2, cfg.p2), (cfg.m3, cfg.p3)):
            assert (mi - (pi + cfg.p4) * 0.5).euclidean() <= tol
        assert (cfg.g1 - point_symmetry(cfg.q, cfg.g)).euclidean() <= tol
        assert (cfg.g1 - point_symmetry(cfg.g, cfg.p4)).euclidean() <= tol
        for di, xi in ((cfg.d1, cfg.x1), (cfg.d2, cfg.x2), (cfg.d3, cfg.x3)):
            assert (di - (xi + cfg.x4) * 0.5).euclidean() <= tol
        assert (homothety_minus2(cfg.g, cfg.p4) - cfg.x4).euclidean() <= tol


def test_orthocenter_right_triangle():
    cfg = orthocenter_from_circumcenter(lp(2), RIGHT, Vec2(2, 1.5))
    approx_vec(cfg.x4, 0, 0)
    assert cfg.radius == pytest.approx(2.5)


def test_orthocenter_l1_unit_triangle():
    spec = lp(1)
    tri = Triangle(Vec2(1, 0), Vec2(-1, 0), Vec2(0, 1))
    cfg = orthocenter_from_circumcenter(spec, tri, Vec2(0, 0))
    approx_vec(cfg.x4, 0, 1)
    assert cfg.radius == 1.0
    for p in (cfg.p1, cfg.p2, cfg.p3):
        assert norm(spec, cfg.x4 - p) == pytest.approx(1.0, abs=1e-12)


def test_orthocenter_barycentric_fixed_point(all_norms):
    # p4 equal to the barycenter maps to itself: x4 = x1+x2+x3-2g = g.
    for _, spec in all_norms:
        tri = Triangle(*(circle_point(spec, Circle(Vec2(0.5, -0.25), 2.0), t)
                         for t in (0.2, 2.3, 4.4)))
        g = (tri.a + tri.b + tri.c) / 3.0
        cfg = antitriangle(tri.a, tri.b, tri.c, g)
        assert (cfg.x4 - g).euclidean() <= 1e-12


def test_orthocenter_rejects_non_circumcenter():
    with pytest.raises(PreconditionError, match="residual"):
        orthocenter_from_circumcenter(lp(2), RIGHT, Vec2(0, 0))


def test_three_circles_right_triangle():
    cfg = orthocenter_from_circumcenter(lp(2), RIGHT, Vec2(2, 1.5))
    assert three_circles_check(lp(2), cfg) <= 1e-12


def test_three_circles_all_norms(all_norms):
    rng = random.Random(5)
    for _, spec in all_norms:
        for _ in range(20):
            center = Vec2(rng.uniform(-3, 3), rng.uniform(-3, 3))
            lam = math.exp(rng.uniform(math.log(0.3), math.log(3.0)))
            circ = Circle(center, lam)
            tri = Triangle(*(circle_point(spec, circ, rng.uniform(0, 2 * math.pi))
                             for _ in range(3)))
            if tri.is_collinear() or tri.has_duplicate_vertex():
                continue
            cfg = orthocenter_from_circumcenter(spec, tri, center)
            assert three_circles_check(spec, cfg) <= 1e-9


def test_three_circles_detects_perturbation():
    from dataclasses import replace
    spec = lp(2)
    cfg = antitriangle(RIGHT.a, RIGHT.b, RIGHT.c, Vec2(2.1, 1.5))
    lam = norm(spec, Vec2(2.1, 1.5) - RIGHT.a)
    defect = three_circles_check(spec, replace(cfg, radius=lam))
    assert defect > 1e-3


def test_six_point_circle_values():
    center, radius, defect = six_point_circle(
        lp(2), orthocenter_from_circumcenter(lp(2), RIGHT, Vec2(2, 1.5)))
    approx_vec(center, 1, 0.75)
    assert radius == pytest.approx(1.25)
    assert defect <= 1e-12

    spec = lp(1)
    tri = Triangle(Vec2(1, 0), Vec2(-1, 0), Vec2(0, 1))
    _, radius, defect = six_point_circle(spec, orthocenter_from_circumcenter(spec, tri, Vec2(0, 0)))
    assert radius == 0.5
    assert defect <= 1e-12


def test_six_point_circle_requires_radius_and_nondegenerate():
    cfg = antitriangle(RIGHT.a, RIGHT.b, RIGHT.c, Vec2(1, 1))
    with pytest.raises(PreconditionError):
        six_point_circle(lp(2), cfg)
    from dataclasses import replace
    degenerate = replace(antitriangle(Vec2(0, 0), Vec2(1, 0), Vec2(2, 0), Vec2(0, 1)),
                         radius=1.0)
    with pytest.raises(DegenerateInputError):
        six_point_circle(lp(2), degenerate)


def test_euler_homothety_sends_circumcenters_to_orthocenters(all_norms):
    tri = Triangle(Vec2(-1, 0.2), Vec2(2, -0.5), Vec2(0.6, 2.0))
    g = (tri.a + tri.b + tri.c) / 3.0
    for _, spec in all_norms:
        found = circumcenters(spec, tri)
        for center in found.centers:
            h = homothety_minus2(g, center)
            verdict = is_orthocentric_system(spec, tri.a, tri.b, tri.c, h, tol=1e-6)
            assert verdict.is_orthocentric


def test_is_orthocentric_system_cases():
    quad = (Vec2(-1, SQRT2), Vec2(1, SQRT2), Vec2(0, -1), Vec2(0, 1))
    verdict = is_orthocentric_system(lp(2), *quad)
    assert verdict.is_orthocentric
    assert verdict.witness is not None
    i = verdict.witness.index
    others = [p for k, p in enumerate(quad) if k != i]
    w = verdict.witness.circumcenter
    dists = [norm(lp(2), w - p) for p in others]
    assert max(dists) - min(dists) <= 1e-9

    collinear = is_orthocentric_system(lp(2), Vec2(0, 0), Vec2(1, 0), Vec2(2, 0), Vec2(3, 0))
    assert collinear.status == "not-orthocentric"

    dup = is_orthocentric_system(lp(2), Vec2(4, 0), Vec2(0, 3), Vec2(0, 0), Vec2(0, 0))
    assert dup.status == "indeterminate"


def test_config_json_serialization():
    cfg = orthocenter_from_circumcenter(lp(2), RIGHT, Vec2(2, 1.5))
    data = cfg.to_json_dict()
    assert data["x4"] == [0.0, 0.0]
    assert data["radius"] == pytest.approx(2.5)
    plain = antitriangle(RIGHT.a, RIGHT.b, RIGHT.c, Vec2(1, 1)).to_json_dict()
    assert plain["radius"] is None
    assert json.loads(json.dumps(data)) == data
