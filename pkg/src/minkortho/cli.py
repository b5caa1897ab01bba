"""Command-line front end.

Subcommands, one per capability:

  construct  build the antitriangle / orthocenter configuration of a scene,
             optionally drawing it as SVG
  verify     decide whether four points form an orthocentric system
  detect     run the Euclideanity detectors for a norm and write JSON/CSV
             reports (optionally matplotlib figures)
  plot       render a scene with matplotlib

Exit codes: 0 success / verified true, 1 verified false, 2 invalid input,
3 numerical failure or indeterminate.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from dataclasses import dataclass

from .circumcenter import Triangle, bisector_residual
from .detectors import euclideanity_report
from .errors import ConfigurationError, ConstructionFailure, PreconditionError
from .orthocentric import (OrthocentricConfig, antitriangle,
                           is_orthocentric_system,
                           orthocenter_from_circumcenter)
from .plane import NormSpec, Vec2, norm_from_json
from .svgdraw import DRAWABLE_PARTS, render_construction_svg

EXIT_OK = 0
EXIT_FALSE = 1
EXIT_INVALID = 2
EXIT_NUMERICAL = 3


@dataclass
class Scene:
    norm: NormSpec
    triangle: Triangle | None = None
    p4: Vec2 | None = None
    points: tuple[Vec2, ...] | None = None
    render: dict | None = None


def _load_json(path: str) -> dict:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as err:
        raise ConfigurationError(f"cannot read {path}: {err}") from err
    except json.JSONDecodeError as err:
        raise ConfigurationError(f"{path} is not valid JSON: {err}") from err


def _vec(data, what: str) -> Vec2:
    try:
        return Vec2.from_seq(data)
    except (TypeError, ValueError) as err:
        raise ConfigurationError(f"bad {what}: {data!r} ({err})") from err


def load_scene(path: str, want: str) -> Scene:
    data = _load_json(path)
    if "norm" not in data:
        raise ConfigurationError(f"{path}: scene needs a 'norm' field")
    scene = Scene(norm=norm_from_json(data["norm"]), render=data.get("render"))
    if want == "construct":
        tri = data.get("triangle")
        if not isinstance(tri, list) or len(tri) != 3:
            raise ConfigurationError(f"{path}: 'triangle' must list three points")
        scene.triangle = Triangle(*(_vec(v, "triangle vertex") for v in tri))
        if "p4" not in data:
            raise ConfigurationError(f"{path}: scene needs a 'p4' point")
        scene.p4 = _vec(data["p4"], "p4")
    elif want == "verify":
        pts = data.get("points")
        if not isinstance(pts, list) or len(pts) != 4:
            raise ConfigurationError(f"{path}: 'points' must list four points")
        scene.points = tuple(_vec(v, "point") for v in pts)
    return scene


def _config_json(cfg: OrthocentricConfig) -> str:
    return json.dumps(cfg.to_json_dict(), indent=2, sort_keys=True) + "\n"


def cmd_construct(args) -> int:
    scene = load_scene(args.scene, "construct")
    tri, p4 = scene.triangle, scene.p4
    if tri.has_duplicate_vertex() or tri.is_collinear():
        print("error: degenerate: collinear or duplicated triangle vertices",
              file=sys.stderr)
        return EXIT_INVALID
    try:
        cfg = orthocenter_from_circumcenter(scene.norm, tri, p4, tol=args.tol)
    except PreconditionError:
        r1, r2 = bisector_residual(scene.norm, tri, p4)
        print(f"warning: p4 is not a circumcenter (residual {r1:.3e}, {r2:.3e}); "
              "building the plain antitriangle without a radius", file=sys.stderr)
        cfg = antitriangle(tri.a, tri.b, tri.c, p4)
    payload = _config_json(cfg)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(payload)
    else:
        sys.stdout.write(payload)
    if args.svg:
        render = scene.render or {}
        parts = tuple(render.get("draw", DRAWABLE_PARTS))
        bad = [p for p in parts if p not in DRAWABLE_PARTS]
        if bad:
            raise ConfigurationError(f"unknown draw parts {bad}; choose from {DRAWABLE_PARTS}")
        render_construction_svg(scene.norm, cfg, args.svg,
                                samples=int(render.get("samples", 256)),
                                parts=parts,
                                stroke_width=render.get("stroke_width"))
    return EXIT_OK


def cmd_verify(args) -> int:
    scene = load_scene(args.scene, "verify")
    verdict = is_orthocentric_system(scene.norm, *scene.points, tol=args.tol)
    print(f"{verdict.status}: {verdict.detail}")
    if verdict.status == "orthocentric":
        return EXIT_OK
    if verdict.status == "not-orthocentric":
        return EXIT_FALSE
    return EXIT_NUMERICAL


def cmd_detect(args) -> int:
    if args.samples < 1:
        print("error: --samples must be >= 1", file=sys.stderr)
        return EXIT_INVALID
    spec = norm_from_json(_load_json(args.norm))
    report = euclideanity_report(spec, args.samples, seed=args.seed)
    for line in report.verdict_lines(tol=args.tol):
        print(line)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(json.dumps(report.to_json_dict(), indent=2, sort_keys=True) + "\n")
    if args.csv:
        with open(args.csv, "w", encoding="utf-8", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow(["detector", "max", "mean", "n", "excluded"])
            writer.writerows(report.csv_rows())
    if args.figures:
        from .figures import save_report_figure, save_unit_circle_figure
        os.makedirs(args.figures, exist_ok=True)
        save_report_figure(report, os.path.join(args.figures, "detector_defects.png"))
        save_unit_circle_figure(spec, os.path.join(args.figures, "unit_circle.png"))
    return EXIT_OK


def cmd_plot(args) -> int:
    from .figures import save_construction_figure
    scene = load_scene(args.scene, "construct")
    tri, p4 = scene.triangle, scene.p4
    if tri.has_duplicate_vertex() or tri.is_collinear():
        print("error: degenerate: collinear or duplicated triangle vertices",
              file=sys.stderr)
        return EXIT_INVALID
    try:
        cfg = orthocenter_from_circumcenter(scene.norm, tri, p4, tol=args.tol)
    except PreconditionError:
        print("warning: p4 is not a circumcenter; plotting the plain antitriangle",
              file=sys.stderr)
        cfg = antitriangle(tri.a, tri.b, tri.c, p4)
    save_construction_figure(scene.norm, cfg, args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ortho",
        description="Orthocentric constructions and Euclideanity detectors "
                    "in 2-D normed planes.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="build an orthocentric configuration")
    p.add_argument("--scene", required=True, help="scene JSON (norm, triangle, p4)")
    p.add_argument("--svg", help="write an SVG diagram here")
    p.add_argument("--out", help="write the configuration JSON here (default stdout)")
    p.add_argument("--tol", type=float, default=1e-9,
                   help="circumcenter residual tolerance (default 1e-9)")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", help="test four points for an orthocentric system")
    p.add_argument("--scene", required=True, help="scene JSON (norm, points[4])")
    p.add_argument("--tol", type=float, default=1e-8,
                   help="equidistance residual tolerance (default 1e-8)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("detect", help="run the Euclideanity detectors for a norm")
    p.add_argument("--norm", required=True, help="norm JSON file")
    p.add_argument("--samples", type=int, required=True, help="number of sampled systems")
    p.add_argument("--seed", type=int, default=0, help="RNG seed (default 0)")
    p.add_argument("--out", help="write the JSON report here")
    p.add_argument("--csv", help="write the CSV report here")
    p.add_argument("--figures", help="directory for matplotlib figures")
    p.add_argument("--tol", type=float, default=1e-7,
                   help="verdict threshold on max defect (default 1e-7)")
    p.set_defaults(func=cmd_detect)

    p = sub.add_parser("plot", help="render a scene with matplotlib")
    p.add_argument("--scene", required=True, help="scene JSON (norm, triangle, p4)")
    p.add_argument("--out", required=True, help="output image path (png/svg/pdf)")
    p.add_argument("--tol", type=float, default=1e-9,
                   help="circumcenter residual tolerance (default 1e-9)")
    p.set_defaults(func=cmd_plot)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ConstructionFailure as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_NUMERICAL
    except (ConfigurationError, ValueError) as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_INVALID


def console_main() -> None:
    sys.exit(main())


if __name__ == "__main__":
    console_main()
