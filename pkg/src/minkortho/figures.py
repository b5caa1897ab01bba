"""Matplotlib renderings for the report path and the plot subcommand."""

from __future__ import annotations

import math

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402

from .detectors import DetectorReport  # noqa: E402
from .orthocentric import OrthocentricConfig  # noqa: E402
from .plane import Circle, NormSpec, ORIGIN, Vec2, circle_point  # noqa: E402

CIRCLE_SAMPLES = 256


def _circle_xy(spec: NormSpec, circle: Circle, samples: int = CIRCLE_SAMPLES):
    thetas = [2.0 * math.pi * k / samples for k in range(samples + 1)]
    pts = [circle_point(spec, circle, t) for t in thetas]
    return [p.x for p in pts], [p.y for p in pts]


def save_unit_circle_figure(spec: NormSpec, path: str) -> None:
    fig, ax = plt.subplots(figsize=(4, 4))
    xs, ys = _circle_xy(spec, Circle(ORIGIN, 1.0))
    ax.plot(xs, ys, color="tab:blue")
    ax.axhline(0.0, color="0.85", lw=0.8)
    ax.axvline(0.0, color="0.85", lw=0.8)
    ax.set_aspect("equal")
    ax.set_title(f"unit circle: {spec.label}")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def save_report_figure(report: DetectorReport, path: str) -> None:
    """Bar chart of max and mean defect per detector, log scale."""
    names = list(report.detectors)
    maxima = [report.detectors[n].max for n in names]
    means = [report.detectors[n].mean for n in names]
    floor = 1e-17
    fig, ax = plt.subplots(figsize=(6, 4))
    xs = range(len(names))
    ax.bar([x - 0.2 for x in xs], [max(v, floor) for v in maxima],
           width=0.4, label="max", color="tab:red")
    ax.bar([x + 0.2 for x in xs], [max(v, floor) for v in means],
           width=0.4, label="mean", color="tab:blue")
    ax.set_yscale("log")
    ax.set_xticks(list(xs))
    ax.set_xticklabels(names)
    ax.set_ylabel("defect")
    ax.set_title(f"{report.norm_id}: {report.samples} samples, seed {report.seed}")
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def save_construction_figure(spec: NormSpec, cfg: OrthocentricConfig, path: str) -> None:
    """Matplotlib counterpart of the SVG construction diagram."""
    fig, ax = plt.subplots(figsize=(6, 6))
    xs, ys = _circle_xy(spec, Circle(ORIGIN, 1.0))
    ax.plot(xs, ys, color="0.8", lw=1.0, label="unit circle")

    def closed(pts: list[Vec2]):
        loop = list(pts) + [pts[0]]
        return [p.x for p in loop], [p.y for p in loop]

    bx, by = closed([cfg.x1, cfg.x2, cfg.x3])
    ax.plot(bx, by, color="tab:blue", label="base triangle")
    tx, ty = closed([cfg.p1, cfg.p2, cfg.p3])
    ax.plot(tx, ty, color="tab:orange", label="antitriangle")
    if cfg.radius is not None:
        for center, rad, color, name in (
                (cfg.p4, cfg.radius, "tab:green", "circumcircle"),
                (cfg.x4, cfg.radius, "tab:red", "orthocenter circle"),
                (cfg.q, 0.5 * cfg.radius, "tab:purple", "six-point circle")):
            cx, cy = _circle_xy(spec, Circle(center, rad))
            ax.plot(cx, cy, color=color, lw=1.0, label=name)
    for name in ("x1", "x2", "x3", "x4", "p4", "q"):
        pt = getattr(cfg, name)
        ax.plot([pt.x], [pt.y], "k.", ms=5)
        ax.annotate(name, (pt.x, pt.y), fontsize=8,
                    textcoords="offset points", xytext=(3, 3))
    ax.set_aspect("equal")
    ax.legend(fontsize=8, loc="upper right")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
