"""Derivative-free 1-D kernels: golden-section minimization and bisection.

Both are deliberately assumption-light so they stay robust on piecewise
linear objectives coming from polyhedral gauges.
"""

from __future__ import annotations

import math
from typing import Callable

INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0  # 0.618...


def golden_min(f: Callable[[float], float], lo: float, hi: float,
               width: float = 1e-12) -> tuple[float, float]:
    """Minimize a convex (unimodal) f on [lo, hi] to the given bracket width.

    Returns (argmin, min value).  The value is re-evaluated at the final
    midpoint, so the reported minimum never exceeds the two retained probes.
    """
    a, b = lo, hi
    x1 = b - INV_PHI * (b - a)
    x2 = a + INV_PHI * (b - a)
    f1, f2 = f(x1), f(x2)
    while b - a > width:
        if f1 <= f2:
            b, x2, f2 = x2, x1, f1
            x1 = b - INV_PHI * (b - a)
            f1 = f(x1)
        else:
            a, x1, f1 = x1, x2, f2
            x2 = a + INV_PHI * (b - a)
            f2 = f(x2)
    xm = 0.5 * (a + b)
    fm = f(xm)
    if f1 < fm:
        xm, fm = x1, f1
    if f2 < fm:
        xm, fm = x2, f2
    return xm, fm


def bisect_root(f: Callable[[float], float], lo: float, hi: float, flo: float, fhi: float,
                ftol: float, xtol: float = 1e-15, max_iter: int = 200) -> tuple[float, float]:
    """Bisect a sign change of a continuous f on [lo, hi].

    flo and fhi are the (already computed) endpoint values; they must differ
    in sign (either may be exactly zero, which is returned immediately).
    Stops when |f| <= ftol or the interval width drops below xtol.
    Returns (root, f(root)).
    """
    if flo == 0.0:
        return lo, flo
    if fhi == 0.0:
        return hi, fhi
    if (flo > 0.0) == (fhi > 0.0):
        raise ValueError("bisect_root: endpoints do not bracket a sign change")
    best_x, best_f = (lo, flo) if abs(flo) < abs(fhi) else (hi, fhi)
    for _ in range(max_iter):
        mid = 0.5 * (lo + hi)
        fm = f(mid)
        if abs(fm) < abs(best_f):
            best_x, best_f = mid, fm
        if abs(fm) <= ftol or (hi - lo) <= xtol:
            return best_x, best_f
        if (fm > 0.0) == (fhi > 0.0):
            hi, fhi = mid, fm
        else:
            lo, flo = mid, fm
    return best_x, best_f
