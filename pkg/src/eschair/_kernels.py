"""Hot geometry kernels: outline self-intersection and point-in-polygon.

Each kernel has a numba @njit build and a vectorized pure-numpy fallback.
Set ESCHAIR_NO_NUMBA=1 to force the fallback; the active path is reported in
NUMBA_ENABLED.  benchmarks/bench_kernels.py compares the two.
"""

from __future__ import annotations

import os

import numpy as np

_DISABLED = os.environ.get("ESCHAIR_NO_NUMBA", "") in ("1", "true", "yes")

try:
    if _DISABLED:
        raise ImportError
    from numba import njit

    NUMBA_ENABLED = True
except ImportError:
    NUMBA_ENABLED = False

    def njit(*args, **kwargs):  # no-op decorator
        if args and callable(args[0]):
            return args[0]
        return lambda f: f


def _cross(ox, oy, ax, ay, bx, by):
    return (ax - ox) * (by - oy) - (ay - oy) * (bx - ox)


@njit(cache=True)
def _self_intersects_numba(pts: np.ndarray) -> bool:
    # pts is a closed outline: pts[0] == pts[-1]; segment i = pts[i] -> pts[i+1]
    n = pts.shape[0] - 1
    for i in range(n):
        ax, ay = pts[i, 0], pts[i, 1]
        bx, by = pts[i + 1, 0], pts[i + 1, 1]
        for j in range(i + 2, n):
            if i == 0 and j == n - 1:
                continue  # wrap-around neighbours share the closing corner
            cx, cy = pts[j, 0], pts[j, 1]
            dx, dy = pts[j + 1, 0], pts[j + 1, 1]
            d1 = (cx - ax) * (by - ay) - (cy - ay) * (bx - ax)
            d2 = (dx - ax) * (by - ay) - (dy - ay) * (bx - ax)
            d3 = (ax - cx) * (dy - cy) - (ay - cy) * (dx - cx)
            d4 = (bx - cx) * (dy - cy) - (by - cy) * (dx - cx)
            if ((d1 > 0 and d2 < 0) or (d1 < 0 and d2 > 0)) and (
                (d3 > 0 and d4 < 0) or (d3 < 0 and d4 > 0)
            ):
                return True
    return False


def _self_intersects_numpy(pts: np.ndarray) -> bool:
    n = pts.shape[0] - 1
    if n < 4:
        return False
    a = pts[:-1]
    b = pts[1:]
    i, j = np.triu_indices(n, k=2)
    keep = ~((i == 0) & (j == n - 1))
    i, j = i[keep], j[keep]
    ax, ay = a[i, 0], a[i, 1]
    bx, by = b[i, 0], b[i, 1]
    cx, cy = a[j, 0], a[j, 1]
    dx, dy = b[j, 0], b[j, 1]
    d1 = (cx - ax) * (by - ay) - (cy - ay) * (bx - ax)
    d2 = (dx - ax) * (by - ay) - (dy - ay) * (bx - ax)
    d3 = (ax - cx) * (dy - cy) - (ay - cy) * (dx - cx)
    d4 = (bx - cx) * (dy - cy) - (by - cy) * (dx - cx)
    hit = (np.sign(d1) * np.sign(d2) < 0) & (np.sign(d3) * np.sign(d4) < 0)
    return bool(hit.any())


@njit(cache=True)
def _point_in_polygon_numba(pts: np.ndarray, x: float, y: float) -> bool:
    # ray casting; pts is a closed outline
    n = pts.shape[0] - 1
    inside = False
    for i in range(n):
        x1, y1 = pts[i, 0], pts[i, 1]
        x2, y2 = pts[i + 1, 0], pts[i + 1, 1]
        if (y1 > y) != (y2 > y):
            xc = x1 + (y - y1) * (x2 - x1) / (y2 - y1)
            if xc > x:
                inside = not inside
    return inside


def _point_in_polygon_numpy(pts: np.ndarray, x: float, y: float) -> bool:
    x1, y1 = pts[:-1, 0], pts[:-1, 1]
    x2, y2 = pts[1:, 0], pts[1:, 1]
    straddle = (y1 > y) != (y2 > y)
    if not straddle.any():
        return False
    with np.errstate(divide="ignore", invalid="ignore"):
        xc = x1 + (y - y1) * (x2 - x1) / (y2 - y1)
    return bool((straddle & (xc > x)).sum() % 2)


if NUMBA_ENABLED:
    self_intersects = _self_intersects_numba
    point_in_polygon = _point_in_polygon_numba
else:
    self_intersects = _self_intersects_numpy
    point_in_polygon = _point_in_polygon_numpy


def max_pointwise_gap(a: np.ndarray, b: np.ndarray) -> float:
    """Largest coordinate deviation between two equally sampled polylines."""
    if a.shape != b.shape:
        return float("inf")
    if a.size == 0:
        return 0.0
    return float(np.abs(a - b).max())
