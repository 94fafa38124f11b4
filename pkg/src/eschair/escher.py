"""Escherizer: realize a solved relation system as a rendered perturbed tiling.

Each relation class is one free parameter: assign it a perturbed-edge curve
and every symbol receives either that curve (same parity) or its dual.  The
renderer replaces each unit edge of each placement by its symbol's curve,
transformed by the placement, and then verifies the result: interior edges
must coincide pointwise from both sides and no tile outline may
self-intersect.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from typing import Mapping

import numpy as np

from . import _kernels
from .edges import (
    AMPLITUDE_CAP,
    EdgeSymbol,
    PerturbedCurve,
    curve_dual,
    curve_is_self_dual,
    make_curve,
)
from .geometry import (
    CHAIR_CELLS,
    Placement,
    Spread,
    SubstitutionRule,
    edge_symbol_index,
    generate_spread,
    one_rule_spread,
    segment_pairs,
)
from .relations import RelationSystem, SolveMode, SolveResult, solve
from .rng import SplitMix64

CONSISTENCY_TOL = 1e-9
SELF_DUAL_TOL = 1e-9


class RenderError(Exception):
    pass


class TilingConsistencyError(RenderError):
    """Interior edges disagree: indicates a solver or geometry bug."""


class AmplitudeError(RenderError):
    """A tile outline self-intersects; the perturbation is too large."""

    def __init__(self, class_id: int):
        super().__init__(f"amplitude too large on class {class_id}")
        self.class_id = class_id


def class_index(system: RelationSystem) -> dict[EdgeSymbol, tuple[int, bool]]:
    """Map each symbol to (class id, is_dual_side) in canonical class order."""
    out: dict[EdgeSymbol, tuple[int, bool]] = {}
    for cid, cls in enumerate(system.classes()):
        for s in cls.same:
            out[s] = (cid, False)
        for s in cls.dual:
            out[s] = (cid, True)
    return out


def propagate(
    system: RelationSystem, params: Mapping[int, PerturbedCurve]
) -> dict[EdgeSymbol, PerturbedCurve]:
    """Curve of every symbol: the class curve on the root-parity side, its
    dual on the other."""
    classes = system.classes()
    for cid, cls in enumerate(classes):
        if cid not in params:
            raise ValueError(f"no curve assigned to class {cid}")
        if cls.self_dual and not curve_is_self_dual(params[cid], SELF_DUAL_TOL):
            raise ValueError(f"class {cid} is self-dual but its curve is not")
    curves: dict[EdgeSymbol, PerturbedCurve] = {}
    for sym, (cid, is_dual) in class_index(system).items():
        c = params[cid]
        curves[sym] = curve_dual(c) if is_dual else c
    return curves


def zero_params(system: RelationSystem) -> dict[int, PerturbedCurve]:
    return {cid: PerturbedCurve() for cid in range(len(system.classes()))}


def random_params(
    system: RelationSystem,
    seed: int,
    amplitude: float = 0.18,
    samples: int = 8,
) -> dict[int, PerturbedCurve]:
    """Seeded curves with a sine-tapered displacement envelope.

    The envelope |u(t)| <= amplitude * sin(pi t) vanishes at the endpoints,
    which keeps neighbouring edge curves disjoint for any amplitude below
    the cap, so random draws always render simple outlines.
    """
    if not 0 <= amplitude <= AMPLITUDE_CAP:
        raise ValueError(f"amplitude must lie in [0, {AMPLITUDE_CAP}]")
    rng = SplitMix64(seed)
    params: dict[int, PerturbedCurve] = {}
    ts = [(k + 1) / (samples + 1) for k in range(samples)]
    for cid, cls in enumerate(system.classes()):
        us = [rng.uniform(-amplitude, amplitude) * math.sin(math.pi * t) for t in ts]
        if cls.self_dual:
            us = [(u - v) / 2.0 for u, v in zip(us, reversed(us))]
        params[cid] = make_curve(zip(ts, us))
    return params


def params_to_json(params: Mapping[int, PerturbedCurve]) -> str:
    doc = {
        "classes": [
            {"id": cid, "samples": [[t, u] for t, u in params[cid].samples]}
            for cid in sorted(params)
        ]
    }
    return json.dumps(doc, indent=2)


def params_from_json(text: str) -> dict[int, PerturbedCurve]:
    try:
        doc = json.loads(text)
        entries = doc["classes"]
        out = {}
        for entry in entries:
            out[int(entry["id"])] = make_curve(entry["samples"])
    except (KeyError, TypeError, ValueError, json.JSONDecodeError) as exc:
        raise ValueError(f"malformed params file: {exc}") from exc
    return out


@dataclass(frozen=True)
class RenderedTiling:
    """Concrete perturbed tiling: one closed outline per placement."""

    scale: int
    placements: tuple[Placement, ...]
    outlines: tuple[np.ndarray, ...]
    edge_polylines: dict[tuple[int, int], np.ndarray]
    interior_pairs: tuple[tuple[tuple[int, int], tuple[int, int]], ...]
    edge_class_ids: dict[tuple[int, int], int]


def _edge_polyline(a, b, curve: PerturbedCurve) -> np.ndarray:
    ax, ay = float(a[0]), float(a[1])
    dx, dy = b[0] - a[0], b[1] - a[1]
    nx, ny = -dy, dx  # left normal: the tile interior side
    pts = [(ax, ay)]
    for t, u in curve.samples:
        pts.append((ax + t * dx + u * nx, ay + t * dy + u * ny))
    pts.append((float(b[0]), float(b[1])))
    return np.array(pts, dtype=np.float64)


def build_tiling(
    placements: tuple[Placement, ...],
    scale: int,
    curves: Mapping[EdgeSymbol, PerturbedCurve],
    ids: Mapping[EdgeSymbol, tuple[int, bool]] | None = None,
) -> RenderedTiling:
    interior, _ = segment_pairs(placements)
    edge_polylines: dict[tuple[int, int], np.ndarray] = {}
    edge_class_ids: dict[tuple[int, int], int] = {}
    outlines = []
    for i, p in enumerate(placements):
        pts = p.boundary_points()
        chunks = []
        for k in range(8):
            sym = p.edge_symbol(k)
            poly = _edge_polyline(pts[k], pts[(k + 1) % 8], curves[sym])
            edge_polylines[(i, k)] = poly
            edge_class_ids[(i, k)] = ids[sym][0] if ids is not None else -1
            chunks.append(poly[:-1])
        outline = np.vstack(chunks + [chunks[0][:1]])
        outlines.append(outline)
    return RenderedTiling(
        scale=scale,
        placements=placements,
        outlines=tuple(outlines),
        edge_polylines=edge_polylines,
        interior_pairs=interior,
        edge_class_ids=edge_class_ids,
    )


def _interior_points(p: Placement) -> list[tuple[float, float]]:
    # cell centres stay strictly inside for any displacement below the cap
    return [p.apply(cx + 0.5, cy + 0.5) for cx, cy in CHAIR_CELLS]


def consistency_check(rt: RenderedTiling, tol: float = CONSISTENCY_TOL) -> bool:
    """Interior edges agree pointwise from both sides and tiles stay
    interior-disjoint (sampled test on cell centres)."""
    for (i, k1), (j, k2) in rt.interior_pairs:
        a = rt.edge_polylines[(i, k1)]
        b = rt.edge_polylines[(j, k2)]
        if _kernels.max_pointwise_gap(a, b[::-1]) > tol:
            return False
    n = len(rt.outlines)
    lo = np.array([o.min(axis=0) for o in rt.outlines])
    hi = np.array([o.max(axis=0) for o in rt.outlines])
    overlap = (hi[:, None, :] >= lo[None, :, :]).all(-1) & (
        hi[None, :, :] >= lo[:, None, :]
    ).all(-1)
    centres = [_interior_points(p) for p in rt.placements]
    for i, j in zip(*np.triu_indices(n, k=1)):
        if not overlap[i, j]:
            continue
        for x, y in centres[i]:
            if _kernels.point_in_polygon(rt.outlines[j], x, y):
                return False
        for x, y in centres[j]:
            if _kernels.point_in_polygon(rt.outlines[i], x, y):
                return False
    return True


def _segments_cross(a, b, c, d) -> bool:
    d1 = (c[0] - a[0]) * (b[1] - a[1]) - (c[1] - a[1]) * (b[0] - a[0])
    d2 = (d[0] - a[0]) * (b[1] - a[1]) - (d[1] - a[1]) * (b[0] - a[0])
    d3 = (a[0] - c[0]) * (d[1] - c[1]) - (a[1] - c[1]) * (d[0] - c[0])
    d4 = (b[0] - c[0]) * (d[1] - c[1]) - (b[1] - c[1]) * (d[0] - c[0])
    return ((d1 > 0) != (d2 > 0) and d1 * d2 < 0) and ((d3 > 0) != (d4 > 0) and d3 * d4 < 0)


def _blame_class(rt: RenderedTiling, tile: int) -> int:
    """Class id of an edge involved in a self-intersection of a tile outline."""
    pts = rt.outlines[tile]
    n = pts.shape[0] - 1
    # cumulative segment offsets recover which boundary edge a segment is on
    position_of = []
    for k in range(8):
        position_of.extend([k] * (len(rt.edge_polylines[(tile, k)]) - 1))
    for i in range(n):
        for j in range(i + 2, n):
            if i == 0 and j == n - 1:
                continue
            if _segments_cross(pts[i], pts[i + 1], pts[j], pts[j + 1]):
                return rt.edge_class_ids[(tile, position_of[i])]
    return rt.edge_class_ids[(tile, 0)]


def simplicity_check(rt: RenderedTiling) -> None:
    """Raise AmplitudeError if any tile outline self-intersects."""
    for i, outline in enumerate(rt.outlines):
        if _kernels.self_intersects(outline):
            raise AmplitudeError(_blame_class(rt, i))


def spread_for(
    mode: SolveMode,
    rule: SubstitutionRule | None,
    s: int,
    target=None,
) -> Spread:
    from .edges import Prototile

    if target is None:
        target = Prototile.ALPHA
    if mode is SolveMode.SINGLE:
        return generate_spread(SubstitutionRule(0), Prototile.ALPHA, s)
    if mode is SolveMode.ONE_RULE:
        return one_rule_spread(rule.alpha_pattern, s)
    return generate_spread(rule, target, s)


def render(
    mode: SolveMode,
    rule: SubstitutionRule | None,
    s: int,
    params: Mapping[int, PerturbedCurve],
    target=None,
) -> tuple[RenderedTiling, str]:
    """Solve, propagate, build the s-spread tiling, verify it, emit SVG."""
    result: SolveResult = solve(mode, rule)
    curves = propagate(result.system, params)
    ids = class_index(result.system)
    spread = spread_for(mode, rule, s, target)
    rt = build_tiling(spread.placements, spread.scale, curves, ids)
    if not consistency_check(rt):
        raise TilingConsistencyError(
            "interior edges disagree; this indicates a solver or geometry bug"
        )
    simplicity_check(rt)
    return rt, svg_document(rt)


_FILL = {"alpha": "#cfdcec", "beta": "#f2bf9b"}


def svg_document(rt: RenderedTiling) -> str:
    """One path per tile, fills keyed by prototile, deterministic formatting."""
    size = 2 * rt.scale
    px = 24 * size
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{px}" height="{px}" viewBox="0 0 {size} {size}">',
    ]
    for p, outline in zip(rt.placements, rt.outlines):
        coords = [f"{x:.6f},{size - y:.6f}" for x, y in outline[:-1]]
        d = "M " + " L ".join(coords) + " Z"
        lines.append(
            f'<path d="{d}" fill="{_FILL[p.label.value]}" '
            f'stroke="#2f2f2f" stroke-width="0.04" stroke-linejoin="round"/>'
        )
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def tiling_dump(rt: RenderedTiling) -> str:
    """Placement lines plus the per-edge curve (class) ids, for diffing."""
    lines = [f"# eschair tiling scale={rt.scale}"]
    for i, p in enumerate(rt.placements):
        ids = " ".join(str(rt.edge_class_ids[(i, k)]) for k in range(8))
        lines.append(f"{p.label.value} {p.tx} {p.ty} {p.rotation}  {ids}")
    return "\n".join(lines) + "\n"


def straight_outlines(placements: tuple[Placement, ...]) -> tuple[np.ndarray, ...]:
    """Unperturbed reference outlines (integer corner points)."""
    out = []
    for p in placements:
        pts = [(float(x), float(y)) for x, y in p.boundary_points()]
        out.append(np.array(pts + [pts[0]], dtype=np.float64))
    return tuple(out)
