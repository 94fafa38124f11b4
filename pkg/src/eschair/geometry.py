"""Exact integer geometry of the chair prototile and its substitution spreads.

The chair is the L-shaped hexagon (0,0),(2,0),(2,1),(1,1),(1,2),(0,2): three
unit cells, eight unit boundary edges.  Doubling it gives an L that decomposes
into four orientation-preserving chair copies in exactly one way; iterating
that substitution produces the s-spreads of the hierarchical tiling.

All coordinates are integers (cells scaled by 2^s), so adjacency extraction
is exact.  The boundary is traversed counterclockwise with the interior on
the left; a shared interior segment is walked in opposite directions by its
two tiles, which is why every geometric adjacency is a matching (dual)
relation rather than an equality.

Conventions locked by the calibration tests (do not change independently):

* edge letters run clockwise around the tile, starting with ``a`` on the
  inner vertical edge of the notch, so counterclockwise position k carries
  symbol index (4 - k) mod 8;
* substitution patterns are 4-bit numbers; bits 0..3 mark the upper-left
  wing, the origin corner, the lower-right wing, and the central tile as the
  second prototile;
* the two-letter word of a composite boundary edge is written against the
  counterclockwise traversal (the decomposition strings read right to left
  along the walk).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Mapping

from .edges import EdgeSymbol, Prototile, Word

CHAIR_VERTICES = ((0, 0), (2, 0), (2, 1), (1, 1), (1, 2), (0, 2))
CHAIR_CELLS = ((0, 0), (1, 0), (0, 1))

# Corner points of the 8 unit boundary edges, counterclockwise from the origin.
BOUNDARY_POINTS = ((0, 0), (1, 0), (2, 0), (2, 1), (1, 1), (1, 2), (0, 2), (0, 1))

ROTATIONS = (0, 90, 180, 270)


def edge_symbol_index(position: int) -> int:
    """Symbol index (0..7 = a..h) carried by counterclockwise edge position."""
    return (4 - position) % 8


def edge_position(symbol_index: int) -> int:
    """Counterclockwise boundary position of a symbol index; self-inverse map."""
    return (4 - symbol_index) % 8


def rotate_point(deg: int, x: int, y: int) -> tuple[int, int]:
    if deg == 0:
        return x, y
    if deg == 90:
        return -y, x
    if deg == 180:
        return -x, -y
    if deg == 270:
        return y, -x
    raise ValueError(f"rotation {deg} is not a multiple of 90 in 0..270")


@dataclass(frozen=True)
class Placement:
    """An orientation-preserving congruent copy of the chair."""

    label: Prototile
    rotation: int
    tx: int
    ty: int

    def __post_init__(self) -> None:
        if self.rotation not in ROTATIONS:
            raise ValueError(f"invalid rotation {self.rotation}")

    def apply(self, x, y):
        rx, ry = rotate_point(self.rotation, x, y)
        return rx + self.tx, ry + self.ty

    def boundary_points(self) -> tuple[tuple[int, int], ...]:
        return tuple(self.apply(x, y) for x, y in BOUNDARY_POINTS)

    def cells(self) -> tuple[tuple[int, int], ...]:
        out = []
        for cx, cy in CHAIR_CELLS:
            x0, y0 = self.apply(cx, cy)
            x1, y1 = self.apply(cx + 1, cy + 1)
            out.append((min(x0, x1), min(y0, y1)))
        return tuple(out)

    def edge_symbol(self, position: int) -> EdgeSymbol:
        return EdgeSymbol(self.label, edge_symbol_index(position))


@dataclass(frozen=True)
class SpreadSlot:
    rotation: int
    tx: int
    ty: int
    bit: int


# The unique decomposition of the doubled chair into four chair copies:
# origin corner, lower-right wing, upper-left wing, central tile.  The central
# copy keeps the parent's orientation, nested against the inner notch.
SPREAD_SLOTS = (
    SpreadSlot(0, 0, 0, bit=1),
    SpreadSlot(90, 4, 0, bit=2),
    SpreadSlot(270, 0, 4, bit=0),
    SpreadSlot(0, 1, 1, bit=3),
)


@dataclass(frozen=True)
class SubstitutionRule:
    """Substitution patterns for the two prototiles (4-bit numbers 0..15).

    Pattern bit k marks slot k's tile as the second prototile; pattern 0 is
    all-alpha, pattern 15 all-beta, and 15 - i swaps every label.
    ``beta_pattern`` is absent in single-prototile and one-rule use.
    """

    alpha_pattern: int
    beta_pattern: int | None = None

    def __post_init__(self) -> None:
        for p in (self.alpha_pattern, self.beta_pattern):
            if p is not None and not 0 <= p <= 15:
                raise ValueError(f"substitution pattern {p} outside 0..15")

    def pattern_for(self, label: Prototile) -> int:
        if label is Prototile.ALPHA:
            return self.alpha_pattern
        if self.beta_pattern is None:
            raise ValueError("missing beta rule: a beta tile must expand")
        return self.beta_pattern


def slot_labels(pattern: int) -> tuple[Prototile, ...]:
    if not 0 <= pattern <= 15:
        raise ValueError(f"substitution pattern {pattern} outside 0..15")
    return tuple(
        Prototile.BETA if (pattern >> slot.bit) & 1 else Prototile.ALPHA
        for slot in SPREAD_SLOTS
    )


@dataclass(frozen=True)
class Spread:
    """An s-spread: 4^s placements covering the chair scaled by 2^s."""

    scale: int
    target: Prototile
    placements: tuple[Placement, ...]
    internal_matchings: tuple[tuple[EdgeSymbol, EdgeSymbol], ...]
    boundary_decomposition: Mapping[EdgeSymbol, Word] | None


def scaled_chair_cells(scale: int) -> frozenset[tuple[int, int]]:
    m = scale
    return frozenset(
        (x, y)
        for x in range(2 * m)
        for y in range(2 * m)
        if not (x >= m and y >= m)
    )


def _check_cover(placements: Iterable[Placement], scale: int) -> None:
    cells: list[tuple[int, int]] = []
    for p in placements:
        cells.extend(p.cells())
    if len(set(cells)) != len(cells) or set(cells) != scaled_chair_cells(scale):
        raise ValueError("invalid spread geometry")


def _segment_table(placements: Iterable[Placement]):
    """Map each unit boundary segment to its incident (placement index, edge position)."""
    table: dict[tuple, list[tuple[int, int]]] = {}
    for i, p in enumerate(placements):
        pts = p.boundary_points()
        for k in range(8):
            a, b = pts[k], pts[(k + 1) % 8]
            key = (a, b) if a < b else (b, a)
            table.setdefault(key, []).append((i, k))
    return table


def interior_matchings(
    placements: tuple[Placement, ...],
) -> tuple[tuple[EdgeSymbol, EdgeSymbol], ...]:
    """One matching pair per interior unit segment shared by two placements.

    Pairs are ordered by segment position and canonically within the pair;
    the same symbol pair may occur for several distinct segments.
    """
    cells: list[tuple[int, int]] = []
    for p in placements:
        cells.extend(p.cells())
    if len(set(cells)) != len(cells):
        raise ValueError("invalid spread geometry")
    table = _segment_table(placements)
    pairs = []
    for key in sorted(table):
        hits = table[key]
        if len(hits) > 2:
            raise ValueError("invalid spread geometry")
        if len(hits) == 2:
            (i, k1), (j, k2) = hits
            s1 = placements[i].edge_symbol(k1)
            s2 = placements[j].edge_symbol(k2)
            pairs.append((s1, s2) if s1 <= s2 else (s2, s1))
    return tuple(pairs)


def extract_matchings(spread: Spread) -> tuple[tuple[EdgeSymbol, EdgeSymbol], ...]:
    return spread.internal_matchings


def segment_pairs(placements: tuple[Placement, ...]):
    """Indexed adjacency: interior segments as ((i, k), (j, k2)) pairs of
    (placement index, edge position), plus the boundary (i, k) singletons."""
    table = _segment_table(placements)
    interior = []
    boundary = []
    for key in sorted(table):
        hits = table[key]
        if len(hits) > 2:
            raise ValueError("invalid spread geometry")
        if len(hits) == 2:
            interior.append((hits[0], hits[1]))
        else:
            boundary.append(hits[0])
    return tuple(interior), tuple(boundary)


def _boundary_decomposition(
    placements: tuple[Placement, ...], target: Prototile
) -> dict[EdgeSymbol, Word]:
    """Two-letter word of each composite boundary edge of a 1-spread."""
    table = _segment_table(placements)

    def boundary_symbol(a: tuple[int, int], b: tuple[int, int]) -> EdgeSymbol:
        key = (a, b) if a < b else (b, a)
        hits = table[key]
        if len(hits) != 1:
            raise ValueError("invalid spread geometry")
        i, k = hits[0]
        return placements[i].edge_symbol(k)

    decomposition: dict[EdgeSymbol, Word] = {}
    for pos in range(8):
        x0, y0 = BOUNDARY_POINTS[pos]
        x1, y1 = BOUNDARY_POINTS[(pos + 1) % 8]
        start, end = (2 * x0, 2 * y0), (2 * x1, 2 * y1)
        mid = ((start[0] + end[0]) // 2, (start[1] + end[1]) // 2)
        first = boundary_symbol(start, mid)
        second = boundary_symbol(mid, end)
        # word written against the traversal: the second-walked letter leads
        w = Word.from_letters(second.letter + first.letter)
        decomposition[EdgeSymbol(target, edge_symbol_index(pos))] = w
    return decomposition


def compose_spread(pattern: int, target: Prototile) -> Spread:
    """The 4-tile decomposition of the doubled chair, labels set by pattern bits."""
    labels = slot_labels(pattern)
    placements = tuple(
        Placement(label, slot.rotation, slot.tx, slot.ty)
        for slot, label in zip(SPREAD_SLOTS, labels)
    )
    _check_cover(placements, 2)
    return Spread(
        scale=2,
        target=target,
        placements=placements,
        internal_matchings=interior_matchings(placements),
        boundary_decomposition=_boundary_decomposition(placements, target),
    )


@lru_cache(maxsize=None)
def _spread_placements(
    rule: SubstitutionRule, label: Prototile, s: int
) -> tuple[Placement, ...]:
    if s == 0:
        return (Placement(label, 0, 0, 0),)
    pattern = rule.pattern_for(label)
    labels = slot_labels(pattern)
    child_scale = 2 ** (s - 1)
    out = []
    for slot, child_label in zip(SPREAD_SLOTS, labels):
        for p in _spread_placements(rule, child_label, s - 1):
            rx, ry = rotate_point(slot.rotation, p.tx, p.ty)
            out.append(
                Placement(
                    p.label,
                    (slot.rotation + p.rotation) % 360,
                    rx + slot.tx * child_scale,
                    ry + slot.ty * child_scale,
                )
            )
    return tuple(out)


def generate_spread(rule: SubstitutionRule, target: Prototile, s: int) -> Spread:
    """Recursive s-fold substitution of the target prototile under ``rule``."""
    if s < 1:
        raise ValueError("spread order s must be >= 1")
    placements = _spread_placements(rule, target, s)
    scale = 2**s
    _check_cover(placements, scale)
    boundary = None
    if s == 1:
        boundary = _boundary_decomposition(placements, target)
    return Spread(
        scale=scale,
        target=target,
        placements=placements,
        internal_matchings=interior_matchings(placements),
        boundary_decomposition=boundary,
    )


def one_rule_spread(pattern: int, s: int) -> Spread:
    """s-spread of a tiling whose single composite supertile mixes both labels.

    Level 1 is the mixed 4-tile spread; every higher level expands composite
    blocks by the unique single-prototile decomposition.
    """
    if s < 1:
        raise ValueError("spread order s must be >= 1")
    if s == 1:
        return compose_spread(pattern, Prototile.ALPHA)
    child = one_rule_spread(pattern, s - 1)
    child_scale = 2 ** (s - 1)
    out = []
    for slot in SPREAD_SLOTS:
        for p in child.placements:
            rx, ry = rotate_point(slot.rotation, p.tx, p.ty)
            out.append(
                Placement(
                    p.label,
                    (slot.rotation + p.rotation) % 360,
                    rx + slot.tx * child_scale,
                    ry + slot.ty * child_scale,
                )
            )
    placements = tuple(out)
    scale = 2**s
    _check_cover(placements, scale)
    return Spread(
        scale=scale,
        target=Prototile.ALPHA,
        placements=placements,
        internal_matchings=interior_matchings(placements),
        boundary_decomposition=None,
    )


def oracle_relations(
    rule: SubstitutionRule, target: Prototile, s_max: int
) -> set[tuple[EdgeSymbol, EdgeSymbol]]:
    """Brute-force matching oracle: all base-level adjacencies of spreads up to s_max.

    Independent of the algebraic solver; every pair is read off an actual
    interior unit segment of a generated spread.
    """
    if s_max < 1:
        raise ValueError("s_max must be >= 1")
    relations: set[tuple[EdgeSymbol, EdgeSymbol]] = set()
    for s in range(1, s_max + 1):
        relations.update(generate_spread(rule, target, s).internal_matchings)
    return relations


# --- line-oriented placement export ---

def format_placements(placements: Iterable[Placement]) -> str:
    lines = [
        f"{p.label.value} {p.tx} {p.ty} {p.rotation}"
        for p in placements
    ]
    return "\n".join(lines) + "\n"


def parse_placements(text: str) -> tuple[Placement, ...]:
    out = []
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        label, tx, ty, rot = line.split()
        out.append(Placement(Prototile(label), int(rot), int(tx), int(ty)))
    return tuple(out)
