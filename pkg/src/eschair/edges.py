"""Algebra of perturbed edges: symbols, orientation operators, words, split laws.

A perturbed edge is a unit tile edge whose interior is displaced while both
endpoints stay fixed.  Two commuting involutions act on edges: ``mirror``
(right-side-left reflection) and ``invert`` (upside-down reflection).  Their
composition ``dual`` is the gluing operator: two edges abut in a tiling
exactly when one equals the dual of the other, written a/b.

Words are ordered products of edge terms.  The operators extend to words by

    mirror(x1 x2 ... xn) = mirror(x1) mirror(x2) ... mirror(xn)
    invert(x1 x2 ... xn) = invert(xn) ... invert(x2) invert(x1)

i.e. mirror distributes term by term while invert also reverses the order.
A word-level matching splits into symbol-level matchings pairwise from
opposite ends: (x1 x2)/(y1 y2) holds iff x1/y2 and x2/y1.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache


class Prototile(enum.Enum):
    ALPHA = "alpha"
    BETA = "beta"


ALPHA_LETTERS = "abcdefgh"
BETA_LETTERS = "ijklmnop"
_ALL_LETTERS = ALPHA_LETTERS + BETA_LETTERS


@dataclass(frozen=True)
class EdgeSymbol:
    """One of the 8 abstract edge labels of a prototile (a..h or i..p)."""

    prototile: Prototile
    index: int

    def __post_init__(self) -> None:
        if not 0 <= self.index < 8:
            raise ValueError(f"edge index {self.index} outside 0..7")

    @property
    def key(self) -> int:
        """Global ordering key: a..h -> 0..7, i..p -> 8..15."""
        return self.index + (8 if self.prototile is Prototile.BETA else 0)

    @property
    def letter(self) -> str:
        return _ALL_LETTERS[self.key]

    @classmethod
    def from_letter(cls, letter: str) -> "EdgeSymbol":
        return symbol(letter)

    def __lt__(self, other: "EdgeSymbol") -> bool:
        return self.key < other.key

    def __le__(self, other: "EdgeSymbol") -> bool:
        return self.key <= other.key

    def __str__(self) -> str:
        return self.letter

    def __repr__(self) -> str:
        return f"EdgeSymbol({self.letter!r})"


@lru_cache(maxsize=None)
def symbol(letter: str) -> EdgeSymbol:
    """Edge symbol for a canonical letter a..p."""
    k = _ALL_LETTERS.find(letter)
    if k < 0:
        raise ValueError(f"unknown edge letter {letter!r}")
    return EdgeSymbol(Prototile.ALPHA if k < 8 else Prototile.BETA, k % 8)


def symbols(letters: str) -> tuple[EdgeSymbol, ...]:
    return tuple(symbol(c) for c in letters)


ALPHA_SYMBOLS = symbols(ALPHA_LETTERS)
BETA_SYMBOLS = symbols(BETA_LETTERS)
ALL_SYMBOLS = ALPHA_SYMBOLS + BETA_SYMBOLS


@dataclass(frozen=True)
class EdgeTerm:
    """An edge symbol with orientation flags; the flags form a group of order 4."""

    symbol: EdgeSymbol
    mirrored: bool = False
    inverted: bool = False

    def mirror(self) -> "EdgeTerm":
        return EdgeTerm(self.symbol, not self.mirrored, self.inverted)

    def invert(self) -> "EdgeTerm":
        return EdgeTerm(self.symbol, self.mirrored, not self.inverted)

    def dual(self) -> "EdgeTerm":
        return EdgeTerm(self.symbol, not self.mirrored, not self.inverted)

    def __str__(self) -> str:
        s = self.symbol.letter
        if self.mirrored:
            s += "~"
        if self.inverted:
            s += "^-1"
        return s


@dataclass(frozen=True)
class Word:
    """Non-empty ordered product of edge terms."""

    terms: tuple[EdgeTerm, ...]

    def __post_init__(self) -> None:
        if len(self.terms) == 0:
            raise ValueError("a word must contain at least one term")

    @classmethod
    def from_letters(cls, letters: str) -> "Word":
        return cls(tuple(EdgeTerm(symbol(c)) for c in letters))

    def __len__(self) -> int:
        return len(self.terms)

    def __getitem__(self, k: int) -> EdgeTerm:
        return self.terms[k]

    def __iter__(self):
        return iter(self.terms)

    @property
    def letters(self) -> str:
        """Letter string of an unflagged word; raises if any term carries a flag."""
        if any(t.mirrored or t.inverted for t in self.terms):
            raise ValueError("word carries orientation flags")
        return "".join(t.symbol.letter for t in self.terms)

    def __str__(self) -> str:
        return " ".join(str(t) for t in self.terms)


def word(letters: str) -> Word:
    return Word.from_letters(letters)


def concat(w1: Word, w2: Word) -> Word:
    return Word(w1.terms + w2.terms)


def mirror(w: Word) -> Word:
    """Mirror each term; the order is unchanged."""
    return Word(tuple(t.mirror() for t in w.terms))


def invert(w: Word) -> Word:
    """Invert each term and reverse the order."""
    return Word(tuple(t.invert() for t in reversed(w.terms)))


def dual(w: Word) -> Word:
    """mirror o invert: both flags toggle and the order reverses."""
    return Word(tuple(t.dual() for t in reversed(w.terms)))


def matches(w1: Word, w2: Word) -> bool:
    """Word-level matching w1/w2, i.e. w1 equals the dual of w2."""
    return w1 == dual(w2)


def split_match(w1: Word, w2: Word) -> list[tuple[EdgeSymbol, EdgeSymbol]]:
    """Split a word matching w1/w2 into symbol matchings, paired from opposite ends.

    Requires equal lengths: unit edges force aligned split points, so a
    matching of n-letter words is equivalent to the n pairs
    (w1[k], w2[n-1-k]).
    """
    if len(w1) != len(w2):
        raise ValueError("unsplittable product matching: word lengths differ")
    n = len(w1)
    return [(w1[k].symbol, w2[n - 1 - k].symbol) for k in range(n)]


def split_equal(w1: Word, w2: Word) -> list[tuple[EdgeSymbol, EdgeSymbol]]:
    """Split a word equality w1 = w2 into componentwise symbol equalities."""
    if len(w1) != len(w2):
        raise ValueError("unsplittable product equality: word lengths differ")
    for t in (*w1.terms, *w2.terms):
        if t.mirrored or t.inverted:
            raise ValueError("split_equal requires unflagged terms")
    return [(w1[k].symbol, w2[k].symbol) for k in range(len(w1))]


# --- concrete curve realization of a perturbed edge ---

AMPLITUDE_CAP = 0.3


@dataclass(frozen=True)
class PerturbedCurve:
    """Polyline displacement profile of a perturbed unit edge.

    ``samples`` are (t, u) pairs: t the fraction of the edge length, u the
    signed displacement along the edge's left normal, both in edge-length
    units.  The endpoints (0, 0) and (1, 0) are implicit; an empty sample
    list is the straight edge.
    """

    samples: tuple[tuple[float, float], ...] = ()

    def __post_init__(self) -> None:
        prev = 0.0
        for t, u in self.samples:
            if not prev < t < 1.0:
                raise ValueError("sample parameters must be strictly increasing within (0, 1)")
            if abs(u) > AMPLITUDE_CAP:
                raise ValueError(f"displacement {u} exceeds the amplitude cap {AMPLITUDE_CAP}")
            prev = t

    @property
    def is_straight(self) -> bool:
        return not self.samples

    def displacement(self, t: float) -> float:
        """Piecewise-linear displacement at parameter t in [0, 1]."""
        pts = ((0.0, 0.0), *self.samples, (1.0, 0.0))
        for (t0, u0), (t1, u1) in zip(pts, pts[1:]):
            if t <= t1:
                if t1 == t0:
                    return u1
                return u0 + (u1 - u0) * (t - t0) / (t1 - t0)
        return 0.0


STRAIGHT = PerturbedCurve()


def make_curve(samples) -> PerturbedCurve:
    return PerturbedCurve(tuple((float(t), float(u)) for t, u in samples))


def curve_mirror(c: PerturbedCurve) -> PerturbedCurve:
    """(t, u) -> (1 - t, u), reordered to keep t increasing."""
    return PerturbedCurve(tuple((1.0 - t, u) for t, u in reversed(c.samples)))


def curve_invert(c: PerturbedCurve) -> PerturbedCurve:
    """(t, u) -> (t, -u)."""
    return PerturbedCurve(tuple((t, -u) for t, u in c.samples))


def curve_dual(c: PerturbedCurve) -> PerturbedCurve:
    """(t, u) -> (1 - t, -u), reordered.  Edges a, b abut iff a = dual(b)."""
    return PerturbedCurve(tuple((1.0 - t, -u) for t, u in reversed(c.samples)))


def curve_is_self_dual(c: PerturbedCurve, tol: float = 1e-9) -> bool:
    """Whether the polyline satisfies u(t) = -u(1 - t) within tol."""
    d = curve_dual(c)
    grid = sorted({t for t, _ in c.samples} | {1.0 - t for t, _ in c.samples} | {0.0, 0.5, 1.0})
    return all(abs(c.displacement(t) - d.displacement(t)) <= tol for t in grid)
