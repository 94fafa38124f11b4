"""Parity union-find over edge symbols and the escher-degree solver.

A relation system stores equalities a = b and matchings a/b in one disjoint-set
structure whose links carry a same/dual bit composed by XOR along find paths.
Matching functionality (a/b and a/c force b = c) then holds by construction.
A class is flagged self-dual when some merge forces a symbol equivalent to its
own dual; none of the chair systems produce one, so any occurrence is
surfaced rather than silently absorbed.

``solve`` builds the complete constraint system of a tiling mode:

* single prototile: seed with the 1-spread adjacencies, then pull the
  composite-edge schema {a'=c'=e'=g', b'=d'=f'=h', a'/b'} back through the
  boundary decomposition;
* one rule (mixed composite supertile): same schema imposed on the mixed
  spread's composite edges, treating the supertile as a single prototile;
* two rules: least fixed point of lifting every base relation to the
  corresponding composite-edge relation and splitting it back, which mirrors
  adjacency extraction at every substitution level.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass
from typing import Iterable, Sequence

from .edges import (
    ALL_SYMBOLS,
    ALPHA_SYMBOLS,
    EdgeSymbol,
    Prototile,
    Word,
    split_equal,
    split_match,
    symbol,
)
from .geometry import Spread, SubstitutionRule, compose_spread

SAME = 0
DUAL = 1

MAX_LIFT_PASSES = 16

EXCLUDED_PAIRS = ((0, 15), (15, 0))


class SolveMode(enum.Enum):
    SINGLE = "single"
    ONE_RULE = "one-rule"
    TWO_RULE = "two-rule"


@dataclass(frozen=True)
class RelationClass:
    """One solved class: members split by parity relative to the class root."""

    same: tuple[EdgeSymbol, ...]
    dual: tuple[EdgeSymbol, ...]
    self_dual: bool

    @property
    def members(self) -> tuple[EdgeSymbol, ...]:
        return self.same + self.dual

    def sides(self) -> frozenset[frozenset[EdgeSymbol]]:
        return frozenset((frozenset(self.same), frozenset(self.dual)))


class RelationSystem:
    """Union-find with a same/dual parity bit on every link."""

    def __init__(self, universe: Iterable[EdgeSymbol] = ALL_SYMBOLS):
        self._universe = tuple(universe)
        if len(set(self._universe)) != len(self._universe):
            raise ValueError("universe contains duplicate symbols")
        self._parent = {x: x for x in self._universe}
        self._parity = {x: SAME for x in self._universe}
        self._rank = {x: 0 for x in self._universe}
        self._self_dual: set[EdgeSymbol] = set()

    @property
    def universe(self) -> tuple[EdgeSymbol, ...]:
        return self._universe

    def find(self, x: EdgeSymbol) -> tuple[EdgeSymbol, int]:
        """Root of x's class and x's parity relative to it."""
        path = []
        while self._parent[x] != x:
            path.append(x)
            x = self._parent[x]
        root = x
        parity = SAME
        for y in reversed(path):
            parity ^= self._parity[y]
            self._parent[y] = root
            self._parity[y] = parity
        return root, self._parity[path[0]] if path else SAME

    def _link(self, x: EdgeSymbol, y: EdgeSymbol, rel: int) -> None:
        if x not in self._parent or y not in self._parent:
            raise KeyError("symbol outside the system universe")
        rx, px = self.find(x)
        ry, py = self.find(y)
        if rx == ry:
            if px ^ py != rel:
                self._self_dual.add(rx)
            return
        if self._rank[rx] < self._rank[ry]:
            rx, ry = ry, rx
            px, py = py, px
        self._parent[ry] = rx
        self._parity[ry] = px ^ py ^ rel
        if self._rank[rx] == self._rank[ry]:
            self._rank[rx] += 1
        if ry in self._self_dual:
            self._self_dual.discard(ry)
            self._self_dual.add(rx)

    def add_equal(self, x: EdgeSymbol, y: EdgeSymbol) -> None:
        self._link(x, y, SAME)

    def add_match(self, x: EdgeSymbol, y: EdgeSymbol) -> None:
        self._link(x, y, DUAL)

    def relations_of(self, x: EdgeSymbol, y: EdgeSymbol) -> frozenset[int]:
        """The set of relations holding between x and y (empty if unrelated)."""
        rx, px = self.find(x)
        ry, py = self.find(y)
        if rx != ry:
            return frozenset()
        if rx in self._self_dual:
            return frozenset((SAME, DUAL))
        return frozenset((px ^ py,))

    def classes(self) -> tuple[RelationClass, ...]:
        """Canonical classes, sorted by least member; the side holding the
        least member is reported as the same-parity side."""
        groups: dict[EdgeSymbol, tuple[list, list]] = {}
        for x in self._universe:
            root, parity = self.find(x)
            sides = groups.setdefault(root, ([], []))
            sides[parity].append(x)
        out = []
        for root, (side0, side1) in groups.items():
            if root in self._self_dual:
                # every member is equivalent to its own dual: the parity
                # split is meaningless, so report one canonical side
                members = sorted(side0 + side1, key=lambda s: s.key)
                out.append(RelationClass(tuple(members), (), True))
                continue
            side0.sort(key=lambda s: s.key)
            side1.sort(key=lambda s: s.key)
            least = min(x.key for x in side0 + side1)
            if side1 and (not side0 or side1[0].key == least):
                side0, side1 = side1, side0
            out.append(RelationClass(tuple(side0), tuple(side1), False))
        out.sort(key=lambda c: c.same[0].key)
        return tuple(out)

    def escher_degree(self) -> int:
        """Number of free edge parameters: one per class (self-dual counts 1)."""
        return len(self.classes())

    def presentation(self) -> str:
        parts = []
        for c in self.classes():
            left = "=".join(s.letter for s in c.same)
            if c.dual:
                right = "=".join(s.letter for s in c.dual)
                text = f"{left} / {right}"
            else:
                text = left
            if c.self_dual:
                text += " [self-dual]"
            parts.append(text)
        return "; ".join(parts)

    def partition_signature(self):
        return tuple(
            (tuple(s.key for s in c.same), tuple(s.key for s in c.dual), c.self_dual)
            for c in self.classes()
        )


def detect_prototile_collapse(system: RelationSystem) -> bool:
    """True iff both prototiles carry identical edges: every pair of
    same-index symbols shares a class at same parity."""
    if len(system.universe) != 16:
        raise ValueError("prototile collapse is defined on the 16-symbol universe")
    for k in range(8):
        a = EdgeSymbol(Prototile.ALPHA, k)
        b = EdgeSymbol(Prototile.BETA, k)
        ra, pa = system.find(a)
        rb, pb = system.find(b)
        if ra != rb or pa != pb:
            return False
    return True


def closure(
    pairs: Iterable[tuple[EdgeSymbol, EdgeSymbol]],
    universe: Iterable[EdgeSymbol] = ALL_SYMBOLS,
) -> RelationSystem:
    """Relation system generated by a set of matching pairs."""
    system = RelationSystem(universe)
    for x, y in pairs:
        system.add_match(x, y)
    return system


@dataclass(frozen=True)
class SolveResult:
    mode: SolveMode
    rule: SubstitutionRule | None
    system: RelationSystem
    iterations: int

    @property
    def degree(self) -> int:
        return self.system.escher_degree()

    @property
    def presentation(self) -> str:
        return self.system.presentation()

    @property
    def collapse(self) -> bool | None:
        if len(self.system.universe) != 16:
            return None
        return detect_prototile_collapse(self.system)

    def to_dict(self) -> dict:
        return {
            "mode": self.mode.value,
            "pattern_i": self.rule.alpha_pattern if self.rule else None,
            "pattern_j": self.rule.beta_pattern if self.rule else None,
            "degree": self.degree,
            "collapse": self.collapse,
            "iterations": self.iterations,
            "classes": [
                {
                    "same": [s.letter for s in c.same],
                    "dual": [s.letter for s in c.dual],
                    "self_dual": c.self_dual,
                }
                for c in self.system.classes()
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)


def _seed_matchings(system: RelationSystem, spread: Spread) -> None:
    for x, y in spread.internal_matchings:
        system.add_match(x, y)


def _pull_back_schema(system: RelationSystem, spread: Spread) -> None:
    """Impose the single-prototile schema on a spread's composite edges.

    A composite supertile tiles hierarchically iff its eight edges satisfy
    a'=c'=e'=g', b'=d'=f'=h' and a'/b'; each relation splits through the
    two-letter boundary words into base-symbol relations.
    """
    boundary = spread.boundary_decomposition
    assert boundary is not None

    def w(letter: str) -> Word:
        return boundary[EdgeSymbol(spread.target, symbol(letter).index)]

    for x in "ceg":
        for p, q in split_equal(w("a"), w(x)):
            system.add_equal(p, q)
    for x in "dfh":
        for p, q in split_equal(w("b"), w(x)):
            system.add_equal(p, q)
    for p, q in split_match(w("a"), w("b")):
        system.add_match(p, q)


def _lift_fixed_point(
    system: RelationSystem, words: dict[EdgeSymbol, Word]
) -> int:
    """Lift every current relation x rel y to x' rel y' on composite edges and
    split it back; repeat to the least fixed point.  Returns the number of
    passes executed (the final, unproductive pass included)."""
    syms = system.universe
    passes = 0
    while True:
        passes += 1
        if passes > MAX_LIFT_PASSES:
            raise RuntimeError("lifting failed to stabilize (cannot happen)")
        before = system.partition_signature()
        for a in range(len(syms)):
            for b in range(a, len(syms)):
                x, y = syms[a], syms[b]
                rels = system.relations_of(x, y)
                if SAME in rels and x != y:
                    for p, q in split_equal(words[x], words[y]):
                        system.add_equal(p, q)
                if DUAL in rels:
                    for p, q in split_match(words[x], words[y]):
                        system.add_match(p, q)
        if system.partition_signature() == before:
            return passes


def _validate_two_rule(rule: SubstitutionRule) -> None:
    if rule.beta_pattern is None:
        raise ValueError("two-rule mode needs both substitution patterns")
    pair = (rule.alpha_pattern, rule.beta_pattern)
    if pair[0] == pair[1] or pair in EXCLUDED_PAIRS:
        raise ValueError(f"pair {pair} is excluded from the two-rule classification")


def solve(mode: SolveMode, rule: SubstitutionRule | None = None) -> SolveResult:
    """Complete relation system and escher degree of a tiling mode."""
    if mode is SolveMode.SINGLE:
        if rule is None:
            rule = SubstitutionRule(0)
        if rule.alpha_pattern != 0 or rule.beta_pattern is not None:
            raise ValueError("single mode uses the all-alpha substitution (pattern 0)")
        spread = compose_spread(0, Prototile.ALPHA)
        system = RelationSystem(ALPHA_SYMBOLS)
        _seed_matchings(system, spread)
        _pull_back_schema(system, spread)
        return SolveResult(mode, rule, system, iterations=1)

    if mode is SolveMode.ONE_RULE:
        if rule is None or rule.beta_pattern is not None:
            raise ValueError("one-rule mode takes a single mixed pattern")
        if rule.alpha_pattern in (0, 15):
            raise ValueError("pattern is not mixed; use single mode")
        spread = compose_spread(rule.alpha_pattern, Prototile.ALPHA)
        system = RelationSystem(ALL_SYMBOLS)
        _seed_matchings(system, spread)
        _pull_back_schema(system, spread)
        return SolveResult(mode, rule, system, iterations=1)

    if mode is SolveMode.TWO_RULE:
        if rule is None:
            raise ValueError("two-rule mode needs a substitution rule")
        _validate_two_rule(rule)
        alpha_spread = compose_spread(rule.alpha_pattern, Prototile.ALPHA)
        beta_spread = compose_spread(rule.beta_pattern, Prototile.BETA)
        words: dict[EdgeSymbol, Word] = {}
        words.update(alpha_spread.boundary_decomposition)
        words.update(beta_spread.boundary_decomposition)
        system = RelationSystem(ALL_SYMBOLS)
        _seed_matchings(system, alpha_spread)
        _seed_matchings(system, beta_spread)
        iterations = _lift_fixed_point(system, words)
        return SolveResult(mode, rule, system, iterations=iterations)

    raise ValueError(f"unknown solve mode {mode!r}")


def partition_of(system: RelationSystem) -> frozenset:
    """Order-free fingerprint of a solved system: the set of class side-pairs."""
    return frozenset(c.sides() for c in system.classes())


def systems_agree(a: RelationSystem, b: RelationSystem) -> bool:
    """Same partition and same parities (sides may swap roles, classes may not)."""
    return (
        set(a.universe) == set(b.universe)
        and partition_of(a) == partition_of(b)
        and all(
            ca.self_dual == cb.self_dual
            for ca, cb in zip(a.classes(), b.classes())
        )
    )


def universe_for_mode(mode: SolveMode) -> Sequence[EdgeSymbol]:
    return ALPHA_SYMBOLS if mode is SolveMode.SINGLE else ALL_SYMBOLS
