"""Exhaustive classification of two-rule combinations and one-rule patterns.

All 16 x 16 pattern pairs (i, j) are admissible except i = j and the two
degenerate pairs (0, 15), (15, 0), leaving 238.  Exchanging the prototile
roles identifies (i, j) with (15-j, 15-i), and on the anti-diagonal
(i, 15-i) with (15-i, i); the quotient has 119 classes.  One representative
per class is solved and tabulated.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .geometry import SubstitutionRule
from .relations import EXCLUDED_PAIRS, SolveMode, solve

Pair = tuple[int, int]

# The five mixed composite patterns classically documented for the one-rule
# construction; the remaining nine are computed for completeness and marked
# as extras in the table.
ONE_RULE_STANDARD_PATTERNS = (2, 3, 4, 5, 8)


def admissible_pairs() -> list[Pair]:
    return [
        (i, j)
        for i in range(16)
        for j in range(16)
        if i != j and (i, j) not in EXCLUDED_PAIRS
    ]


def _role_swap(pair: Pair) -> Pair:
    i, j = pair
    return (15 - j, 15 - i)


def equivalence_classes(pairs: list[Pair] | None = None) -> list[list[Pair]]:
    """Quotient of the admissible pairs under role swap and the
    anti-diagonal exchange (i, 15-i) <-> (15-i, i)."""
    if pairs is None:
        pairs = admissible_pairs()
    seen: set[Pair] = set()
    classes: list[list[Pair]] = []
    for pair in sorted(pairs):
        if pair in seen:
            continue
        orbit = {pair}
        frontier = [pair]
        while frontier:
            p = frontier.pop()
            images = [_role_swap(p)]
            i, j = p
            if i + j == 15:
                images.append((j, i))
            for q in images:
                if q not in orbit:
                    orbit.add(q)
                    frontier.append(q)
        seen |= orbit
        classes.append(sorted(orbit))
    return classes


@dataclass(frozen=True)
class CaseRow:
    representative: Pair
    members: tuple[Pair, ...]
    degree: int
    collapse: bool
    iterations: int
    presentation: str


@dataclass(frozen=True)
class CaseTable:
    rows: tuple[CaseRow, ...]

    @property
    def pair_count(self) -> int:
        return sum(len(r.members) for r in self.rows)

    def nontrivial(self) -> tuple[CaseRow, ...]:
        return tuple(r for r in self.rows if r.degree > 1)

    def to_dict(self) -> dict:
        return {
            "pair_count": self.pair_count,
            "class_count": len(self.rows),
            "classes": [
                {
                    "representative": list(r.representative),
                    "members": [list(m) for m in r.members],
                    "degree": r.degree,
                    "collapse": r.collapse,
                    "iterations": r.iterations,
                    "presentation": r.presentation,
                }
                for r in self.rows
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    def to_text(self) -> str:
        lines = [
            f"{'class':>10}  {'members':<24} {'deg':>3}  {'collapse':<8} presentation",
            "-" * 92,
        ]
        for r in self.rows:
            members = " ".join(f"({i},{j})" for i, j in r.members)
            lines.append(
                f"{f'({r.representative[0]},{r.representative[1]})':>10}  "
                f"{members:<24} {r.degree:>3}  {str(r.collapse).lower():<8} {r.presentation}"
            )
        lines.append("-" * 92)
        lines.append(f"{self.pair_count} pairs in {len(self.rows)} classes")
        return "\n".join(lines) + "\n"


def classify_all() -> CaseTable:
    """Solve one representative of each of the 119 two-rule classes."""
    rows = []
    for members in equivalence_classes():
        rep = members[0]
        result = solve(SolveMode.TWO_RULE, SubstitutionRule(*rep))
        rows.append(
            CaseRow(
                representative=rep,
                members=tuple(members),
                degree=result.degree,
                collapse=bool(result.collapse),
                iterations=result.iterations,
                presentation=result.presentation,
            )
        )
    rows.sort(key=lambda r: r.representative)
    return CaseTable(tuple(rows))


@dataclass(frozen=True)
class OneRuleRow:
    pattern: int
    degree: int
    collapse: bool
    presentation: str
    standard: bool


@dataclass(frozen=True)
class OneRuleTable:
    rows: tuple[OneRuleRow, ...]

    def to_dict(self) -> dict:
        return {
            "patterns": [
                {
                    "pattern": r.pattern,
                    "degree": r.degree,
                    "collapse": r.collapse,
                    "presentation": r.presentation,
                    "standard": r.standard,
                }
                for r in self.rows
            ]
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    def to_text(self) -> str:
        lines = [
            f"{'no.':>4} {'deg':>4}  {'collapse':<8} {'coverage':<8} presentation",
            "-" * 84,
        ]
        for r in self.rows:
            coverage = "standard" if r.standard else "extra"
            lines.append(
                f"{r.pattern:>4} {r.degree:>4}  {str(r.collapse).lower():<8} "
                f"{coverage:<8} {r.presentation}"
            )
        return "\n".join(lines) + "\n"


def classify_one_rule() -> OneRuleTable:
    """Solve every mixed one-rule pattern 1..14."""
    rows = []
    for pattern in range(1, 15):
        result = solve(SolveMode.ONE_RULE, SubstitutionRule(pattern))
        rows.append(
            OneRuleRow(
                pattern=pattern,
                degree=result.degree,
                collapse=bool(result.collapse),
                presentation=result.presentation,
                standard=pattern in ONE_RULE_STANDARD_PATTERNS,
            )
        )
    return OneRuleTable(tuple(rows))
