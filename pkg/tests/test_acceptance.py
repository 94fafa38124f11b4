"""Acceptance suite: one test per criterion, each printing its PASS line.

Run with: pytest tests/test_acceptance.py -v -s
"""

import math
import random

import numpy as np

from conftest import parse_partition, partition

from eschair.classify import admissible_pairs, classify_all, equivalence_classes
from eschair.edges import (
    ALL_SYMBOLS,
    EdgeTerm,
    Word,
    concat,
    curve_dual,
    dual,
    invert,
    make_curve,
    mirror,
    split_match,
    symbol,
    symbols,
)
from eschair.edges import Prototile
from eschair.escher import (
    build_tiling,
    class_index,
    consistency_check,
    propagate,
    random_params,
    simplicity_check,
    spread_for,
    straight_outlines,
    zero_params,
)
from eschair.geometry import SubstitutionRule, compose_spread, generate_spread, oracle_relations
from eschair.relations import SolveMode, closure, solve, systems_agree

ALPHA, BETA = Prototile.ALPHA, Prototile.BETA


def _report(n: int, label: str) -> None:
    print(f"ACCEPTANCE {n:>2} {label}: PASS")


def test_criterion_01_single_prototile_degree():
    result = solve(SolveMode.SINGLE)
    assert result.degree == 1
    assert partition(result.system) == parse_partition("a=c=e=g / b=d=f=h")
    _report(1, "single-prototile degree and partition")


def test_criterion_02_one_rule_degrees_and_partitions():
    degrees = {}
    for pattern in (2, 3, 4, 5, 8):
        degrees[pattern] = solve(SolveMode.ONE_RULE, SubstitutionRule(pattern))
    assert degrees[2].degree == 1
    assert degrees[3].degree == 1
    assert degrees[4].degree == 1
    assert degrees[5].degree == 2
    assert degrees[8].degree == 4
    assert partition(degrees[5].system) == parse_partition(
        "a=e=m / b=f=n; c=g=i=k=o / d=h=j=l=p"
    )
    assert partition(degrees[8].system) == parse_partition(
        "a / l=n=p; k=m=o / b; c=g / d=h; e=i / f=j"
    )
    _report(2, "one-rule degrees 1,1,1,2,4 and exact partitions")


def test_criterion_03_counts():
    assert len(admissible_pairs()) == 238
    assert len(equivalence_classes()) == 119
    _report(3, "238 admissible pairs in 119 classes")


def test_criterion_04_two_rule_classification(case_table):
    nontrivial = {r.representative: r for r in case_table.nontrivial()}
    expected_members = {
        (5, 10): ((5, 10), (10, 5)),
        (0, 2): ((0, 2), (13, 15)),
        (0, 8): ((0, 8), (7, 15)),
        (0, 10): ((0, 10), (5, 15)),
    }
    expected_degrees = {(5, 10): 2, (0, 2): 5, (0, 8): 3, (0, 10): 3}
    expected_partitions = {
        (5, 10): "a=c=g=m / f=j=l=p; e=i=k=o / b=d=h=n",
        (0, 2): "a=c=e=g=i=k / b=d=f=h=j=p; l; m; n; o",
        (0, 8): "a=c=e=g=k=m=o / b=d=f=h=l=n=p; i; j",
        (0, 10): "a=c=e=g=k=o / b=d=f=h=l=p; m / j; i / n",
    }
    assert set(nontrivial) == set(expected_members)
    for rep, row in nontrivial.items():
        assert row.members == expected_members[rep]
        assert row.degree == expected_degrees[rep]
        system = solve(SolveMode.TWO_RULE, SubstitutionRule(*rep)).system
        assert partition(system) == parse_partition(expected_partitions[rep])
    trivial = [r for r in case_table.rows if r.representative not in nontrivial]
    assert len(trivial) == 115
    assert all(r.degree == 1 for r in trivial)
    _report(4, "two-rule classification: 4 nontrivial classes (2,5,3,3), 115 trivial")


def test_criterion_05_first_pattern_one_collapses_fast():
    for j in range(16):
        if j == 1:
            continue
        result = solve(SolveMode.TWO_RULE, SubstitutionRule(1, j))
        assert len(result.system.classes()) == 1
        assert result.collapse is True
        assert result.iterations <= 4
    _report(5, "(1,j) single-class fixed point within 4 lifting iterations")


def test_criterion_06_oracle_equivalence():
    for members in equivalence_classes():
        rule = SubstitutionRule(*members[0])
        relations = oracle_relations(rule, ALPHA, 4) | oracle_relations(rule, BETA, 4)
        oracle_system = closure(relations, ALL_SYMBOLS)
        solved = solve(SolveMode.TWO_RULE, rule).system
        assert systems_agree(oracle_system, solved), members[0]
    _report(6, "geometric oracle (s <= 4) equals the solver on all 119 classes")


def test_criterion_07_geometry_calibration():
    def pair_listing(spread):
        return sorted(
            tuple(sorted((a.letter, b.letter))) for a, b in spread.internal_matchings
        )

    def expected(listing):
        return sorted(tuple(sorted(p.split("/"))) for p in listing.split())

    def boundary(spread):
        return {
            s.letter: w.letters for s, w in spread.boundary_decomposition.items()
        }

    sp0 = compose_spread(0, ALPHA)
    schema = closure(sp0.internal_matchings, symbols("abcdefgh"))
    assert partition(schema) == parse_partition("a=c=e=g / b=d=f=h")
    assert boundary(sp0) == {
        "a": "ha", "b": "bc", "c": "de", "d": "fg",
        "e": "de", "f": "fg", "g": "de", "h": "fg",
    }
    sp5 = compose_spread(5, ALPHA)
    sp10 = compose_spread(10, BETA)
    assert pair_listing(sp5) == expected("j/c i/d p/c b/e f/a h/k g/j h/i")
    assert pair_listing(sp10) == expected("b/k a/l h/k j/m n/i p/c o/b p/a")
    assert boundary(sp5) == {
        "a": "pa", "b": "bk", "c": "lm", "d": "no",
        "e": "de", "f": "fg", "g": "lm", "h": "no",
    }
    assert boundary(sp10) == {
        "i": "hi", "j": "jc", "k": "de", "l": "fg",
        "m": "lm", "n": "no", "o": "de", "p": "fg",
    }
    _report(7, "calibration locks: adjacency listings and boundary words")


def test_criterion_08_antidiagonal_spread_equivalence():
    for i in range(16):
        rule_a = SubstitutionRule(i, 15 - i)
        rule_b = SubstitutionRule(15 - i, i)
        for s in (1, 2, 3):
            pl = lambda rule, target: set(generate_spread(rule, target, s).placements)
            if s % 2 == 1:
                assert pl(rule_a, ALPHA) == pl(rule_b, BETA)
                assert pl(rule_a, BETA) == pl(rule_b, ALPHA)
            else:
                assert pl(rule_a, ALPHA) == pl(rule_b, ALPHA)
                assert pl(rule_a, BETA) == pl(rule_b, BETA)
    _report(8, "anti-diagonal rules: odd spreads swap roles, even spreads agree")


def test_criterion_09_single_beta_tile_rules():
    for pair in ((0, 2), (0, 8)):
        for s in (1, 2, 3):
            spread = generate_spread(SubstitutionRule(*pair), BETA, s)
            assert sum(p.label is BETA for p in spread.placements) == 1
    _report(9, "beta spreads of (0,2) and (0,8) keep exactly one beta tile")


THEOREM_SYSTEMS = (
    ("single", SolveMode.SINGLE, None),
    ("one-rule no.5", SolveMode.ONE_RULE, SubstitutionRule(5)),
    ("one-rule no.8", SolveMode.ONE_RULE, SubstitutionRule(8)),
    ("two-rule (5,10)", SolveMode.TWO_RULE, SubstitutionRule(5, 10)),
    ("two-rule (0,2)", SolveMode.TWO_RULE, SubstitutionRule(0, 2)),
    ("two-rule (0,8)", SolveMode.TWO_RULE, SubstitutionRule(0, 8)),
    ("two-rule (0,10)", SolveMode.TWO_RULE, SubstitutionRule(0, 10)),
)


def test_criterion_10_renderer_realizes_every_degree_of_freedom():
    for name, mode, rule in THEOREM_SYSTEMS:
        result = solve(mode, rule)
        spread = spread_for(mode, rule, 3)
        ids = class_index(result.system)

        zero = propagate(result.system, zero_params(result.system))
        rt = build_tiling(spread.placements, spread.scale, zero, ids)
        for outline, reference in zip(rt.outlines, straight_outlines(rt.placements)):
            assert np.array_equal(outline, reference), name

        for trial in range(100):
            params = random_params(result.system, seed=hash(name) % 10_000 + trial)
            curves = propagate(result.system, params)
            rt = build_tiling(spread.placements, spread.scale, curves, ids)
            assert consistency_check(rt), (name, trial)
            simplicity_check(rt)
    _report(10, "renderer: 7 systems x 100 random draws at s=3 consistent and simple")


def _random_word(rng: random.Random, max_len: int = 8) -> Word:
    n = rng.randint(1, max_len)
    return Word(
        tuple(
            EdgeTerm(
                ALL_SYMBOLS[rng.randrange(16)],
                rng.random() < 0.5,
                rng.random() < 0.5,
            )
            for _ in range(n)
        )
    )


def _word_polyline(word, curves):
    pts = [(0.0, 0.0)]
    for k, term in enumerate(word):
        for t, u in curves[term.symbol].samples:
            pts.append((k + t, u))
        pts.append((k + 1.0, 0.0))
    return pts


def test_criterion_11_algebra_laws_bulk():
    rng = random.Random(2024)
    for _ in range(10_000):
        w = _random_word(rng)
        assert mirror(mirror(w)) == w
        assert invert(invert(w)) == w
        assert mirror(invert(w)) == invert(mirror(w)) == dual(w)
        v = _random_word(rng, max_len=4)
        assert mirror(concat(w, v)) == concat(mirror(w), mirror(v))
        assert invert(concat(w, v)) == concat(invert(v), invert(w))

    # split/reassembly: the split pairs hold exactly when the concatenated
    # edge curves of w1 trace the dual of w2's concatenation
    letters = list("abcdefghijklmnop")
    for trial in range(200):
        n = rng.choice((1, 2, 3))
        picked = rng.sample(letters, 2 * n)
        w1 = Word.from_letters("".join(picked[:n]))
        w2 = Word.from_letters("".join(picked[n:]))
        curves = {}
        for c in picked[n:]:
            ts = sorted({round(rng.uniform(0.1, 0.9), 3) for _ in range(4)})
            curves[symbol(c)] = make_curve(
                [(t, rng.uniform(-0.25, 0.25)) for t in ts]
            )
        for x, y in split_match(w1, w2):
            curves[x] = curve_dual(curves[y])
        lhs = _word_polyline(w1, curves)
        rhs = [(n - x, -u) for x, u in reversed(_word_polyline(w2, curves))]
        assert len(lhs) == len(rhs)
        assert all(
            math.isclose(a, c, abs_tol=1e-12) and math.isclose(b, d, abs_tol=1e-12)
            for (a, b), (c, d) in zip(lhs, rhs)
        )
        # breaking one pair breaks the reassembly
        broken = dict(curves)
        broken[w1[0].symbol] = make_curve([(0.5, 0.29)])
        lhs_broken = _word_polyline(w1, broken)
        assert any(
            not (math.isclose(a, c, abs_tol=1e-12) and math.isclose(b, d, abs_tol=1e-12))
            for (a, b), (c, d) in zip(lhs_broken, rhs)
        )
    _report(11, "operator laws on 10^4 random words; split/reassembly identities")
