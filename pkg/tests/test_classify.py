import json

import pytest

from eschair.classify import (
    ONE_RULE_STANDARD_PATTERNS,
    admissible_pairs,
    classify_all,
    classify_one_rule,
    equivalence_classes,
)
from eschair.geometry import SubstitutionRule
from eschair.relations import SolveMode, solve


def test_admissible_pair_count():
    pairs = admissible_pairs()
    assert len(pairs) == 238
    assert (0, 15) not in pairs and (15, 0) not in pairs
    assert (5, 5) not in pairs
    assert (0, 2) in pairs


def test_equivalence_class_count():
    classes = equivalence_classes()
    assert len(classes) == 119
    assert sum(len(c) for c in classes) == 238


def test_known_equivalences():
    classes = {tuple(c) for c in equivalence_classes()}
    assert ((0, 2), (13, 15)) in classes
    assert ((5, 10), (10, 5)) in classes
    assert ((0, 8), (7, 15)) in classes
    assert ((0, 10), (5, 15)) in classes


def test_representatives_are_lexicographic_minima():
    for members in equivalence_classes():
        assert members[0] == min(members)


def test_case_table_nontrivial_rows(case_table):
    nontrivial = {r.representative: r for r in case_table.nontrivial()}
    assert set(nontrivial) == {(0, 2), (0, 8), (0, 10), (5, 10)}
    assert nontrivial[(5, 10)].degree == 2
    assert nontrivial[(0, 2)].degree == 5
    assert nontrivial[(0, 8)].degree == 3
    assert nontrivial[(0, 10)].degree == 3
    assert nontrivial[(5, 10)].members == ((5, 10), (10, 5))
    assert nontrivial[(0, 2)].members == ((0, 2), (13, 15))
    assert not nontrivial[(5, 10)].collapse


def test_case_table_trivial_rows_collapse(case_table):
    for row in case_table.rows:
        if row.degree == 1:
            assert row.collapse is True


def test_case_table_members_partition_pairs(case_table):
    members = [m for r in case_table.rows for m in r.members]
    assert sorted(members) == sorted(admissible_pairs())


def test_equivalent_pairs_have_equal_degrees(case_table):
    for row in case_table.rows:
        for member in row.members[1:]:
            assert solve(SolveMode.TWO_RULE, SubstitutionRule(*member)).degree == row.degree


def test_complement_involution_degrees():
    for i, j in admissible_pairs():
        if (i, j) <= (15 - j, 15 - i):
            d1 = solve(SolveMode.TWO_RULE, SubstitutionRule(i, j)).degree
            d2 = solve(SolveMode.TWO_RULE, SubstitutionRule(15 - j, 15 - i)).degree
            assert d1 == d2


def test_case_table_deterministic(case_table):
    again = classify_all()
    assert again.to_json() == case_table.to_json()
    assert again.to_text() == case_table.to_text()


def test_case_table_json_shape(case_table):
    doc = json.loads(case_table.to_json())
    assert doc["pair_count"] == 238
    assert doc["class_count"] == 119
    row = doc["classes"][0]
    assert set(row) == {
        "representative", "members", "degree", "collapse", "iterations", "presentation",
    }


def test_one_rule_table_pinned_patterns(one_rule_table):
    rows = {r.pattern: r for r in one_rule_table.rows}
    assert set(rows) == set(range(1, 15))
    for pattern in (2, 3, 4):
        assert rows[pattern].degree == 1
    assert rows[5].degree == 2
    assert rows[8].degree == 4
    assert rows[5].presentation == "a=e=m / b=f=n; c=g=i=k=o / d=h=j=l=p"


def test_one_rule_table_flags_extras(one_rule_table):
    for row in one_rule_table.rows:
        assert row.standard == (row.pattern in ONE_RULE_STANDARD_PATTERNS)
    extras = [r.pattern for r in one_rule_table.rows if not r.standard]
    assert extras == [1, 6, 7, 9, 10, 11, 12, 13, 14]


def test_one_rule_text_table_mentions_coverage(one_rule_table):
    text = one_rule_table.to_text()
    assert "standard" in text and "extra" in text
