from __future__ import annotations

import pytest

from eschair.edges import symbols
from eschair.relations import RelationSystem


def parse_partition(text: str) -> frozenset:
    """Parse 'a=c=e=g / b=d=f=h; i; j / m' into a set of class side-pairs."""
    classes = set()
    for chunk in text.split(";"):
        chunk = chunk.strip()
        if "/" in chunk:
            left, right = chunk.split("/")
        else:
            left, right = chunk, ""
        same = frozenset(symbols(left.replace("=", "").strip()))
        dual = frozenset(symbols(right.replace("=", "").strip()))
        classes.add(frozenset((same, dual)))
    return frozenset(classes)


def partition(system: RelationSystem) -> frozenset:
    return frozenset(c.sides() for c in system.classes())


@pytest.fixture(scope="session")
def case_table():
    from eschair.classify import classify_all

    return classify_all()


@pytest.fixture(scope="session")
def one_rule_table():
    from eschair.classify import classify_one_rule

    return classify_one_rule()
