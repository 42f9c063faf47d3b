from itertools import combinations, product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hallmatch import (
    FiniteSet,
    UnknownIndex,
    bind_union,
    check_hall_condition,
    family_of_relation,
    image_rel,
    make_relation,
    solve_relation,
)
from hallmatch.oracles import brute_force_transversal


@st.composite
def relations(draw, max_left=5, max_right=5):
    left = list(range(draw(st.integers(0, max_left))))
    right = list("vwxyz"[: draw(st.integers(0, max_right))])
    pairs = [p for p in product(left, right) if draw(st.booleans())]
    return make_relation(left, right, pairs)


def test_image_rel_examples():
    rel = make_relation([0, 1], "ab", [(0, "a"), (0, "b"), (1, "b")])
    assert image_rel(rel, []) == FiniteSet()
    assert image_rel(rel, [1]).members == ("b",)
    full = make_relation([0, 1], "ab", product([0, 1], "ab"))
    assert image_rel(full, [0, 1]).members == ("a", "b")
    with pytest.raises(UnknownIndex):
        image_rel(rel, [5])


def test_family_of_relation_examples():
    f = family_of_relation(make_relation([0], ["a"], []))
    assert f.indices == (0,) and f[0] == FiniteSet()
    f = family_of_relation(make_relation([0, 1], "ab", [(0, "a"), (1, "a"), (1, "b")]))
    assert f.to_dict() == {0: ["a"], 1: ["a", "b"]}
    f = family_of_relation(make_relation([0, 1], "ab", product([0, 1], "ab")))
    assert f[0] == f[1] == FiniteSet(("a", "b"))


def test_solve_relation_examples():
    assert solve_relation(make_relation([], "a", [])).matching.as_dict() == {}
    out = solve_relation(make_relation([0, 1], "a", [(0, "a"), (1, "a")]))
    assert not out.ok and out.violation.witness.subset == (0, 1)
    rel = make_relation([0, 1, 2], "abc", [(0, "a"), (0, "b"), (1, "b"), (2, "a"), (2, "c")])
    assert brute_force_transversal(family_of_relation(rel)) is not None
    out = solve_relation(rel)
    assert out.ok
    f = out.matching.as_dict()
    assert len(set(f.values())) == 3 and all((a, b) in rel.pairs for a, b in f.items())


def test_relation_rejects_foreign_pairs():
    with pytest.raises(Exception):
        make_relation([0], "a", [(1, "a")])


@settings(max_examples=300)
@given(relations())
def test_formulations_agree(rel):
    family = family_of_relation(rel)
    subsets = [j for k in range(len(rel.left) + 1) for j in combinations(rel.left, k)]
    for j in subsets:
        assert image_rel(rel, j) == bind_union(family, j)
    by_exhaustion = all(len(j) <= len(image_rel(rel, j)) for j in subsets)
    assert solve_relation(rel).ok == check_hall_condition(family).satisfied == by_exhaustion
    assert solve_relation(rel, "augmenting").ok == by_exhaustion
