import random
from itertools import combinations

import pytest
from hypothesis import given, settings

from hallmatch import (
    CapExceeded,
    FiniteSet,
    PreconditionViolated,
    bind_union,
    check_hall_condition,
    deficiency_witness,
    find_tight_set,
    make_family,
    restrict_family,
    solve_augmenting,
    solve_inductive,
    verify_transversal,
    verify_witness,
)
from hallmatch.oracles import (
    brute_force_transversal,
    enumerate_subset_violations,
    family_from_bits,
    random_family,
)
from hallmatch.solver import maximum_matching, solve

from strategies import families


def test_solve_inductive_examples(pigeonhole):
    assert solve_inductive(make_family([(0, "a")])).matching.as_dict() == {0: "a"}
    f = make_family([(0, "ab"), (1, "b")])
    # brute force: of the 2 total assignments with distinct values only (a, b) is valid
    assert brute_force_transversal(f).as_dict() == {0: "a", 1: "b"}
    assert solve_inductive(f).matching.as_dict() == {0: "a", 1: "b"}
    out = solve_inductive(pigeonhole)
    assert not out.ok and out.violation.witness.subset == (0, 1)


def test_solve_inductive_empty():
    out = solve_inductive(make_family([]))
    assert out.ok and len(out.matching) == 0


def test_case_one_commits_least_pair():
    # no tight proper subset: 0 takes a, then {1: {b,c}, 2: {c}} splits on tight {2}
    f = make_family([(0, "abc"), (1, "abc"), (2, "ac")])
    assert find_tight_set(f) is None
    assert solve_inductive(f).matching.as_dict() == {0: "a", 1: "b", 2: "c"}


def test_find_tight_set_examples():
    assert find_tight_set(make_family([(0, "ab"), (1, "bc")])) is None
    t = find_tight_set(make_family([(0, "ab"), (1, "b")]))
    assert t.subset == (1,) and t.image == FiniteSet(("b",))
    with pytest.raises(ValueError):
        find_tight_set(make_family([(0, "a")]))


def test_find_tight_set_precondition(pigeonhole):
    with pytest.raises(PreconditionViolated):
        find_tight_set(pigeonhole)
    # violation only at the full set still trips the check
    with pytest.raises(PreconditionViolated):
        find_tight_set(make_family([(0, "ab"), (1, "ab"), (2, "ab")]))


def test_restrict_family_examples():
    f = make_family([(0, "ab"), (1, "b")])
    assert restrict_family(f, f.indices, []) .sets == f.sets
    g = restrict_family(f, [0], ["b"])
    assert g.indices == (0,) and g[0].members == ("a",)
    assert len(restrict_family(f, [])) == 0


def test_solve_augmenting_examples(pigeonhole):
    assert len(solve_augmenting(make_family([]))) == 0
    f = make_family([(0, "ab"), (1, "b"), (2, "a")])
    assert brute_force_transversal(f) is None  # 3 indices, 2 values
    assert solve_augmenting(f) is None
    f = make_family([(0, "abc"), (1, "b"), (2, "a")])
    t = solve_augmenting(f)
    assert brute_force_transversal(f) is not None
    assert t is not None and verify_transversal(f, t)
    assert solve_augmenting(pigeonhole) is None


def test_deficiency_witness_examples(pigeonhole):
    assert deficiency_witness(make_family([(0, "ab"), (1, "bc")])) is None
    assert deficiency_witness(pigeonhole) == (0, 1)
    f = make_family([(0, "a"), (1, "ab"), (2, "b")])
    assert enumerate_subset_violations(f) == [(0, 1, 2)]
    assert deficiency_witness(f) == (0, 1, 2)


def test_cap():
    big = make_family([(i, [i]) for i in range(21)])
    with pytest.raises(CapExceeded):
        solve_inductive(big)
    assert solve(big, "augmenting").ok
    with pytest.raises(ValueError):
        solve(big, "greedy")


def _exhaustive_tight_certificate(f):
    n = len(f.indices)
    for k in range(1, n):
        for j in combinations(f.indices, k):
            assert len(j) < len(bind_union(f, j))


def _easy_direction(f, t):
    for k in range(len(f.indices) + 1):
        for j in combinations(f.indices, k):
            assert len({t[i] for i in j}) == len(j)
            assert len(j) <= len(bind_union(f, j))


@settings(max_examples=300)
@given(families())
def test_three_routes_agree(f):
    exists = not enumerate_subset_violations(f)
    ind = solve_inductive(f)
    aug = solve_augmenting(f)
    brute = brute_force_transversal(f)
    assert ind.ok == exists == (aug is not None) == (brute is not None)
    if ind.ok:
        assert verify_transversal(f, ind.matching)
        assert verify_transversal(f, aug)
        _easy_direction(f, ind.matching)
    else:
        assert verify_witness(f, ind.violation.witness.subset)
        w = deficiency_witness(f)
        assert w is not None and verify_witness(f, w)


@settings(max_examples=200)
@given(families())
def test_tight_set_certificate(f):
    if len(f) < 2 or not check_hall_condition(f).satisfied:
        return
    t = find_tight_set(f)
    if t is None:
        _exhaustive_tight_certificate(f)
    else:
        assert 0 < len(t.subset) < len(f)
        assert t.image == bind_union(f, t.subset) and len(t.image) == len(t.subset)


def test_all_3x3_relations():
    universe = ["a", "b", "c"]
    for bits in range(2**9):
        f = family_from_bits(bits, 3, universe)
        exists = not enumerate_subset_violations(f)
        out = solve_inductive(f)
        assert out.ok == exists, f
        if out.ok:
            assert verify_transversal(f, out.matching)


def test_seeded_random_corpus():
    rng = random.Random(2024)
    for k in range(500):
        f = random_family(k, rng.randint(0, 6), rng.randint(0, 6), rng.choice([0.2, 0.4, 0.6]))
        assert solve_inductive(f).ok == (not enumerate_subset_violations(f))


def test_maximum_matching_size_equals_deficiency():
    # König-Ore: max matching = n - max over J of (|J| - |union J|)
    for seed in range(200):
        f = random_family(seed, 6, 5, 0.3)
        n = len(f)
        deficit = max(
            len(j) - len(bind_union(f, j))
            for k in range(n + 1)
            for j in combinations(f.indices, k)
        )
        assert len(maximum_matching(f)) == n - deficit


def test_augmenting_deep_paths_iterative():
    # greedy seeds i -> i, so the last index needs one augmenting path through all others
    n = 3000
    f = make_family([*((i, [i, i + 1]) for i in range(n - 1)), (n - 1, [0])])
    t = solve_augmenting(f)
    assert t is not None and verify_transversal(f, t)
    assert t[n - 1] == 0 and t[n - 2] == n - 1


def test_maximal_deficiency_witness():
    star = make_family([("x", "c"), ("y", "c"), ("z", "c"), ("w", "cd")])
    assert enumerate_subset_violations(star)[0] == ("x", "y")
    assert deficiency_witness(star) in {("x", "y"), ("x", "z"), ("y", "z"), ("w", "x", "y"), ("w", "x", "z"), ("w", "y", "z")}
    full = deficiency_witness(star, maximal=True)
    # w escapes to d, so it is not reachable by alternating paths
    assert full == ("x", "y", "z")
    # deficiency equals the number of indices a maximum matching leaves out
    assert len(full) - len(bind_union(star, full)) == len(star) - len(maximum_matching(star))
