from itertools import combinations, product

import pytest
from hypothesis import given, settings

from hallmatch import (
    Bipartition,
    EdgePair,
    FiniteSet,
    GraphMatching,
    InvalidColoring,
    SelfLoop,
    UnknownVertex,
    bind_union,
    find_carried_function,
    hall_bipartite,
    image_rel,
    make_graph,
    neighbor_set,
    neighbor_set_image,
    saturates,
    validate_coloring,
    validate_matching,
)
from hallmatch.graphs import bipartite_relation, check_carried, degree, incidence_family
from hallmatch.oracles import brute_force_carried, random_bipartite

from strategies import graphs

K3 = make_graph("uvw", [("u", "v"), ("v", "w"), ("u", "w")])
PATH = make_graph("uvw", [("u", "v"), ("v", "w")])


def cycle(n):
    vs = [f"c{k}" for k in range(n)]
    return make_graph(vs, [(vs[k], vs[(k + 1) % n]) for k in range(n)])


def test_edge_pair_symmetry():
    assert EdgePair.of("v", "u") == EdgePair.of("u", "v") == ("u", "v")
    with pytest.raises(SelfLoop):
        EdgePair.of("u", "u")


def test_make_graph_examples():
    g = make_graph("uv", [("u", "v"), ("v", "u")])
    assert g.edges == (EdgePair("u", "v"),)
    with pytest.raises(SelfLoop):
        make_graph("u", [("u", "u")])
    with pytest.raises(UnknownVertex):
        make_graph("u", [("u", "z")])
    assert len(K3.edges) == 3


def test_neighbor_set_examples():
    assert neighbor_set(make_graph("u", []), "u") == FiniteSet()
    assert neighbor_set(K3, "u").members == ("v", "w")
    assert neighbor_set(PATH, "v").members == ("u", "w")
    assert degree(PATH, "v") == 2
    with pytest.raises(UnknownVertex):
        neighbor_set(K3, "z")


def test_neighbor_set_image_examples():
    assert neighbor_set_image(K3, []) == FiniteSet()
    assert neighbor_set_image(K3, ["u"]).members == ("v", "w")
    assert neighbor_set_image(PATH, ["u", "w"]).members == ("v",)


def test_validate_coloring_examples():
    assert validate_coloring(make_graph("uv", []), {"u": 0, "v": 0})
    bad = validate_coloring(K3, {"u": 0, "v": 1, "w": 0})
    assert not bad and bad.at == EdgePair("u", "w")
    assert validate_coloring(PATH, {"u": 0, "v": 1, "w": 0})


def test_validate_matching_examples():
    assert validate_matching(PATH, [])
    r = validate_matching(PATH, [("u", "v"), ("v", "w")])
    assert not r and r.at == "v"
    c4 = cycle(4)
    assert validate_matching(c4, [("c0", "c1"), ("c2", "c3")])
    assert validate_matching(PATH, [("u", "w")]).reason == "not_an_edge"


def test_saturates_examples():
    assert saturates(GraphMatching(()), [])
    assert saturates(GraphMatching.of([("u", "v")]), ["u", "v"])
    r = saturates(GraphMatching(()), ["u"])
    assert not r and r.at == "u"


def test_hall_bipartite_examples():
    out = hall_bipartite(make_graph([], []), Bipartition({}))
    assert out.ok and out.matching.edges == ()
    out = hall_bipartite(make_graph("uv", [("u", "v")]), Bipartition({"u": 0, "v": 1}))
    assert out.matching.edges == (EdgePair("u", "v"),)
    star = make_graph(["c", "x", "y", "z"], [("c", "x"), ("c", "y"), ("c", "z")])
    out = hall_bipartite(star, {"c": 1, "x": 0, "y": 0, "z": 0})
    assert not out.ok
    # {x, y} already violates; the reported witness is the full deficient class
    assert out.violation.witness.subset == ("x", "y", "z")
    assert out.violation.witness.union_cardinality == 1
    assert neighbor_set_image(star, out.violation.witness.subset).members == ("c",)


def test_hall_bipartite_rejects_bad_coloring():
    with pytest.raises(InvalidColoring):
        hall_bipartite(K3, {"u": 0, "v": 1, "w": 1})
    with pytest.raises(InvalidColoring):
        Bipartition({"u": 2})


def test_carried_examples():
    out = find_carried_function(make_graph([], []))
    assert out.ok and dict(out.function.next) == {}
    edge = make_graph("uv", [("u", "v")])
    # the only adjacency-respecting map is u->v, v->u, which reuses the edge
    assert brute_force_carried(edge) is None
    out = find_carried_function(edge)
    assert not out.ok and out.violation.witness.subset == ("u", "v")
    assert out.violation.witness.union_cardinality == 1
    assert brute_force_carried(K3) is not None
    out = find_carried_function(K3)
    assert out.ok and check_carried(K3, out.function)


@pytest.mark.parametrize("n", range(3, 9))
def test_cycles_carry_rotation(n):
    g = cycle(n)
    rotation = {f"c{k}": f"c{(k + 1) % n}" for k in range(n)}
    assert check_carried(g, rotation)
    if n <= 5:
        assert brute_force_carried(g) is not None
    out = find_carried_function(g)
    assert out.ok and check_carried(g, out.function)


@settings(max_examples=200)
@given(graphs())
def test_neighbor_image_cross_module(g):
    # vertex-indexed relation v ~ w iff adjacent
    from hallmatch import make_relation

    rel = make_relation(g.vertices, g.vertices, [(v, w) for v in g.vertices for w in g.neighbors(v)])
    inc = incidence_family(g)
    for k in range(len(g.vertices) + 1):
        for s in combinations(g.vertices, k):
            image = neighbor_set_image(g, s)
            assert image == image_rel(rel, s)
            assert image == FiniteSet.of(e.other(x) for e in bind_union(inc, s) for x in e if x in s)


@settings(max_examples=200)
@given(graphs(max_vertices=5))
def test_carried_matches_brute_force(g):
    out = find_carried_function(g)
    assert out.ok == (brute_force_carried(g) is not None)
    if out.ok:
        nxt = out.function.next
        assert all(g.adjacent(v, nxt[v]) for v in g.vertices)
        assert len({EdgePair.of(v, nxt[v]) for v in g.vertices}) == len(g.vertices)
        assert all(nxt[nxt[v]] != v for v in g.vertices)
    else:
        u = out.violation.witness.subset
        assert len(u) > len({e for v in u for e in g.incidence(v)})


def test_bipartite_exhaustive_small():
    for n0, n1 in product(range(4), repeat=2):
        for seed in range(20):
            g, b = random_bipartite(seed, n0, n1, 0.5)
            out = hall_bipartite(g, b)
            class0 = b.color_set(0)
            by_exhaustion = all(
                len(s) <= len(neighbor_set_image(g, s))
                for k in range(len(class0) + 1)
                for s in combinations(class0, k)
            )
            assert out.ok == by_exhaustion
            if out.ok:
                assert validate_matching(g, out.matching) and saturates(out.matching, class0)
            else:
                s = out.violation.witness.subset
                assert set(s) <= set(class0) and len(s) > len(neighbor_set_image(g, s))
            assert bipartite_relation(g, b).left == class0.members
