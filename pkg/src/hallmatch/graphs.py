"""Simple graphs: unordered-pair edges, colorings, matchings and saturation.

Also hosts the two graph-shaped Hall applications: saturating one side of
a bipartition, and carried functions (every vertex picks a distinct
incident edge).
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, NamedTuple

from .errors import InvalidColoring, SelfLoop, UnknownVertex
from .families import (
    ACCEPT,
    Check,
    FiniteSet,
    HallReport,
    IndexedFamily,
    canonical,
    token_key,
)
from .relations import family_of_relation, make_relation, solve_relation
from .solver import deficiency_witness, solve


class EdgePair(NamedTuple):
    """Unordered vertex pair stored as ``(lo, hi)``."""

    lo: object
    hi: object

    @classmethod
    def of(cls, v, w) -> "EdgePair":
        kv, kw = token_key(v), token_key(w)
        if kv == kw:
            raise SelfLoop(v)
        return cls(v, w) if kv < kw else cls(w, v)

    def other(self, v):
        if v == self.lo:
            return self.hi
        if v == self.hi:
            return self.lo
        raise ValueError(f"{v!r} is not an endpoint of {tuple(self)!r}")


@dataclass(frozen=True)
class SimpleGraph:
    vertices: tuple
    edges: tuple

    def __post_init__(self):
        vs = set(self.vertices)
        for e in self.edges:
            for v in e:
                if v not in vs:
                    raise UnknownVertex(v)
        adj: dict = {v: set() for v in self.vertices}
        for lo, hi in self.edges:
            adj[lo].add(hi)
            adj[hi].add(lo)
        object.__setattr__(self, "_adj", {v: FiniteSet.of(ws) for v, ws in adj.items()})
        object.__setattr__(self, "_edge_set", frozenset(self.edges))

    def adjacent(self, v, w) -> bool:
        return w in self.neighbors(v)

    def neighbors(self, v) -> FiniteSet:
        try:
            return self._adj[v]
        except KeyError:
            raise UnknownVertex(v) from None

    def has_edge(self, e) -> bool:
        return e in self._edge_set

    def incidence(self, v) -> FiniteSet:
        """Edges containing ``v``."""
        return FiniteSet.of(EdgePair.of(v, w) for w in self.neighbors(v))


def make_graph(vertices: Iterable, edges: Iterable) -> SimpleGraph:
    vertices = canonical(vertices)
    known = set(vertices)
    pairs = set()
    for v, w in edges:
        for x in (v, w):
            if x not in known:
                raise UnknownVertex(x)
        pairs.add(EdgePair.of(v, w))
    return SimpleGraph(vertices, canonical(pairs))


def _check_vertices(g: SimpleGraph, subset: Iterable) -> tuple:
    subset = canonical(subset)
    for v in subset:
        g.neighbors(v)
    return subset


def neighbor_set(g: SimpleGraph, v) -> FiniteSet:
    return g.neighbors(v)


def degree(g: SimpleGraph, v) -> int:
    return len(g.neighbors(v))


def neighbor_set_image(g: SimpleGraph, subset: Iterable) -> FiniteSet:
    """Vertices adjacent to at least one member of ``subset``."""
    out: set = set()
    for v in _check_vertices(g, subset):
        out.update(g.neighbors(v))
    return FiniteSet.of(out)


@dataclass(frozen=True)
class Coloring:
    color: Mapping

    def color_set(self, c) -> FiniteSet:
        return FiniteSet.of(v for v, k in self.color.items() if k == c)


@dataclass(frozen=True)
class Bipartition(Coloring):
    def __post_init__(self):
        bad = [v for v, c in self.color.items() if c not in (0, 1) or isinstance(c, bool)]
        if bad:
            raise InvalidColoring(f"vertex {bad[0]!r} has color outside {{0, 1}}", bad[0])


def validate_coloring(g: SimpleGraph, c: Coloring | Mapping) -> Check:
    """Reject on the least monochromatic edge (or a vertex with no color)."""
    color = c.color if isinstance(c, Coloring) else c
    for v in g.vertices:
        if v not in color:
            return Check(False, "uncolored", v)
    for e in g.edges:
        if color[e.lo] == color[e.hi]:
            return Check(False, "monochromatic", e)
    return ACCEPT


@dataclass(frozen=True)
class GraphMatching:
    edges: tuple

    @classmethod
    def of(cls, edges: Iterable) -> "GraphMatching":
        return cls(canonical(EdgePair.of(*e) for e in edges))

    def covered(self) -> frozenset:
        return frozenset(v for e in self.edges for v in e)


def validate_matching(g: SimpleGraph, edges) -> Check:
    """Accept iff ``edges`` are graph edges and pairwise vertex-disjoint."""
    if isinstance(edges, GraphMatching):
        edges = edges.edges
    seen: dict = {}
    for e in canonical(EdgePair.of(*e) for e in edges):
        if not g.has_edge(e):
            return Check(False, "not_an_edge", e)
        for v in e:
            if v in seen:
                return Check(False, "shared_vertex", v)
            seen[v] = e
    return ACCEPT


def saturates(matching: GraphMatching | Iterable, subset: Iterable) -> Check:
    edges = matching.edges if isinstance(matching, GraphMatching) else tuple(matching)
    covered = {v for e in edges for v in e}
    for v in canonical(subset):
        if v not in covered:
            return Check(False, "unsaturated", v)
    return ACCEPT


def _max_deficiency(family: IndexedFamily) -> HallReport:
    # graph witnesses report every deficient vertex, not the smallest violating set
    return HallReport.violated_by(family, deficiency_witness(family, maximal=True))


@dataclass(frozen=True)
class GraphHallOutcome:
    """Either a matching saturating the class-0 vertices or a violating vertex set."""

    matching: GraphMatching | None = None
    violation: HallReport | None = None

    @property
    def ok(self) -> bool:
        return self.matching is not None


def bipartite_relation(g: SimpleGraph, b: Bipartition):
    left = b.color_set(0)
    right = b.color_set(1)
    pairs = []
    for e in g.edges:
        if b.color[e.lo] == 0:
            pairs.append((e.lo, e.hi))
        else:
            pairs.append((e.hi, e.lo))
    return make_relation(left, right, pairs)


def hall_bipartite(g: SimpleGraph, b: Bipartition | Mapping, method: str = "inductive") -> GraphHallOutcome:
    """Matching that saturates color class 0, or S in class 0 with ``|S| > |N(S)|``."""
    if not isinstance(b, Bipartition):
        b = Bipartition(dict(b))
    check = validate_coloring(g, b)
    if not check:
        raise InvalidColoring(f"invalid bipartition: {check.reason} at {check.at!r}", check.at)
    rel = bipartite_relation(g, b)
    outcome = solve_relation(rel, method)
    if outcome.ok:
        return GraphHallOutcome(matching=GraphMatching.of(outcome.matching.items()))
    # relation indices are the class-0 vertices themselves, so no translation is needed
    return GraphHallOutcome(violation=_max_deficiency(family_of_relation(rel)))


@dataclass(frozen=True)
class CarriedFunction:
    next: Mapping

    def edge_of(self, v) -> EdgePair:
        return EdgePair.of(v, self.next[v])


def check_carried(g: SimpleGraph, f: CarriedFunction | Mapping) -> Check:
    """Totality, adjacency, and injectivity of ``v -> {v, f(v)}``."""
    nxt = f.next if isinstance(f, CarriedFunction) else f
    owner: dict = {}
    for v in g.vertices:
        if v not in nxt:
            return Check(False, "missing", v)
        w = nxt[v]
        if w == v or not g.adjacent(v, w):
            return Check(False, "not_adjacent", v)
        e = EdgePair.of(v, w)
        if e in owner:
            return Check(False, "edge_reused", (owner[e], v))
        owner[e] = v
    return ACCEPT


def incidence_family(g: SimpleGraph) -> IndexedFamily:
    """Family ``v -> edges incident to v`` over the graph's edge set."""
    return IndexedFamily(g.vertices, {v: g.incidence(v) for v in g.vertices}, FiniteSet(g.edges))


@dataclass(frozen=True)
class CarriedOutcome:
    function: CarriedFunction | None = None
    violation: HallReport | None = None

    @property
    def ok(self) -> bool:
        return self.function is not None


def find_carried_function(g: SimpleGraph, method: str = "inductive") -> CarriedOutcome:
    """A carried function, or U with fewer incident edges than vertices."""
    family = incidence_family(g)
    outcome = solve(family, method)
    if not outcome.ok:
        return CarriedOutcome(violation=_max_deficiency(family))
    nxt = {v: edge.other(v) for v, edge in outcome.matching.items()}
    return CarriedOutcome(function=CarriedFunction(nxt))
