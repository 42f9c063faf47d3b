"""Naive exhaustive oracles and seeded instance generators.

Nothing here shares code paths with the solvers beyond the basic data
types; the point is to be obviously correct, not fast.
"""
from __future__ import annotations

import random
from itertools import combinations, permutations, product

from .errors import CapExceeded
from .families import IndexedFamily, Transversal, canonical, make_family
from .graphs import Bipartition, CarriedFunction, EdgePair, SimpleGraph, make_graph
from .koenig import Chain, InverseSystem

TRANSVERSAL_CAP = 8
SUBSET_CAP = 20
CHAIN_CAP = 10**5
CARRIED_CAP = 5


def brute_force_transversal(family: IndexedFamily) -> Transversal | None:
    """Lexicographically least transversal, trying every injective assignment."""
    n, m = len(family.indices), len(family.universe)
    if n > TRANSVERSAL_CAP or m > TRANSVERSAL_CAP:
        raise CapExceeded("brute_force_transversal", max(n, m), TRANSVERSAL_CAP)
    # permutations of the sorted universe come out in lex order
    for choice in permutations(family.universe.members, n):
        if all(e in family.sets[i] for i, e in zip(family.indices, choice)):
            return Transversal(dict(zip(family.indices, choice)))
    return None


def enumerate_subset_violations(family: IndexedFamily) -> list[tuple]:
    """Every index subset J with ``|J| > |union(J)|``, in (size, lex) order."""
    n = len(family.indices)
    if n > SUBSET_CAP:
        raise CapExceeded("enumerate_subset_violations", n, SUBSET_CAP)
    out = []
    for size in range(1, n + 1):
        for subset in combinations(family.indices, size):
            union: set = set()
            for i in subset:
                union |= family.sets[i].as_frozenset()
            if len(union) < size:
                out.append(subset)
    return out


def brute_force_chain(sys: InverseSystem) -> Chain | None:
    """Lexicographically least coherent chain over the product of all levels."""
    total = 1
    for level in sys.levels:
        total *= len(level)
    if total > CHAIN_CAP:
        raise CapExceeded("brute_force_chain", total, CHAIN_CAP)
    for entries in product(*(level.members for level in sys.levels)):
        if all(sys.step.get(entries[k + 1]) == entries[k] for k in range(len(entries) - 1)):
            return Chain(entries)
    return None


def brute_force_carried(g: SimpleGraph) -> CarriedFunction | None:
    """Lexicographically least carried function over all neighbor choices."""
    if len(g.vertices) > CARRIED_CAP:
        raise CapExceeded("brute_force_carried", len(g.vertices), CARRIED_CAP)
    options = [g.neighbors(v).members for v in g.vertices]
    for images in product(*options):
        edges = {EdgePair.of(v, w) for v, w in zip(g.vertices, images)}
        if len(edges) == len(g.vertices):
            return CarriedFunction(dict(zip(g.vertices, images)))
    return None


def random_family(seed: int, n_indices: int, universe_size: int, density: float) -> IndexedFamily:
    """Indices ``0..n-1``, elements ``0..m-1``; each pair included with prob ``density``."""
    rng = random.Random(seed)
    universe = range(universe_size)
    entries = [(i, [e for e in universe if rng.random() < density]) for i in range(n_indices)]
    return make_family(entries, universe)


def planted_family(seed: int, n_indices: int, universe_size: int, degree: int) -> IndexedFamily:
    """Hall-satisfied family: a hidden injective choice plus ``degree - 1`` random extras per index."""
    if universe_size < n_indices:
        raise ValueError("a planted transversal needs universe_size >= n_indices")
    rng = random.Random(seed)
    hidden = rng.sample(range(universe_size), n_indices)
    entries = []
    for i in range(n_indices):
        extras = [rng.randrange(universe_size) for _ in range(degree - 1)]
        entries.append((i, [hidden[i], *extras]))
    return make_family(entries, range(universe_size))


def random_bipartite(seed: int, n_left: int, n_right: int, density: float) -> tuple[SimpleGraph, Bipartition]:
    """Class 0 is ``l0..``, class 1 is ``r0..``; each cross pair is an edge with prob ``density``."""
    rng = random.Random(seed)
    left = [f"l{k}" for k in range(n_left)]
    right = [f"r{k}" for k in range(n_right)]
    edges = [(u, v) for u in left for v in right if rng.random() < density]
    colors = {**{u: 0 for u in left}, **{v: 1 for v in right}}
    return make_graph(left + right, edges), Bipartition(colors)


def all_subsets(items) -> list[tuple]:
    items = canonical(items)
    return [c for k in range(len(items) + 1) for c in combinations(items, k)]


def subset_union_ok(family: IndexedFamily) -> bool:
    """Hall condition by plain exhaustion (convenience wrapper)."""
    return not enumerate_subset_violations(family)


def family_from_bits(bits: int, n_indices: int, universe: list) -> IndexedFamily:
    """Decode an ``n_indices x len(universe)`` incidence bitmask, row-major."""
    m = len(universe)
    entries = [
        (i, [universe[j] for j in range(m) if bits >> (i * m + j) & 1]) for i in range(n_indices)
    ]
    return make_family(entries, universe)

