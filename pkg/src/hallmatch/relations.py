"""Hall's theorem for a finite relation between two declared universes."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import UnknownElement, UnknownIndex
from .families import FiniteSet, IndexedFamily, canonical, token_key
from .solver import SolveOutcome, solve


@dataclass(frozen=True)
class FiniteRelation:
    left: tuple
    right: tuple
    pairs: tuple

    def __post_init__(self):
        lefts, rights = set(self.left), set(self.right)
        for a, b in self.pairs:
            if a not in lefts:
                raise UnknownIndex(a)
            if b not in rights:
                raise UnknownElement(b, a)

    def related(self, a, b) -> bool:
        return (a, b) in set(self.pairs)


def make_relation(left: Iterable, right: Iterable, pairs: Iterable) -> FiniteRelation:
    pairs = sorted({(a, b) for a, b in pairs}, key=lambda p: (token_key(p[0]), token_key(p[1])))
    return FiniteRelation(canonical(left), canonical(right), tuple(pairs))


def image_rel(rel: FiniteRelation, subset: Iterable) -> FiniteSet:
    """Elements of the right universe related to some member of ``subset``."""
    subset = set(subset)
    lefts = set(rel.left)
    for a in subset:
        if a not in lefts:
            raise UnknownIndex(a)
    return FiniteSet.of(b for a, b in rel.pairs if a in subset)


def family_of_relation(rel: FiniteRelation) -> IndexedFamily:
    """The family ``a -> image_rel(rel, {a})`` over the left universe."""
    grouped: dict = {a: [] for a in rel.left}
    for a, b in rel.pairs:
        grouped[a].append(b)
    sets = {a: FiniteSet.of(bs) for a, bs in grouped.items()}
    return IndexedFamily(rel.left, sets, FiniteSet(rel.right))


def solve_relation(rel: FiniteRelation, method: str = "inductive") -> SolveOutcome:
    """An injective ``left -> right`` map respecting ``rel``, or a violating subset."""
    return solve(family_of_relation(rel), method)
