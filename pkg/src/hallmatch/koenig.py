"""König's lemma for inverse systems of finite sets, up to a finite horizon.

An inverse system here is a list of levels ``X_0 .. X_H`` over one shared
universe with a single step map sending level ``n+1`` into level ``n``.
Chains pick one element per level, coherent under the step map.

True "very extendable" elements need preimages of every depth, which no
program can decide for an arbitrary lazy system; everything below is
relative to the explicit horizon ``H``.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Callable, Iterable, Mapping

from .errors import FpropViolation, HorizonExceeded
from .families import FiniteSet, IndexedFamily, canonical
from .solver import INDUCTIVE_LIMIT, SolveOutcome, solve


@dataclass(frozen=True)
class InverseSystem:
    levels: tuple
    step: Mapping

    @property
    def horizon(self) -> int:
        return len(self.levels) - 1


def make_inverse_system(levels: Iterable[Iterable], step: Mapping) -> InverseSystem:
    """Validate level compatibility: ``x in X[n+1]`` implies ``step[x] in X[n]``.

    A missing ``step[x]`` for such an x counts as a violation too.
    """
    levels = tuple(FiniteSet.of(level) for level in levels)
    if not levels:
        raise ValueError("an inverse system needs at least one level")
    for n in range(len(levels) - 1):
        for x in levels[n + 1]:
            if x not in step or step[x] not in levels[n]:
                raise FpropViolation(n, x)
    support = {x for level in levels[1:] for x in level}
    return InverseSystem(levels, {x: step[x] for x in canonical(support)})


def extendable_set(sys: InverseSystem, n: int, k: int) -> FiniteSet:
    """Image of ``X[n+k]`` in ``X[n]`` under the k-fold step map."""
    if n < 0 or k < 0 or n + k > sys.horizon:
        raise HorizonExceeded(n, k, sys.horizon)
    current = set(sys.levels[n + k])
    for _ in range(k):
        current = {sys.step[x] for x in current}
    return FiniteSet.of(current)


def prune_to_extendable(sys: InverseSystem) -> InverseSystem:
    """Keep only elements with preimage chains reaching the horizon."""
    H = sys.horizon
    pruned = [None] * (H + 1)
    pruned[H] = sys.levels[H]
    # the H-fold image, built one level at a time
    for n in range(H - 1, -1, -1):
        pruned[n] = FiniteSet.of(sys.step[x] for x in pruned[n + 1])
    return make_inverse_system(pruned, sys.step)


def is_surjective_system(sys: InverseSystem) -> bool:
    return all(
        FiniteSet.of(sys.step[x] for x in sys.levels[n + 1]) == sys.levels[n]
        for n in range(sys.horizon)
    )


@dataclass(frozen=True)
class Chain:
    entries: tuple


def check_chain(sys: InverseSystem, chain: Chain | Iterable) -> bool:
    """Membership in every level and coherence under the step map."""
    s = chain.entries if isinstance(chain, Chain) else tuple(chain)
    if len(s) != len(sys.levels):
        return False
    if any(s[n] not in sys.levels[n] for n in range(len(s))):
        return False
    return all(sys.step.get(s[n + 1]) == s[n] for n in range(len(s) - 1))


def find_chain(sys: InverseSystem) -> Chain | None:
    """Least element of the pruned bottom level, lifted by least preimages.

    After pruning every step between consecutive levels is onto, so each
    lift exists.  The result is the lexicographically least chain.
    """
    pruned = prune_to_extendable(sys)
    if any(not level for level in pruned.levels):
        return None
    entries = [pruned.levels[0].least()]
    for n in range(1, len(pruned.levels)):
        below = entries[-1]
        lift = next(y for y in pruned.levels[n] if pruned.step[y] == below)
        entries.append(lift)
    return Chain(tuple(entries))


@dataclass(frozen=True)
class LazyFamily:
    """A family indexed by 0, 1, 2, ... given by a deterministic rule."""

    rule: Callable[[int], Iterable]
    name: str = "custom"
    _cache: dict = field(default_factory=dict, init=False, repr=False, compare=False)

    def at(self, n: int) -> FiniteSet:
        if n not in self._cache:
            self._cache[n] = FiniteSet.of(self.rule(n))
        return self._cache[n]

    def prefix(self, length: int) -> IndexedFamily:
        sets = {i: self.at(i) for i in range(length)}
        universe = FiniteSet.of(e for s in sets.values() for e in s)
        return IndexedFamily(tuple(range(length)), sets, universe)


def _interval(arg: str | None) -> LazyFamily:
    width = 2 if arg in (None, "", "i,i+1") else int(arg)
    if width < 1:
        raise ValueError("interval width must be positive")
    return LazyFamily(lambda i: range(i, i + width), f"interval:{width}")


def _constant(arg: str | None) -> LazyFamily:
    value = "a" if not arg else arg
    return LazyFamily(lambda i: (value,), f"constant:{value}")


def _mod(arg: str | None) -> LazyFamily:
    m = 3 if not arg else int(arg)
    return LazyFamily(lambda i: (i % m, (i + 1) % m), f"mod:{m}")


LAZY_CATALOG: dict[str, Callable[[str | None], LazyFamily]] = {
    "interval": _interval,
    "constant": _constant,
    "mod": _mod,
}


def lazy_family(name: str) -> LazyFamily:
    """Catalog lookup by id, e.g. ``interval``, ``interval:3``, ``constant:a``, ``mod:4``.

    ``interval:w`` sends i to {i, ..., i+w-1} (``interval:i,i+1`` is accepted
    as the width-2 default); ``constant:a`` sends every i to {a};
    ``mod:m`` sends i to {i mod m, (i+1) mod m}.
    """
    m = re.fullmatch(r"([a-z]+)(?::(.*))?", name)
    if not m or m.group(1) not in LAZY_CATALOG:
        raise ValueError(f"unknown lazy family {name!r}; known: {', '.join(sorted(LAZY_CATALOG))}")
    return LAZY_CATALOG[m.group(1)](m.group(2))


def infinite_hall_prefix(fam: LazyFamily, n: int, horizon: int) -> SolveOutcome:
    """A matching on indices ``0..n-1`` that extends to one on ``0..horizon-1``.

    The horizon prefix is solved outright and the answer restricted, which is
    the image of the horizon's matching under the chain of restriction maps.
    Fails with the Hall witness when the horizon prefix is not solvable.
    """
    if n < 0 or horizon < n:
        raise ValueError(f"need 0 <= n <= horizon, got n={n}, horizon={horizon}")
    family = fam.prefix(horizon)
    method = "inductive" if horizon <= INDUCTIVE_LIMIT else "augmenting"
    outcome = solve(family, method)
    if not outcome.ok:
        return outcome
    return SolveOutcome(matching=outcome.matching.restrict(range(n)))
