"""Finite sets, indexed families, transversals and the Hall condition.

Tokens (indices and elements) are opaque: ints, strings, or tuples of
tokens.  They are totally ordered by :func:`token_key`, which lets every
set carry one canonical sorted representation, so structural equality is
set equality.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from itertools import combinations
from typing import Any, Hashable, Iterable, Iterator, Mapping

from .errors import CapExceeded, DuplicateIndex, UnknownElement, UnknownIndex

Token = Hashable

#: families with at most this many indices are checked by full subset enumeration
EXHAUSTIVE_LIMIT = 20


def token_key(token: Token) -> tuple:
    """Sort key giving a total order over mixed int/str/tuple tokens."""
    if isinstance(token, bool):
        raise TypeError("booleans are not valid tokens")
    if isinstance(token, int):
        return (0, token)
    if isinstance(token, str):
        return (1, token)
    if isinstance(token, tuple):
        return (2, tuple(token_key(t) for t in token))
    raise TypeError(f"unsupported token type: {type(token).__name__}")


def canonical(tokens: Iterable[Token]) -> tuple:
    return tuple(sorted(set(tokens), key=token_key))


@dataclass(frozen=True)
class FiniteSet:
    """Immutable finite set stored as a strictly increasing tuple."""

    members: tuple = ()
    _lookup: frozenset = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        keys = [token_key(m) for m in self.members]
        if any(a >= b for a, b in zip(keys, keys[1:])):
            raise ValueError("FiniteSet members must be strictly increasing; use FiniteSet.of")
        object.__setattr__(self, "_lookup", frozenset(self.members))

    @classmethod
    def of(cls, items: Iterable[Token] = ()) -> "FiniteSet":
        return cls(canonical(items))

    def __iter__(self) -> Iterator:
        return iter(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, item) -> bool:
        return item in self._lookup

    def __or__(self, other: Iterable) -> "FiniteSet":
        return FiniteSet.of(self._lookup.union(other))

    def __sub__(self, other: Iterable) -> "FiniteSet":
        drop = other._lookup if isinstance(other, FiniteSet) else frozenset(other)
        return FiniteSet(tuple(m for m in self.members if m not in drop))

    def __and__(self, other: Iterable) -> "FiniteSet":
        keep = other._lookup if isinstance(other, FiniteSet) else frozenset(other)
        return FiniteSet(tuple(m for m in self.members if m in keep))

    def __le__(self, other: "FiniteSet") -> bool:
        return self._lookup <= other._lookup

    def least(self):
        return self.members[0]

    def as_frozenset(self) -> frozenset:
        return self._lookup


EMPTY = FiniteSet()


@dataclass(frozen=True)
class IndexedFamily:
    """A finite map from indices to finite subsets of a declared universe."""

    indices: tuple
    sets: Mapping[Token, FiniteSet]
    universe: FiniteSet

    def __post_init__(self):
        if len(set(self.indices)) != len(self.indices) or set(self.sets) != set(self.indices):
            raise ValueError("sets must have exactly one entry per index")
        for i in self.indices:
            for e in self.sets[i]:
                if e not in self.universe:
                    raise UnknownElement(e, i)

    def __len__(self) -> int:
        return len(self.indices)

    def __getitem__(self, index) -> FiniteSet:
        try:
            return self.sets[index]
        except KeyError:
            raise UnknownIndex(index) from None

    def items(self):
        return ((i, self.sets[i]) for i in self.indices)

    def to_dict(self) -> dict:
        return {i: list(s) for i, s in self.items()}


def make_family(entries, universe: Iterable[Token] | None = None) -> IndexedFamily:
    """Build a canonical family from ``(index, elements)`` pairs or a mapping.

    Elements within one entry are deduplicated.  When ``universe`` is given,
    elements outside it raise :class:`UnknownElement`; otherwise the
    universe is the union of all entries.
    """
    if isinstance(entries, Mapping):
        entries = entries.items()
    sets: dict = {}
    for index, elements in entries:
        token_key(index)
        if index in sets:
            raise DuplicateIndex(index)
        sets[index] = FiniteSet.of(elements)
    if universe is None:
        universe_set = FiniteSet.of(e for s in sets.values() for e in s)
    else:
        universe_set = FiniteSet.of(universe)
    indices = canonical(sets)
    return IndexedFamily(indices, {i: sets[i] for i in indices}, universe_set)


def _check_indices(family: IndexedFamily, subset: Iterable[Token]) -> tuple:
    subset = canonical(subset)
    for i in subset:
        if i not in family.sets:
            raise UnknownIndex(i)
    return subset


def bind_union(family: IndexedFamily, subset: Iterable[Token]) -> FiniteSet:
    """Union of the sets indexed by ``subset``."""
    subset = _check_indices(family, subset)
    out: set = set()
    for i in subset:
        out.update(family.sets[i])
    return FiniteSet.of(out)


class Verdict(enum.Enum):
    SATISFIED = "satisfied"
    VIOLATED = "violated"


@dataclass(frozen=True)
class Witness:
    subset: tuple
    union_cardinality: int
    subset_cardinality: int


@dataclass(frozen=True)
class HallReport:
    verdict: Verdict
    witness: Witness | None = None

    def __post_init__(self):
        if self.verdict is Verdict.VIOLATED:
            w = self.witness
            if w is None or w.subset_cardinality <= w.union_cardinality:
                raise ValueError("a violated report needs a witness with |J| > |union|")
        elif self.witness is not None:
            raise ValueError("a satisfied report carries no witness")

    @property
    def satisfied(self) -> bool:
        return self.verdict is Verdict.SATISFIED

    @classmethod
    def violated_by(cls, family: IndexedFamily, subset: Iterable[Token]) -> "HallReport":
        subset = canonical(subset)
        union = bind_union(family, subset)
        return cls(Verdict.VIOLATED, Witness(subset, len(union), len(subset)))


SATISFIED = HallReport(Verdict.SATISFIED)


def element_masks(family: IndexedFamily) -> list[int]:
    """Each index's set as a bitmask over the family's universe, in index order."""
    bit = {e: 1 << k for k, e in enumerate(family.universe)}
    masks = []
    for i in family.indices:
        m = 0
        for e in family.sets[i]:
            m |= bit[e]
        masks.append(m)
    return masks


def _least_violation(masks: list[int]) -> tuple | None:
    # (size, lex) order, so the first hit is the tie-broken witness
    n = len(masks)
    for size in range(1, n + 1):
        for combo in combinations(range(n), size):
            m = 0
            for p in combo:
                m |= masks[p]
            if m.bit_count() < size:
                return combo
    return None


def check_hall_condition(family: IndexedFamily) -> HallReport:
    """Decide whether every index subset J has ``|J| <= |bind_union(J)|``.

    Up to :data:`EXHAUSTIVE_LIMIT` indices every subset is enumerated and a
    violated report carries the least witness by (size, lex) order.  Larger
    families go through the alternating-path deficiency search instead, whose
    witness is valid but not necessarily minimal.
    """
    if len(family) <= EXHAUSTIVE_LIMIT:
        combo = _least_violation(element_masks(family))
        if combo is None:
            return SATISFIED
        return HallReport.violated_by(family, (family.indices[p] for p in combo))

    from .solver import deficiency_witness

    subset = deficiency_witness(family)
    if subset is None:
        return SATISFIED
    return HallReport.violated_by(family, subset)


def verify_witness(family: IndexedFamily, subset: Iterable[Token]) -> bool:
    subset = canonical(subset)
    try:
        return len(subset) > len(bind_union(family, subset))
    except UnknownIndex:
        return False


@dataclass(frozen=True)
class Check:
    """Outcome of a validator: truthy on acceptance, else names what failed."""

    ok: bool
    reason: str = ""
    at: Any = None

    def __bool__(self) -> bool:
        return self.ok


ACCEPT = Check(True)


@dataclass(frozen=True)
class Transversal:
    """An injective choice ``index -> element`` drawn from each index's set."""

    assignment: Mapping[Token, Token]

    def __getitem__(self, index):
        return self.assignment[index]

    def __len__(self) -> int:
        return len(self.assignment)

    def items(self):
        return self.assignment.items()

    def restrict(self, indices: Iterable[Token]) -> "Transversal":
        return Transversal({i: self.assignment[i] for i in indices})

    def as_dict(self) -> dict:
        return dict(self.assignment)


def verify_transversal(family: IndexedFamily, candidate: Mapping) -> Check:
    """Check totality, membership and injectivity, reporting the first failure.

    Indices are visited in family order; a collision is reported as the pair
    ``(earlier, later)``.
    """
    if isinstance(candidate, Transversal):
        candidate = candidate.assignment
    owner: dict = {}
    for i in family.indices:
        if i not in candidate:
            return Check(False, "missing", i)
        e = candidate[i]
        if e not in family.sets[i]:
            return Check(False, "not_member", i)
        if e in owner:
            return Check(False, "collision", (owner[e], i))
        owner[e] = i
    extra = [i for i in candidate if i not in family.sets]
    if extra:
        return Check(False, "unknown_index", canonical(extra)[0])
    return ACCEPT


def ensure_within(size: int, cap: int, what: str, hint: str = "") -> None:
    if size > cap:
        raise CapExceeded(what, size, cap, hint)
