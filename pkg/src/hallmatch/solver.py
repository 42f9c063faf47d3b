"""Transversal construction.

Two independent routes:

* :func:`solve_inductive` follows the classical strong-induction proof of
  Hall's theorem.  Each step either finds a *tight* proper subset (one whose
  union has exactly its size) and splits the problem in two, or, when every
  proper subset has slack, commits the least index to its least element and
  removes that element everywhere.
* :func:`solve_augmenting` is Hopcroft-Karp maximum matching.  It backs the
  Hall check on large families and serves as an oracle for the inductive
  route.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from .errors import CapExceeded, PreconditionViolated
from .families import (
    EMPTY,
    EXHAUSTIVE_LIMIT,
    FiniteSet,
    HallReport,
    IndexedFamily,
    Transversal,
    _check_indices,
    check_hall_condition,
    element_masks,
)

INDUCTIVE_LIMIT = EXHAUSTIVE_LIMIT


@dataclass(frozen=True)
class SolveOutcome:
    """Exactly one of ``matching`` / ``violation`` is set."""

    matching: Transversal | None = None
    violation: HallReport | None = None

    def __post_init__(self):
        if (self.matching is None) == (self.violation is None):
            raise ValueError("exactly one of matching/violation must be set")
        if self.violation is not None and self.violation.satisfied:
            raise ValueError("violation branch needs a violated report")

    @property
    def ok(self) -> bool:
        return self.matching is not None


@dataclass(frozen=True)
class TightSet:
    subset: tuple
    image: FiniteSet


def restrict_family(family: IndexedFamily, keep: Iterable, forbid: Iterable = EMPTY) -> IndexedFamily:
    """Subfamily over ``keep`` with every element of ``forbid`` deleted."""
    keep = _check_indices(family, keep)
    forbid = forbid if isinstance(forbid, FiniteSet) else FiniteSet.of(forbid)
    sets = {i: family.sets[i] - forbid for i in keep}
    return IndexedFamily(keep, sets, family.universe - forbid)


def _scan_tight(masks: list[int], checked: bool) -> tuple | None:
    n = len(masks)
    found = None
    for size in range(1, n + 1):
        for combo in combinations(range(n), size):
            m = 0
            for p in combo:
                m |= masks[p]
            c = m.bit_count()
            if c < size:
                if checked:
                    raise PreconditionViolated(
                        f"Hall condition fails on index positions {combo}"
                    )
                continue
            if c == size and size < n and found is None:
                found = combo
                if not checked:
                    return found
    return found


def _tight_from_positions(family: IndexedFamily, combo: tuple) -> TightSet:
    subset = tuple(family.indices[p] for p in combo)
    image = FiniteSet.of(e for i in subset for e in family.sets[i])
    return TightSet(subset, image)


def find_tight_set(family: IndexedFamily) -> TightSet | None:
    """Least nonempty proper subset whose union has exactly its size.

    ``None`` certifies that every proper nonempty subset has strict slack.
    Requires at least two indices and a family satisfying the Hall condition
    (verified in the same pass; :class:`PreconditionViolated` otherwise).
    """
    if len(family) < 2:
        raise ValueError("find_tight_set needs at least two indices")
    combo = _scan_tight(element_masks(family), checked=True)
    return None if combo is None else _tight_from_positions(family, combo)


def solve_inductive(family: IndexedFamily) -> SolveOutcome:
    """Transversal by the strong-induction construction, or a Hall violation.

    Tie-breaking is fixed: least index, least element, least tight set in
    (size, lex) order.  Exponential in the number of indices, so families
    above :data:`INDUCTIVE_LIMIT` raise :class:`CapExceeded`.
    """
    if len(family) > INDUCTIVE_LIMIT:
        raise CapExceeded(
            "solve_inductive", len(family), INDUCTIVE_LIMIT, "use solve_augmenting instead"
        )
    report = check_hall_condition(family)
    if not report.satisfied:
        return SolveOutcome(violation=report)

    assignment: dict = {}
    # every subproblem on the stack satisfies the Hall condition (by the induction argument)
    stack = [family]
    while stack:
        sub = stack.pop()
        n = len(sub)
        if n == 0:
            continue
        if n == 1:
            (i,) = sub.indices
            if not sub.sets[i]:
                raise RuntimeError("Hall condition lost in recursion")
            assignment[i] = sub.sets[i].least()
            continue
        combo = _scan_tight(element_masks(sub), checked=False)
        if combo is None:
            a = sub.indices[0]
            if not sub.sets[a]:
                raise RuntimeError("Hall condition lost in recursion")
            b = sub.sets[a].least()
            assignment[a] = b
            stack.append(restrict_family(sub, sub.indices[1:], FiniteSet((b,))))
        else:
            tight = _tight_from_positions(sub, combo)
            inside = set(tight.subset)
            rest = [i for i in sub.indices if i not in inside]
            stack.append(restrict_family(sub, rest, tight.image))
            stack.append(restrict_family(sub, tight.subset))
    return SolveOutcome(matching=Transversal({i: assignment[i] for i in family.indices}))


def _adjacency(family: IndexedFamily):
    pos = {e: k for k, e in enumerate(family.universe)}
    return [[pos[e] for e in family.sets[i]] for i in family.indices]


def _hopcroft_karp(adj: list[list[int]], n_right: int) -> tuple[list[int], list[int]]:
    n = len(adj)
    match_l = [-1] * n
    match_r = [-1] * n_right
    for u in range(n):
        for v in adj[u]:
            if match_r[v] == -1:
                match_l[u] = v
                match_r[v] = u
                break

    while True:
        dist = [-1] * n
        queue = deque()
        for u in range(n):
            if match_l[u] == -1:
                dist[u] = 0
                queue.append(u)
        reachable_free = False
        while queue:
            u = queue.popleft()
            for v in adj[u]:
                w = match_r[v]
                if w == -1:
                    reachable_free = True
                elif dist[w] == -1:
                    dist[w] = dist[u] + 1
                    queue.append(w)
        if not reachable_free:
            return match_l, match_r

        cursor = [0] * n
        for s in range(n):
            if match_l[s] != -1:
                continue
            path = [s]
            via: list[int] = []
            while path:
                u = path[-1]
                if cursor[u] == len(adj[u]):
                    dist[u] = -1
                    path.pop()
                    if via:
                        via.pop()
                    continue
                v = adj[u][cursor[u]]
                cursor[u] += 1
                w = match_r[v]
                if w == -1:
                    for x, y in zip(path, via + [v]):
                        match_l[x] = y
                        match_r[y] = x
                    break
                if dist[w] == dist[u] + 1:
                    path.append(w)
                    via.append(v)


def maximum_matching(family: IndexedFamily) -> dict:
    """A maximum partial matching ``index -> element`` (Hopcroft-Karp)."""
    match_l, _ = _hopcroft_karp(_adjacency(family), len(family.universe))
    elements = family.universe.members
    return {i: elements[v] for i, v in zip(family.indices, match_l) if v != -1}


def solve_augmenting(family: IndexedFamily) -> Transversal | None:
    """A transversal if the maximum matching saturates every index, else None."""
    matching = maximum_matching(family)
    if len(matching) < len(family):
        return None
    return Transversal({i: matching[i] for i in family.indices})


def deficiency_witness(family: IndexedFamily, maximal: bool = False) -> tuple | None:
    """Index subset J with ``|J| > |union(J)|``, or None when a transversal exists.

    Starts from the least unmatched index of a maximum matching and collects
    everything reachable by alternating paths.  Every element reached is
    matched (otherwise the matching would not be maximum), and its partner is
    reached too, so the union of J is exactly one element short of J.

    With ``maximal=True`` the search starts from every unmatched index at
    once; the result then has the largest possible deficiency
    ``|J| - |union(J)|``, namely the number of unmatched indices.
    """
    adj = _adjacency(family)
    match_l, match_r = _hopcroft_karp(adj, len(family.universe))
    free = [u for u, v in enumerate(match_l) if v == -1]
    if not free:
        return None
    starts = free if maximal else free[:1]
    seen_l = set(starts)
    seen_r: set[int] = set()
    queue = deque(starts)
    while queue:
        u = queue.popleft()
        for v in adj[u]:
            if v in seen_r:
                continue
            seen_r.add(v)
            w = match_r[v]
            if w != -1 and w not in seen_l:
                seen_l.add(w)
                queue.append(w)
    return tuple(family.indices[p] for p in sorted(seen_l))


def solve(family: IndexedFamily, method: str = "inductive") -> SolveOutcome:
    """Dispatch on ``method`` (``inductive`` or ``augmenting``)."""
    if method == "inductive":
        return solve_inductive(family)
    if method == "augmenting":
        t = solve_augmenting(family)
        if t is not None:
            return SolveOutcome(matching=t)
        return SolveOutcome(violation=HallReport.violated_by(family, deficiency_witness(family)))
    raise ValueError(f"unknown method {method!r}; expected 'inductive' or 'augmenting'")
