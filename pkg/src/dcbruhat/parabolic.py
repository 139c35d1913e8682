"""
Parabolic subgroups and their double cosets in the symmetric group.

A parabolic subgroup is generated by a set of simple transpositions.
Each double coset under a pair of parabolics has a unique shortest and a
unique longest member; the shortest ones are the permutations whose
required ascent sets contain the generating indices, the longest ones
the permutations whose ascent sets avoid the complements.  The induced
order on cosets compares longest members, and ``check_interval_property``
confirms each coset is exactly a full interval of the group order.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache

from .bruhat import leq, order_tables
from .symgroup import (
    DEFAULT_DEGREE_CAP,
    CapExceeded,
    GenSet,
    Perm,
    all_permutations,
    check_genset,
    compose,
    format_genset,
    format_perm,
    identity,
    inverse,
    length,
    mult_left,
    mult_right,
    right_ascents,
)


@lru_cache(maxsize=256)
def parabolic_elements(degree: int, gens: GenSet) -> frozenset[Perm]:
    """All elements of the subgroup generated by the given simple indices."""
    check_genset(gens, degree)
    seen = {identity(degree)}
    frontier = [identity(degree)]
    while frontier:
        w = frontier.pop()
        for i in gens:
            x = mult_right(w, i)
            if x not in seen:
                seen.add(x)
                frontier.append(x)
    return frozenset(seen)


@lru_cache(maxsize=8)
def _descent_profiles(degree: int) -> tuple[tuple[Perm, int, int], ...]:
    """Per-permutation ascent bitmasks, for filtering representatives.

    Rows are ``(w, asc, asc_inv)`` where bit i-1 of ``asc`` is set when
    i is a right ascent of w, and ``asc_inv`` the same for the inverse.
    Position-side conditions on the left of w are value-side conditions
    on w itself, hence the inverse mask.
    """
    rows = []
    for w in all_permutations(degree):
        asc = 0
        for i in right_ascents(w):
            asc |= 1 << (i - 1)
        asc_inv = 0
        for i in right_ascents(inverse(w)):
            asc_inv |= 1 << (i - 1)
        rows.append((w, asc, asc_inv))
    return tuple(rows)


def _genset_mask(gens: GenSet) -> int:
    mask = 0
    for i in gens:
        mask |= 1 << (i - 1)
    return mask


def min_representatives(degree: int, left_gens: GenSet, right_gens: GenSet) -> list[Perm]:
    """Shortest double coset members: left and right ascents cover both gensets.

    Sorted lexicographically by one-line word.
    """
    check_genset(left_gens, degree)
    check_genset(right_gens, degree)
    lmask = _genset_mask(left_gens)
    rmask = _genset_mask(right_gens)
    return [
        w
        for w, asc, asc_inv in _descent_profiles(degree)
        if (asc_inv & lmask) == lmask and (asc & rmask) == rmask
    ]


def max_representatives(degree: int, left_gens: GenSet, right_gens: GenSet) -> list[Perm]:
    """Longest double coset members: all ascents lie inside the complements."""
    check_genset(left_gens, degree)
    check_genset(right_gens, degree)
    full = (1 << (degree - 1)) - 1
    lco = full & ~_genset_mask(left_gens)
    rco = full & ~_genset_mask(right_gens)
    return [
        w
        for w, asc, asc_inv in _descent_profiles(degree)
        if (asc_inv & ~lco) == 0 and (asc & ~rco) == 0
    ]


def _partition(degree: int, left_gens: GenSet, right_gens: GenSet) -> list[set[Perm]]:
    """Orbits of left/right multiplication by the two gensets."""
    blocks: list[set[Perm]] = []
    placed: set[Perm] = set()
    for w in all_permutations(degree):
        if w in placed:
            continue
        block = {w}
        frontier = [w]
        while frontier:
            x = frontier.pop()
            for i in left_gens:
                y = mult_left(x, i)
                if y not in block:
                    block.add(y)
                    frontier.append(y)
            for i in right_gens:
                y = mult_right(x, i)
                if y not in block:
                    block.add(y)
                    frontier.append(y)
        placed |= block
        blocks.append(block)
    return blocks


@dataclass(frozen=True)
class CosetEntry:
    """One double coset, keyed by its two distinguished members."""

    min_rep: Perm
    max_rep: Perm
    size: int


@dataclass(frozen=True)
class DoubleCosetTable:
    """The full decomposition for one (degree, left, right) triple.

    ``order`` holds the covering pairs of the coset order as index pairs
    into ``entries``; entries are sorted by max representative.
    """

    degree: int
    left_gens: GenSet
    right_gens: GenSet
    entries: tuple[CosetEntry, ...]
    order: tuple[tuple[int, int], ...]

    def poset(self):
        from .poset import FinitePoset

        return FinitePoset(
            [e.max_rep for e in self.entries],
            [(self.entries[i].max_rep, self.entries[j].max_rep) for i, j in self.order],
        )

    def to_json(self) -> str:
        full = frozenset(range(1, self.degree))
        return json.dumps(
            {
                "degree": self.degree,
                "I_complement": sorted(full - self.left_gens),
                "J_complement": sorted(full - self.right_gens),
                "cosets": [
                    {"min": list(e.min_rep), "max": list(e.max_rep), "size": e.size}
                    for e in self.entries
                ],
                "covers": sorted([i, j] for i, j in self.order),
            },
            sort_keys=True,
            indent=2,
        ) + "\n"

    def to_table(self) -> str:
        head = (
            f"degree {self.degree}  "
            f"I={format_genset(self.left_gens)}  "
            f"J={format_genset(self.right_gens)}  "
            f"cosets={len(self.entries)}"
        )
        lines = [head, ""]
        width = max(len(format_perm(e.min_rep)) for e in self.entries)
        lines.append(f"{'min'.ljust(width)}  {'max'.ljust(width)}  size")
        for e in self.entries:
            lines.append(
                f"{format_perm(e.min_rep).ljust(width)}  "
                f"{format_perm(e.max_rep).ljust(width)}  {e.size}"
            )
        return "\n".join(lines) + "\n"


def decompose(degree: int, left_gens: GenSet, right_gens: GenSet) -> DoubleCosetTable:
    """Split the group into double cosets and order them.

    The coset order compares longest members; its covering relation is
    computed from the comparability masks of the whole group.
    """
    if degree > DEFAULT_DEGREE_CAP:
        raise CapExceeded(f"degree {degree} exceeds the enumeration cap {DEFAULT_DEGREE_CAP}")
    left_gens = check_genset(left_gens, degree)
    right_gens = check_genset(right_gens, degree)
    blocks = _partition(degree, left_gens, right_gens)
    entries = []
    for block in blocks:
        longest = max(block, key=length)
        shortest = min(block, key=length)
        entries.append(CosetEntry(shortest, longest, len(block)))
    entries.sort(key=lambda e: e.max_rep)
    elements, index, up, down = order_tables(degree)
    ids = [index[e.max_rep] for e in entries]
    rep_mask = 0
    for i in ids:
        rep_mask |= 1 << i
    order = []
    for a in range(len(entries)):
        for b in range(len(entries)):
            if a == b or not (up[ids[a]] >> ids[b]) & 1:
                continue
            # b covers a in the coset order when no third coset's
            # longest member lies strictly between the two.
            strict = up[ids[a]] & down[ids[b]] & rep_mask
            strict &= ~(1 << ids[a]) & ~(1 << ids[b])
            if not strict:
                order.append((a, b))
    return DoubleCosetTable(degree, left_gens, right_gens, tuple(entries), tuple(order))


def coset_members(w: Perm, left_gens: GenSet, right_gens: GenSet) -> frozenset[Perm]:
    """All members of the double coset of w."""
    degree = len(w)
    left_gens = check_genset(left_gens, degree)
    right_gens = check_genset(right_gens, degree)
    block = {w}
    frontier = [w]
    while frontier:
        x = frontier.pop()
        for i in left_gens:
            y = mult_left(x, i)
            if y not in block:
                block.add(y)
                frontier.append(y)
        for i in right_gens:
            y = mult_right(x, i)
            if y not in block:
                block.add(y)
                frontier.append(y)
    return frozenset(block)


def coset_of(w: Perm, left_gens: GenSet, right_gens: GenSet) -> tuple[Perm, Perm]:
    """The shortest and longest members of the double coset of w."""
    block = coset_members(w, left_gens, right_gens)
    return min(block, key=length), max(block, key=length)


def linking_genset(w: Perm, left_gens: GenSet, right_gens: GenSet) -> GenSet:
    """Left indices that conjugate through the shortest member into the right side.

    For a shortest coset member w, index i belongs when the positions of
    the values i and i+1 in w are adjacent and their transposition index
    lies in the right genset.  These are exactly the left generators
    whose action on the coset can also be produced from the right.
    """
    wi = inverse(w)
    out = set()
    for i in left_gens:
        a, b = wi[i - 1], wi[i]
        if abs(a - b) == 1 and min(a, b) in right_gens:
            out.add(i)
    return frozenset(out)


def factorize(x: Perm, left_gens: GenSet, right_gens: GenSet) -> tuple[Perm, Perm, Perm]:
    """Split x as (left part) * (shortest coset member) * (right part).

    The three factors are unique once the left part is required to have
    every linking index as an ascent, and lengths add up.
    """
    degree = len(x)
    left_gens = check_genset(left_gens, degree)
    right_gens = check_genset(right_gens, degree)
    w, _ = coset_of(x, left_gens, right_gens)
    linking = linking_genset(w, left_gens, right_gens)
    w_inv = inverse(w)
    for u in sorted(parabolic_elements(degree, left_gens), key=lambda p: (length(p), p)):
        # Dropping a linking descent of u would shorten the triple, so
        # the canonical factorization forbids them.
        if not linking <= right_ascents(u):
            continue
        v = compose(w_inv, compose(inverse(u), x))
        if v not in parabolic_elements(degree, right_gens):
            continue
        if length(u) + length(w) + length(v) == length(x):
            return u, w, v
    raise AssertionError(f"no factorization found for {x}; this is a bug")


def check_interval_property(degree: int, left_gens: GenSet, right_gens: GenSet) -> bool:
    """Every double coset must equal the full order interval between its ends."""
    if degree > DEFAULT_DEGREE_CAP:
        raise CapExceeded(f"degree {degree} exceeds the enumeration cap {DEFAULT_DEGREE_CAP}")
    left_gens = check_genset(left_gens, degree)
    right_gens = check_genset(right_gens, degree)
    elements, index, up, down = order_tables(degree)
    for block in _partition(degree, left_gens, right_gens):
        lo = min(block, key=length)
        hi = max(block, key=length)
        between = up[index[lo]] & down[index[hi]]
        members = 0
        for w in block:
            members |= 1 << index[w]
        if between != members:
            return False
    return True
