"""
Orbits of weight vectors under coordinate permutation, the step order on
an orbit, and the comparison against dominance.

A weight is a tuple of exact rationals whose length is the degree; the
group acts by moving the entry in position i to position w(i).  Starting
from a weakly decreasing ("dominant") vector theta, swapping any two
entries that sit in strictly descending order is one upward step; the
transitive closure is the orbit order, with theta its unique minimum.
Dominance runs the other way: higher in the step order means dominated.

The ``restriction`` variant keeps only orbit members that are sorted
along a given genset, and only steps whose result stays inside.

``is_tight`` asks whether the step order is exactly inverse dominance on
the orbit; ``tight_scan`` sweeps all staircase shapes for one degree and
compares against the closed-form rule.
"""
from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .poset import FinitePoset
from .symgroup import (
    CapExceeded,
    GenSet,
    Perm,
    check_genset,
    format_genset,
)

Weight = tuple[Fraction, ...]


def check_weight(values: Sequence) -> Weight:
    if not values:
        raise ValueError("empty weight")
    return tuple(Fraction(x) for x in values)


def check_dominant(values: Sequence) -> Weight:
    """Validate a weakly decreasing weight.

    >>> check_dominant([2, 1, 1, 0])
    (Fraction(2, 1), Fraction(1, 1), Fraction(1, 1), Fraction(0, 1))
    """
    theta = check_weight(values)
    if any(a < b for a, b in zip(theta, theta[1:])):
        raise ValueError(f"weight is not weakly decreasing: {theta}")
    return theta


def parse_weight(text: str) -> Weight:
    """
    >>> parse_weight("2,1,1,0")
    (Fraction(2, 1), Fraction(1, 1), Fraction(1, 1), Fraction(0, 1))
    """
    parts = [p.strip() for p in text.split(",")]
    if not parts or any(not p for p in parts):
        raise ValueError(f"bad weight text: {text!r}")
    try:
        return tuple(Fraction(p) for p in parts)
    except (ValueError, ZeroDivisionError):
        raise ValueError(f"bad weight text: {text!r}") from None


def format_weight(mu: Weight) -> str:
    return ",".join(str(x) for x in mu)


def apply_perm(w: Perm, mu: Weight) -> Weight:
    """The entry at position i moves to position w(i).

    >>> apply_perm((2, 3, 1), check_weight([5, 0, 7]))
    (Fraction(7, 1), Fraction(5, 1), Fraction(0, 1))
    """
    if len(w) != len(mu):
        raise ValueError(f"degree mismatch: {len(w)} vs {len(mu)}")
    out = [mu[0]] * len(mu)
    for i, x in enumerate(mu):
        out[w[i] - 1] = x
    return tuple(out)


def stabilizer_genset(theta: Sequence) -> GenSet:
    """Simple indices fixing a dominant weight: adjacent equal entries.

    >>> sorted(stabilizer_genset(check_dominant([1, 0, 0, 0])))
    [2, 3]
    """
    t = check_dominant(theta)
    return frozenset(i for i in range(1, len(t)) if t[i - 1] == t[i])


def orbit(theta: Sequence) -> frozenset[Weight]:
    """All distinct rearrangements."""
    return frozenset(itertools.permutations(check_weight(theta)))


def respects(mu: Weight, gens: Iterable[int]) -> bool:
    """Whether mu is weakly decreasing across every index in the genset."""
    return all(mu[i - 1] >= mu[i] for i in gens)


def dominant_shape(degree: int, jc: Iterable[int]) -> Weight:
    """The staircase whose entry i counts the given indices at or beyond i.

    Weakly decreasing, with descents exactly at the given indices, so
    its stabilizer genset is their complement.

    >>> [int(x) for x in dominant_shape(6, [2, 4])]
    [2, 2, 1, 1, 0, 0]
    """
    jcs = set(jc)
    if not all(1 <= j <= degree - 1 for j in jcs):
        raise ValueError(f"indices {sorted(jcs)!r} out of range for degree {degree}")
    return tuple(Fraction(sum(1 for j in jcs if j >= i)) for i in range(1, degree + 1))


def _step_targets(mu: Weight) -> list[Weight]:
    """One upward step: swap any strictly descending pair of entries."""
    out = []
    m = len(mu)
    for a in range(m):
        for b in range(a + 1, m):
            if mu[a] > mu[b]:
                nu = list(mu)
                nu[a], nu[b] = nu[b], nu[a]
                out.append(tuple(nu))
    return out


def _closure(theta: Weight, gens: GenSet | None) -> tuple[tuple[Weight, ...], dict[Weight, int], list[int]]:
    """Members of the (restricted) orbit and upward reachability masks.

    Bit j of ``up[i]`` is set when member j is reachable from member i
    by steps staying inside the member set.  Steps strictly drop in the
    lexicographic order, so the reverse-sorted member list is already
    topological and one backward pass closes the relation.
    """
    if gens is None:
        members = sorted(orbit(theta), reverse=True)
    else:
        members = sorted((mu for mu in orbit(theta) if respects(mu, gens)), reverse=True)
    index = {mu: i for i, mu in enumerate(members)}
    n = len(members)
    adj = [0] * n
    for mu in members:
        i = index[mu]
        for nu in _step_targets(mu):
            j = index.get(nu)
            if j is not None:
                adj[i] |= 1 << j
    up = [0] * n
    for i in range(n - 1, -1, -1):
        mask = 1 << i
        m = adj[i]
        while m:
            j = (m & -m).bit_length() - 1
            m &= m - 1
            mask |= up[j]
        up[i] = mask
    return tuple(members), index, up


def step_leq(nu: Weight, mu: Weight, restriction: GenSet | None = None) -> bool:
    """Whether mu is reachable upward from nu (nu below mu in the orbit order)."""
    if len(nu) != len(mu):
        raise ValueError(f"degree mismatch: {len(nu)} vs {len(mu)}")
    if sorted(nu) != sorted(mu):
        return False
    theta = tuple(sorted(mu, reverse=True))
    gens = None if restriction is None else check_genset(restriction, len(mu))
    members, index, up = _closure(theta, gens)
    if mu not in index or nu not in index:
        return False
    return bool(up[index[nu]] & (1 << index[mu]))


def dominance_leq(nu: Weight, mu: Weight) -> bool:
    """Prefix-sum comparison: every prefix of mu - nu is nonnegative.

    Only defined within one ambient space and total, hence the equal-sum
    requirement.

    >>> a = check_weight([2, 0]); b = check_weight([1, 1])
    >>> dominance_leq(b, a), dominance_leq(a, b)
    (True, False)
    """
    if len(nu) != len(mu):
        raise ValueError(f"degree mismatch: {len(nu)} vs {len(mu)}")
    if sum(nu) != sum(mu):
        raise ValueError(f"coordinate sums differ: {sum(nu)} vs {sum(mu)}")
    run = Fraction(0)
    for a, b in zip(mu, nu):
        run += a - b
        if run < 0:
            return False
    return True


@dataclass(frozen=True)
class OrbitPoset:
    """A (restricted) weight orbit together with its step order."""

    theta: Weight
    restriction: GenSet | None
    members: tuple[Weight, ...]
    poset: FinitePoset


def orbit_poset(theta: Sequence, restriction: GenSet | None = None) -> OrbitPoset:
    """Build the step order on the (restricted) orbit of a dominant weight."""
    t = check_dominant(theta)
    gens = None if restriction is None else check_genset(restriction, len(t))
    members, index, up = _closure(t, gens)

    def rel(a: Weight, b: Weight) -> bool:
        return bool(up[index[a]] & (1 << index[b]))

    return OrbitPoset(t, gens, members, FinitePoset.from_relation(members, rel))


def is_tight(theta: Sequence, restriction: GenSet | None = None) -> tuple[bool, tuple[Weight, Weight] | None]:
    """Does the step order equal inverse dominance on this orbit?

    Climbing a step always moves down in dominance; that direction is a
    standing invariant, not a tightness question, so its failure is an
    internal error.  The converse can genuinely fail; the first pair
    (mu, nu) with nu dominated by mu yet mu not below nu in the step
    order is returned as the witness.
    """
    t = check_dominant(theta)
    gens = None if restriction is None else check_genset(restriction, len(t))
    members, index, up = _closure(t, gens)
    for mu in members:
        for nu in members:
            climbs = bool(up[index[mu]] & (1 << index[nu]))
            dominated = dominance_leq(nu, mu)
            if climbs and not dominated:
                raise RuntimeError(
                    f"step order escaped dominance: {mu} climbs to {nu}; this is a bug"
                )
            if dominated and not climbs:
                return False, (mu, nu)
    return True, None


def rule_predicts_tight(degree: int, jc: Iterable[int]) -> bool:
    """Closed-form prediction for the staircase of a given descent set.

    Rank at most two is always tight, as are empty, singleton and
    adjacent-pair descent sets.
    """
    jcs = sorted(set(jc))
    if degree <= 3:
        return True
    if len(jcs) <= 1:
        return True
    return len(jcs) == 2 and jcs[1] == jcs[0] + 1


@dataclass(frozen=True)
class TightRow:
    j_complement: tuple[int, ...]
    theta: Weight
    orbit_size: int
    tight: bool
    rule_tight: bool
    witness: tuple[Weight, Weight] | None

    @property
    def match(self) -> bool:
        return self.tight == self.rule_tight


@dataclass(frozen=True)
class TightScanReport:
    degree: int
    rows: tuple[TightRow, ...]

    @property
    def all_match(self) -> bool:
        return all(r.match for r in self.rows)

    def to_json(self) -> str:
        return json.dumps(
            {
                "degree": self.degree,
                "all_match": self.all_match,
                "rows": [
                    {
                        "J_complement": list(r.j_complement),
                        "theta": format_weight(r.theta),
                        "orbit_size": r.orbit_size,
                        "tight": r.tight,
                        "rule_tight": r.rule_tight,
                        "witness": None
                        if r.witness is None
                        else [format_weight(r.witness[0]), format_weight(r.witness[1])],
                    }
                    for r in self.rows
                ],
            },
            sort_keys=True,
            indent=2,
        ) + "\n"

    def to_table(self) -> str:
        lines = [
            f"degree {self.degree}  shapes={len(self.rows)}  all_match={self.all_match}",
            "",
            "J-complement    theta           orbit  tight  rule   witness (dominated, unreachable)",
        ]
        for r in self.rows:
            wit = (
                "-"
                if r.witness is None
                else f"{format_weight(r.witness[1])} under {format_weight(r.witness[0])}"
            )
            lines.append(
                f"{format_genset(r.j_complement):<14}  {format_weight(r.theta):<14}  "
                f"{r.orbit_size:>5}  {str(r.tight):<5}  {str(r.rule_tight):<5}  {wit}"
            )
        return "\n".join(lines) + "\n"


def tight_scan(degree: int, cap: int = 6) -> TightScanReport:
    """Compare tightness with the rule for every descent pattern at one degree.

    One staircase per descent set; the busiest orbit is the whole group,
    so the degree is capped harder than elsewhere.
    """
    if degree > cap:
        raise CapExceeded(f"degree {degree} exceeds the tight-scan cap {cap}")
    if degree < 1:
        raise ValueError(f"degree must be at least 1, got {degree}")
    rows = []
    indices = range(1, degree)
    for r in range(0, degree):
        for jc in itertools.combinations(indices, r):
            theta = dominant_shape(degree, jc)
            tight, witness = is_tight(theta)
            rows.append(
                TightRow(
                    j_complement=jc,
                    theta=theta,
                    orbit_size=len(orbit(theta)),
                    tight=tight,
                    rule_tight=rule_predicts_tight(degree, jc),
                    witness=witness,
                )
            )
    return TightScanReport(degree, tuple(rows))


if __name__ == "__main__":
    import doctest

    doctest.testmod()
