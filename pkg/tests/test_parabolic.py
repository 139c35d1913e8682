"""Parabolic subgroups, double cosets, representatives, factorization."""

import itertools
import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from dcbruhat.bruhat import leq
from dcbruhat.parabolic import (
    check_interval_property,
    coset_members,
    coset_of,
    decompose,
    factorize,
    linking_genset,
    max_representatives,
    min_representatives,
    parabolic_elements,
)
from dcbruhat.symgroup import (
    all_permutations,
    compose,
    full_genset,
    identity,
    left_ascents,
    left_descents,
    length,
    right_ascents,
    right_descents,
)

perm6 = st.permutations(tuple(range(1, 7))).map(tuple)
genset5 = st.frozensets(st.sampled_from(range(1, 6)))

S4 = list(all_permutations(4))
SUBSETS4 = [
    frozenset(s)
    for r in range(4)
    for s in itertools.combinations(range(1, 4), r)
]


def test_parabolic_subgroup_sizes():
    # block sizes multiply: {1,2} gives S3 x S1, {1,3} gives S2 x S2
    assert len(parabolic_elements(4, frozenset({1, 2}))) == 6
    assert len(parabolic_elements(4, frozenset({1, 3}))) == 4
    assert len(parabolic_elements(4, frozenset())) == 1
    assert len(parabolic_elements(4, full_genset(4))) == 24


def test_parabolic_subgroup_contains_identity_and_closes():
    gens = frozenset({1, 3})
    members = parabolic_elements(4, gens)
    assert identity(4) in members
    from dcbruhat.symgroup import mult_right

    for w in members:
        for i in gens:
            assert mult_right(w, i) in members


@pytest.mark.parametrize("I,J", [(frozenset({1}), frozenset({2})),
                                 (frozenset({1, 2}), frozenset({3})),
                                 (frozenset(), frozenset())])
def test_representatives_have_ascent_profiles(I, J):
    for m in min_representatives(4, I, J):
        assert I <= left_ascents(m)
        assert J <= right_ascents(m)
    for M in max_representatives(4, I, J):
        assert I <= left_descents(M)
        assert J <= right_descents(M)


def test_cosets_partition_the_group():
    I, J = frozenset({1, 2}), frozenset({3})
    seen = set()
    for m in min_representatives(4, I, J):
        block = coset_members(m, I, J)
        assert not seen & block
        seen |= block
    assert seen == set(S4)


@given(perm6, genset5, genset5)
def test_coset_of_brackets_its_member(w, I, J):
    lo, hi = coset_of(w, I, J)
    members = coset_members(w, I, J)
    assert lo in members and hi in members
    assert leq(lo, w) and leq(w, hi)
    assert min(length(x) for x in members) == length(lo)
    assert max(length(x) for x in members) == length(hi)


def test_coset_is_a_bruhat_interval():
    I, J = frozenset({1, 4}), frozenset({2, 3})
    group = list(all_permutations(5))
    for m in min_representatives(5, I, J):
        lo, hi = coset_of(m, I, J)
        members = coset_members(m, I, J)
        assert members == {x for x in group if leq(lo, x) and leq(x, hi)}


def test_interval_property_exhaustive_small():
    for I, J in itertools.product(SUBSETS4, repeat=2):
        assert check_interval_property(4, I, J)


def test_decompose_table_shape():
    full = full_genset(6)
    table = decompose(6, full - {2}, full - {2, 4})
    assert len(table.entries) == 6
    assert sum(e.size for e in table.entries) == 720
    tops = [e.max_rep for e in table.entries]
    assert tops == sorted(tops)
    assert (2, 1, 6, 5, 4, 3) in tops
    p = table.poset()
    assert p.bottom() == (2, 1, 6, 5, 4, 3)
    assert p.top() == (6, 5, 4, 3, 2, 1)


def test_decompose_order_matches_rep_order():
    I, J = frozenset({1, 2}), frozenset({1, 3})
    table = decompose(4, I, J)
    tops = [e.max_rep for e in table.entries]
    for a, b in itertools.product(range(len(tops)), repeat=2):
        if a == b:
            continue
        covered = (a, b) in table.order
        if covered:
            assert leq(tops[a], tops[b])
            assert not any(
                c not in (a, b) and leq(tops[a], tops[c]) and leq(tops[c], tops[b])
                for c in range(len(tops))
            )


def test_decompose_json_schema():
    full = full_genset(6)
    table = decompose(6, full - {2}, full - {2, 4})
    doc = json.loads(table.to_json())
    assert doc["degree"] == 6
    assert doc["I_complement"] == [2]
    assert doc["J_complement"] == [2, 4]
    assert len(doc["cosets"]) == 6
    first = doc["cosets"][0]
    assert first["min"] == [1, 2, 3, 4, 5, 6]
    assert first["max"] == [2, 1, 6, 5, 4, 3]
    assert first["size"] == 48
    assert all(len(pair) == 2 for pair in doc["covers"])


def test_decompose_table_text():
    table = decompose(4, frozenset({1}), frozenset({2}))
    text = table.to_table()
    assert "min" in text and "max" in text and "size" in text


@given(perm6, genset5, genset5)
def test_factorize_reconstructs_with_additive_length(x, I, J):
    u, w, v = factorize(x, I, J)
    assert compose(compose(u, w), v) == x
    assert length(u) + length(w) + length(v) == length(x)
    # w is the shortest element of its double coset
    assert w == coset_of(x, I, J)[0]
    assert u in parabolic_elements(6, I)
    assert v in parabolic_elements(6, J)
    assert linking_genset(w, I, J) <= right_ascents(u)


def test_factorize_exhaustive_one_pair():
    I, J = frozenset({2, 3}), frozenset({1, 3})
    for x in S4:
        u, w, v = factorize(x, I, J)
        assert compose(compose(u, w), v) == x
        assert length(u) + length(w) + length(v) == length(x)


def test_linking_genset_stays_inside_left_gens():
    I, J = frozenset({1, 2, 4}), frozenset({2, 3})
    for m in min_representatives(5, I, J):
        assert linking_genset(m, I, J) <= I
