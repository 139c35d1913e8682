"""Weight orbits: two orders on one orbit and when they coincide."""

import json
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from dcbruhat.symgroup import CapExceeded, compose, full_genset
from dcbruhat.weights import (
    apply_perm,
    check_dominant,
    dominance_leq,
    dominant_shape,
    format_weight,
    is_tight,
    orbit,
    orbit_poset,
    parse_weight,
    respects,
    rule_predicts_tight,
    stabilizer_genset,
    step_leq,
    tight_scan,
)

perm4 = st.permutations(tuple(range(1, 5))).map(tuple)


def W(*coords):
    return tuple(Fraction(c) for c in coords)


def test_parse_format_roundtrip():
    assert parse_weight("2,1,1,0") == W(2, 1, 1, 0)
    assert parse_weight("3/2,1/2") == (Fraction(3, 2), Fraction(1, 2))
    assert format_weight(W(2, 1, 0)) == "2,1,0"
    assert format_weight((Fraction(3, 2), Fraction(1, 2))) == "3/2,1/2"
    with pytest.raises(ValueError):
        parse_weight("")


def test_check_dominant_requires_weakly_decreasing():
    assert check_dominant(W(2, 1, 1, 0)) == W(2, 1, 1, 0)
    with pytest.raises(ValueError):
        check_dominant(W(1, 2, 0))


@given(perm4, perm4)
def test_apply_perm_is_a_left_action(u, v):
    mu = W(3, 1, 1, 0)
    assert apply_perm(compose(u, v), mu) == apply_perm(u, apply_perm(v, mu))


def test_apply_perm_places_coordinates():
    # coordinate i lands at position w(i)
    assert apply_perm((2, 1, 3), W(5, 7, 9)) == W(7, 5, 9)
    assert apply_perm((3, 1, 2), W(5, 7, 9)) == W(7, 9, 5)


def test_stabilizer_genset_reads_equal_neighbors():
    assert stabilizer_genset(W(2, 1, 1, 0)) == frozenset({2})
    assert stabilizer_genset(W(1, 1, 0, 0)) == frozenset({1, 3})
    assert stabilizer_genset(W(0, 0, 0)) == frozenset({1, 2})


def test_orbit_size_is_multinomial():
    assert len(orbit(W(2, 1, 1, 0))) == 12
    assert len(orbit(W(1, 1, 0, 0))) == 6
    assert len(orbit(W(3, 2, 1))) == 6
    assert len(orbit(W(0, 0))) == 1


def test_dominant_shape_counts_jumps():
    assert dominant_shape(4, frozenset({1, 3})) == W(2, 1, 1, 0)
    assert dominant_shape(4, frozenset()) == W(0, 0, 0, 0)
    assert dominant_shape(3, frozenset({1, 2})) == W(2, 1, 0)


@given(st.integers(min_value=2, max_value=6), st.frozensets(st.sampled_from(range(1, 6))))
def test_dominant_shape_stabilizer_complements_jc(degree, jc):
    jc = frozenset(i for i in jc if i < degree)
    theta = dominant_shape(degree, jc)
    assert stabilizer_genset(theta) == full_genset(degree) - jc


def test_respects_checks_weak_decrease():
    assert respects(W(2, 1, 1, 0), frozenset({1, 2}))
    assert not respects(W(1, 2, 1, 0), frozenset({1}))
    assert respects(W(1, 2, 1, 0), frozenset({2, 3}))


def test_single_box_orbit_is_a_chain():
    built = orbit_poset(W(1, 0, 0))
    assert built.poset.is_chain()
    assert built.poset.bottom() == W(1, 0, 0)
    assert built.poset.top() == W(0, 0, 1)
    assert step_leq(W(1, 0, 0), W(0, 1, 0))
    assert step_leq(W(0, 1, 0), W(0, 0, 1))
    assert not step_leq(W(0, 1, 0), W(1, 0, 0))


def test_orbit_poset_lists_theta_first():
    built = orbit_poset(W(2, 1, 0))
    assert built.members[0] == W(2, 1, 0)
    assert built.poset.bottom() == W(2, 1, 0)
    assert built.poset.top() == W(0, 1, 2)


def test_dominance_prefix_sums():
    assert dominance_leq(W(1, 1, 0), W(2, 0, 0))
    assert not dominance_leq(W(2, 0, 0), W(1, 1, 0))
    assert dominance_leq(W(1, 1, 0), W(1, 1, 0))
    with pytest.raises(ValueError):
        dominance_leq(W(1, 0), W(2, 0))


def test_step_order_refines_reversed_dominance():
    # going up in the orbit order always goes down in dominance
    built = orbit_poset(W(2, 1, 0))
    for a in built.members:
        for b in built.members:
            if step_leq(a, b):
                assert dominance_leq(b, a)


def test_restricted_orbit():
    built = orbit_poset(W(2, 1, 1, 0), frozenset({1, 3}))
    assert len(built.members) == 4
    for mu in built.members:
        assert respects(mu, frozenset({1, 3}))
    assert built.poset.bottom() == W(2, 1, 1, 0)
    assert built.poset.top() == W(1, 0, 2, 1)


def test_tightness_examples():
    ok, witness = is_tight(W(1, 0, 0))
    assert ok and witness is None
    ok, witness = is_tight(W(1, 1, 0, 0))
    assert ok
    ok, witness = is_tight(W(2, 1, 1, 0))
    assert not ok
    mu, nu = witness
    # dominance says comparable, the step order disagrees
    assert dominance_leq(nu, mu)
    assert not step_leq(nu, mu)


def test_rule_predicts_tight():
    assert rule_predicts_tight(3, frozenset({1, 2}))  # small rank, always tight
    assert rule_predicts_tight(5, frozenset({2, 3}))  # adjacent pair
    assert rule_predicts_tight(5, frozenset({4}))
    assert rule_predicts_tight(5, frozenset())
    assert not rule_predicts_tight(5, frozenset({1, 4}))
    assert not rule_predicts_tight(6, frozenset({1, 3, 5}))


def test_tight_scan_small_degrees():
    for degree in (3, 4, 5):
        report = tight_scan(degree)
        assert report.all_match
        assert len(report.rows) == 2 ** (degree - 1)
        for row in report.rows:
            assert row.tight == row.rule_tight
            if not row.tight:
                mu, nu = row.witness
                assert dominance_leq(nu, mu)
                assert not step_leq(nu, mu)


def test_tight_scan_json():
    report = tight_scan(3)
    doc = json.loads(report.to_json())
    assert doc["degree"] == 3
    assert doc["all_match"] is True
    assert len(doc["rows"]) == 4


def test_tight_scan_refuses_large_degrees():
    with pytest.raises(CapExceeded):
        tight_scan(7)
