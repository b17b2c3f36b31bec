"""Posets: construction, relation queries, and ideal enumeration."""

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from conftest import random_cover_pairs
from posetblock import (
    CapacityError,
    DomainError,
    InvalidPosetError,
    Poset,
    enumerate_ideals,
    ideal_closure,
)


class TestConstruction:
    def test_rejects_nonpositive_size(self):
        with pytest.raises(DomainError):
            Poset.from_covers(0, [])

    def test_rejects_label_out_of_range(self):
        with pytest.raises(DomainError):
            Poset.from_covers(3, [(1, 4)])
        with pytest.raises(DomainError):
            Poset.from_covers(3, [(0, 2)])

    def test_rejects_self_loop(self):
        with pytest.raises(InvalidPosetError):
            Poset.from_covers(3, [(2, 2)])

    def test_rejects_two_cycle(self):
        with pytest.raises(InvalidPosetError):
            Poset.from_covers(2, [(1, 2), (2, 1)])

    def test_rejects_long_cycle(self):
        with pytest.raises(InvalidPosetError):
            Poset.from_covers(4, [(1, 2), (2, 3), (3, 4), (4, 1)])

    def test_transitive_closure(self):
        p = Poset.from_covers(4, [(1, 2), (2, 3)])
        assert p.leq(1, 3)
        assert p.leq(1, 1)
        assert not p.leq(3, 1)
        assert not p.leq(4, 1) and not p.leq(1, 4)

    def test_equality_ignores_cover_presentation(self):
        a = Poset.from_covers(3, [(1, 2), (2, 3)])
        b = Poset.from_covers(3, [(1, 2), (2, 3), (1, 3)])
        assert a == b
        assert hash(a) == hash(b)

    def test_label_validation_on_queries(self):
        p = Poset.chain(3)
        with pytest.raises(DomainError):
            p.leq(1, 5)
        with pytest.raises(DomainError):
            p.down_set(0)


class TestShapes:
    def test_chain(self):
        p = Poset.chain(4)
        assert p.is_chain() and not p.is_antichain()
        assert p.down_set(3) == {1, 2, 3}
        assert p.maximal_labels() == {4}
        assert p.linear_order() == (1, 2, 3, 4)

    def test_single_element_is_both(self):
        p = Poset.chain(1)
        assert p.is_chain() and p.is_antichain()

    def test_antichain(self):
        p = Poset.antichain(4)
        assert p.is_antichain() and not p.is_chain()
        assert p.down_set(2) == {2}
        assert p.maximal_labels() == {1, 2, 3, 4}

    def test_permuted_chain_order(self):
        p = Poset.from_covers(3, [(2, 3), (3, 1)])
        assert p.is_chain()
        assert p.linear_order() == (2, 3, 1)

    def test_cover_pairs_drop_implied_relations(self):
        p = Poset.from_covers(4, [(1, 2), (2, 3), (1, 3), (1, 4)])
        assert p.cover_pairs() == ((1, 2), (1, 4), (2, 3))


class TestAgainstReachabilityOracle:
    def test_relations_match_fixpoint_closure(self):
        rng = random.Random(11)
        for _ in range(30):
            n = rng.randint(1, 6)
            covers = random_cover_pairs(rng, n)
            p = Poset.from_covers(n, covers)
            rel = oracles.reachability(n, covers)
            for a in range(1, n + 1):
                for b in range(1, n + 1):
                    assert p.leq(a, b) == ((a, b) in rel)
                assert p.down_set(a) == oracles.down_closure([a], rel)

    def test_maximal_elements_match_oracle(self):
        rng = random.Random(13)
        for _ in range(20):
            n = rng.randint(1, 6)
            covers = random_cover_pairs(rng, n)
            p = Poset.from_covers(n, covers)
            rel = oracles.reachability(n, covers)
            assert p.maximal_labels() == oracles.maximal_of(range(1, n + 1), rel)


class TestIdealClosure:
    def test_generated_ideal(self):
        p = Poset.from_covers(5, [(1, 2)])
        ideal = ideal_closure(p, [2, 4])
        assert ideal.members == {1, 2, 4}
        assert ideal.maximals == {2, 4}
        assert ideal.non_maximals == {1}

    def test_empty_generators(self):
        ideal = ideal_closure(Poset.chain(3), [])
        assert ideal.members == frozenset()
        assert len(ideal) == 0

    def test_closure_matches_oracle(self):
        rng = random.Random(17)
        for _ in range(20):
            n = rng.randint(1, 6)
            covers = random_cover_pairs(rng, n)
            p = Poset.from_covers(n, covers)
            rel = oracles.reachability(n, covers)
            labels = [lbl for lbl in range(1, n + 1) if rng.random() < 0.5]
            ideal = ideal_closure(p, labels)
            assert ideal.members == oracles.down_closure(labels, rel)
            assert ideal.maximals == oracles.maximal_of(ideal.members, rel)


class TestEnumeration:
    def test_matches_subset_filter_oracle(self):
        rng = random.Random(19)
        for _ in range(25):
            n = rng.randint(1, 6)
            covers = random_cover_pairs(rng, n)
            p = Poset.from_covers(n, covers)
            rel = oracles.reachability(n, covers)
            expected = {ideal for ideal in oracles.all_ideals(n, rel) if ideal}
            idx = enumerate_ideals(p)
            produced = {
                ideal.members for group in idx.groups.values() for ideal in group
            }
            assert produced == expected
            assert idx.ideal_count == len(expected)
            for group in idx.groups.values():
                for ideal in group:
                    assert ideal.maximals == oracles.maximal_of(ideal.members, rel)

    def test_group_keys_are_consistent(self):
        idx = enumerate_ideals(Poset.from_covers(4, [(1, 2), (1, 3)]))
        for (card, n_max), group in idx.groups.items():
            for ideal in group:
                assert len(ideal.members) == card
                assert len(ideal.maximals) == n_max

    def test_empty_ideal_kept_apart(self):
        idx = enumerate_ideals(Poset.chain(2))
        assert idx.empty.members == frozenset()
        assert all(ideal.members for g in idx.groups.values() for ideal in g)

    def test_chain_has_one_ideal_per_size(self):
        idx = enumerate_ideals(Poset.chain(5))
        assert idx.ideal_count == 5
        for r in range(1, 6):
            (ideal,) = idx.of_cardinality(r)
            assert ideal.members == set(range(1, r + 1))
            assert ideal.maximals == {r}

    def test_antichain_counts_subsets(self):
        idx = enumerate_ideals(Poset.antichain(5))
        assert idx.ideal_count == 2 ** 5 - 1

    def test_cap_enforced(self):
        with pytest.raises(CapacityError):
            enumerate_ideals(Poset.antichain(8), max_ideals=10)

    def test_census_helper(self):
        idx = enumerate_ideals(Poset.from_covers(2, []))
        assert idx.census() == {(1, 1): 2, (2, 2): 1}
        assert idx.group(1, 1) and idx.group(3, 1) == ()


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_ideal_count_equals_oracle_on_random_posets(data):
    n = data.draw(st.integers(min_value=1, max_value=6))
    pairs = data.draw(
        st.lists(
            st.tuples(
                st.integers(min_value=1, max_value=n),
                st.integers(min_value=1, max_value=n),
            ),
            max_size=8,
        )
    )
    covers = [(a, b) for a, b in pairs if a != b]
    try:
        p = Poset.from_covers(n, covers)
    except InvalidPosetError:
        return
    rel = oracles.reachability(n, covers)
    assert enumerate_ideals(p).ideal_count == len(oracles.all_ideals(n, rel)) - 1
