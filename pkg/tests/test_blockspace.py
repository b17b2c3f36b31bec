"""Block spaces: vector algebra, supports, and the four metrics."""

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from conftest import random_cover_pairs, random_space, random_vector
from posetblock import (
    BlockSpace,
    DomainError,
    LabelMap,
    Poset,
    PreconditionError,
    make_weight,
)


class TestLabelMap:
    def test_offsets_and_slices(self):
        pi = LabelMap([2, 3, 1])
        assert pi.total_length == 6
        assert pi.offsets == (0, 2, 5)
        coords = (10, 11, 20, 21, 22, 30)
        assert tuple(pi.block(coords, 2)) == (20, 21, 22)
        assert tuple(pi.block(coords, 3)) == (30,)

    def test_validation(self):
        with pytest.raises(DomainError):
            LabelMap([])
        with pytest.raises(DomainError):
            LabelMap([2, 0])
        with pytest.raises(DomainError):
            LabelMap([2, 1]).block((0, 0, 0), 3)


class TestSpaceConstruction:
    def test_cross_field_checks(self):
        poset = Poset.chain(2)
        with pytest.raises(DomainError):
            BlockSpace(5, poset, LabelMap([1, 1, 1]), make_weight("lee", 5))
        with pytest.raises(DomainError):
            BlockSpace(5, poset, LabelMap([1, 1]), make_weight("lee", 7))

    def test_size_and_diameter(self, five_block_space):
        assert five_block_space.size == 7 ** 13
        assert five_block_space.max_total_weight == 15

    def test_vector_validation(self, z5_lee_chain_space):
        space = z5_lee_chain_space
        with pytest.raises(DomainError):
            space.vector([1])
        with pytest.raises(DomainError):
            space.vector([5, 0])
        with pytest.raises(DomainError):
            space.vector([-1, 0])
        with pytest.raises(DomainError):
            space.vector([0.5, 0])
        assert space.vector([4, 0]) == (4, 0)


class TestArithmetic:
    def test_mod_m(self, z5_lee_chain_space):
        s = z5_lee_chain_space
        assert s.add((3, 4), (4, 3)) == (2, 2)
        assert s.sub((0, 1), (3, 4)) == (2, 2)
        assert s.neg((1, 0)) == (4, 0)
        assert s.scale(3, (2, 4)) == (1, 2)
        assert s.zero() == (0, 0)

    def test_iteration_covers_space(self, z3_hamming_chain_space):
        vectors = list(z3_hamming_chain_space.iter_vectors())
        assert len(vectors) == 9 == len(set(vectors))


class TestSupport:
    def test_nonzero_blocks(self, five_block_space):
        x = (1, 0, 3, 0, 0, 0, 0, 0, 0, 2, 0, 0, 0)
        assert five_block_space.support(x) == {1, 2, 4}
        assert five_block_space.support(five_block_space.zero()) == frozenset()


class TestWeightedMetric:
    def test_worked_example(self, five_block_space):
        # blocks (1,0), (3,0,0), zero, (2,0), zero: ideal {1,2,4}, maximal {2,4}
        x = (1, 0, 3, 0, 0, 0, 0, 0, 0, 2, 0, 0, 0)
        assert five_block_space.wt(x) == 8

    def test_zero_vector(self, five_block_space):
        assert five_block_space.wt(five_block_space.zero()) == 0

    def test_metric_key_validation(self, five_block_space, z5_lee_chain_space):
        with pytest.raises(DomainError):
            five_block_space.wt(five_block_space.zero(), "euclidean")
        with pytest.raises(PreconditionError):
            five_block_space.wt(five_block_space.zero(), "pw")
        # unit blocks allow all four keys
        z5_lee_chain_space.wt((1, 1), "pw")
        z5_lee_chain_space.wt((1, 1), "p")

    def test_chain_pair_value(self, z5_lee_chain_space):
        assert z5_lee_chain_space.wt((3, 2)) == 4
        assert z5_lee_chain_space.dist((3, 2), (0, 0)) == 4

    def test_matches_definition_oracle(self):
        rng = random.Random(29)
        for _ in range(25):
            space = random_space(rng)
            covers = space.poset.cover_pairs()
            rel = oracles.reachability(space.poset.n, covers)
            sizes = list(space.pi.block_sizes)
            for _ in range(40):
                x = random_vector(rng, space)
                assert space.wt(x) == oracles.pwpi_weight(
                    x, sizes, rel, space.weight.table, space.m
                )
                assert space.wt(x, "ppi") == oracles.ppi_weight(x, sizes, rel, space.m)

    def test_unweighted_equals_hamming_variant(self):
        rng = random.Random(31)
        for _ in range(10):
            space = random_space(rng, weight_kinds=("lee",), moduli=(5, 7))
            variant = space.hamming_variant()
            for _ in range(25):
                x = random_vector(rng, space)
                assert space.wt(x, "ppi") == variant.wt(x, "pwpi")

    def test_distance_is_translation_invariant(self):
        rng = random.Random(37)
        space = random_space(rng)
        for _ in range(50):
            x, y, t = (random_vector(rng, space) for _ in range(3))
            assert space.dist(x, y) == space.dist(space.add(x, t), space.add(y, t))


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_metric_axioms_on_random_small_spaces(data):
    m = data.draw(st.sampled_from([2, 3, 5]))
    n = data.draw(st.integers(min_value=1, max_value=3))
    sizes = data.draw(
        st.lists(st.integers(min_value=1, max_value=2), min_size=n, max_size=n)
    )
    pairs = data.draw(
        st.lists(
            st.tuples(
                st.integers(min_value=1, max_value=n),
                st.integers(min_value=1, max_value=n),
            ),
            max_size=4,
        )
    )
    covers = [(a, b) for a, b in pairs if a < b]
    kind = data.draw(st.sampled_from(["hamming", "lee"]))
    space = BlockSpace(
        m, Poset.from_covers(n, covers), LabelMap(sizes), make_weight(kind, m)
    )
    width = space.pi.total_length
    vec = st.tuples(*[st.integers(min_value=0, max_value=m - 1)] * width)
    x = data.draw(vec)
    y = data.draw(vec)
    z = data.draw(vec)
    d_xy = space.dist(x, y)
    assert space.dist(x, x) == 0
    assert (d_xy == 0) == (x == y)
    assert d_xy == space.dist(y, x)
    assert d_xy <= space.dist(x, z) + space.dist(z, y)
