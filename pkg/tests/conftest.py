"""Shared builders for the test suite: seeded random spaces, posets, codes."""

from __future__ import annotations

import random
from pathlib import Path

import pytest

from posetblock import BlockSpace, LabelMap, Poset, build_code, make_weight

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


def random_cover_pairs(rng: random.Random, n: int, density: float = 0.4):
    """Acyclic cover pairs on shuffled labels, so shapes vary across trials."""
    perm = list(range(1, n + 1))
    rng.shuffle(perm)
    covers = []
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < density:
                covers.append((perm[i], perm[j]))
    return covers


def random_poset(rng: random.Random, n: int, density: float = 0.4) -> Poset:
    return Poset.from_covers(n, random_cover_pairs(rng, n, density))


def random_space(
    rng: random.Random,
    *,
    moduli=(2, 3, 5),
    max_n: int = 4,
    max_block: int = 2,
    max_length: int = 6,
    weight_kinds=("hamming", "lee"),
) -> BlockSpace:
    m = rng.choice(moduli)
    n = rng.randint(1, max_n)
    sizes = [rng.randint(1, max_block) for _ in range(n)]
    while sum(sizes) > max_length:
        sizes[sizes.index(max(sizes))] -= 1
    poset = random_poset(rng, n)
    weight = make_weight(rng.choice(weight_kinds), m)
    return BlockSpace(m, poset, LabelMap(sizes), weight)


def random_vector(rng: random.Random, space: BlockSpace):
    return tuple(rng.randrange(space.m) for _ in range(space.pi.total_length))


def random_code(rng: random.Random, space: BlockSpace):
    """An explicit or (over a prime modulus) linear code with random words."""
    linear_ok = space.m in (2, 3, 5, 7)
    if linear_ok and rng.random() < 0.5:
        rank_target = rng.randint(1, min(3, space.pi.total_length))
        gens = [random_vector(rng, space) for _ in range(rank_target)]
        code = build_code(space, "linear", gens)
        if code.rank >= 1:
            return code
    count = rng.randint(2, 8)
    words = {random_vector(rng, space) for _ in range(count)}
    while len(words) < 2:
        words.add(random_vector(rng, space))
    return build_code(space, "explicit", sorted(words))


@pytest.fixture
def five_block_space() -> BlockSpace:
    poset = Poset.from_covers(5, [(1, 2)])
    return BlockSpace(7, poset, LabelMap([2, 3, 4, 2, 2]), make_weight("lee", 7))


@pytest.fixture
def z5_lee_chain_space() -> BlockSpace:
    return BlockSpace(5, Poset.chain(2), LabelMap([1, 1]), make_weight("lee", 5))


@pytest.fixture
def z3_hamming_chain_space() -> BlockSpace:
    return BlockSpace(3, Poset.chain(2), LabelMap([1, 1]), make_weight("hamming", 3))
