"""The ambient space Z_m^N cut into labeled blocks, and its metrics.

A space combines a modulus, a poset on the block labels, a block-length
profile pi and a coordinate weight.  The weighted metric of a vector sums
the block weights of the maximal blocks of the ideal generated by its
support and charges every non-maximal member of that ideal the full
``max_weight``.  Three specializations are exposed under metric keys:

``pwpi``  weighted poset block metric (the general one)
``ppi``   poset block metric (ideal cardinality)
``pw``    weighted poset metric (needs all blocks of length 1)
``p``     poset metric (ideal cardinality, length-1 blocks)
"""

from __future__ import annotations

import itertools
from typing import Iterable, Iterator, Sequence

from .errors import DomainError, PreconditionError
from .poset import Poset
from .weights import WeightFunction

METRIC_KEYS = ("pwpi", "ppi", "pw", "p")


class LabelMap:
    """Block-length profile: which coordinate slice each label owns."""

    __slots__ = ("block_sizes", "offsets", "total_length", "n")

    def __init__(self, block_sizes: Sequence[int]):
        sizes = tuple(block_sizes)
        if not sizes:
            raise DomainError("need at least one block")
        for k in sizes:
            if not isinstance(k, int) or k < 1:
                raise DomainError(f"block length {k!r} must be a positive integer")
        self.block_sizes = sizes
        offsets = []
        pos = 0
        for k in sizes:
            offsets.append(pos)
            pos += k
        self.offsets = tuple(offsets)
        self.total_length = pos
        self.n = len(sizes)

    def block(self, coords: Sequence[int], label: int) -> Sequence[int]:
        """The slice of ``coords`` belonging to ``label`` (1-based)."""
        if not 1 <= label <= self.n:
            raise DomainError(f"label {label!r} outside 1..{self.n}")
        start = self.offsets[label - 1]
        return coords[start:start + self.block_sizes[label - 1]]

    def __eq__(self, other: object) -> bool:
        return isinstance(other, LabelMap) and self.block_sizes == other.block_sizes

    def __hash__(self) -> int:
        return hash(self.block_sizes)

    def __repr__(self) -> str:
        return f"LabelMap({list(self.block_sizes)})"


class BlockSpace:
    """Z_m^N with block structure, a poset on labels, and a weight."""

    __slots__ = ("m", "poset", "pi", "weight", "size", "max_total_weight")

    def __init__(self, m: int, poset: Poset, pi: LabelMap, weight: WeightFunction):
        if weight.m != m:
            raise DomainError(f"weight is over Z_{weight.m} but the space is over Z_{m}")
        if poset.n != pi.n:
            raise DomainError(
                f"poset has {poset.n} labels but the block profile has {pi.n}"
            )
        self.m = m
        self.poset = poset
        self.pi = pi
        self.weight = weight
        self.size = m ** pi.total_length
        self.max_total_weight = poset.n * weight.max_weight

    # -- vectors -------------------------------------------------------------

    def vector(self, coords: Iterable[int]) -> tuple[int, ...]:
        """Validate and normalize a coordinate sequence into this space."""
        vec = tuple(coords)
        if len(vec) != self.pi.total_length:
            raise DomainError(
                f"vector has {len(vec)} coordinates, expected {self.pi.total_length}"
            )
        for c in vec:
            if not isinstance(c, int) or isinstance(c, bool):
                raise DomainError(f"coordinate {c!r} is not an integer")
            if not 0 <= c < self.m:
                raise DomainError(f"coordinate {c} outside 0..{self.m - 1}")
        return vec

    def zero(self) -> tuple[int, ...]:
        return (0,) * self.pi.total_length

    def add(self, x: Sequence[int], y: Sequence[int]) -> tuple[int, ...]:
        return tuple((a + b) % self.m for a, b in zip(x, y))

    def sub(self, x: Sequence[int], y: Sequence[int]) -> tuple[int, ...]:
        return tuple((a - b) % self.m for a, b in zip(x, y))

    def neg(self, x: Sequence[int]) -> tuple[int, ...]:
        return tuple((-a) % self.m for a in x)

    def scale(self, c: int, x: Sequence[int]) -> tuple[int, ...]:
        return tuple((c * a) % self.m for a in x)

    def iter_vectors(self) -> Iterator[tuple[int, ...]]:
        return itertools.product(range(self.m), repeat=self.pi.total_length)

    # -- metrics --------------------------------------------------------------

    def support(self, x: Sequence[int]) -> frozenset[int]:
        """Labels of the nonzero blocks of ``x``."""
        return frozenset(
            lbl for lbl in range(1, self.pi.n + 1)
            if any(c % self.m for c in self.pi.block(x, lbl))
        )

    def _support_mask(self, x: Sequence[int]) -> int:
        pi = self.pi
        mask = 0
        for lbl in range(pi.n):
            start = pi.offsets[lbl]
            if any(x[start:start + pi.block_sizes[lbl]]):
                mask |= 1 << lbl
        return mask

    def wt(self, x: Sequence[int], metric: str = "pwpi") -> int:
        """Weight of ``x`` under one of the metric keys."""
        if metric not in METRIC_KEYS:
            raise DomainError(f"unknown metric {metric!r}, expected one of {METRIC_KEYS}")
        if metric in ("pw", "p") and any(k != 1 for k in self.pi.block_sizes):
            raise PreconditionError(
                f"metric {metric!r} needs every block to have length 1"
            )
        ideal_mask = self.poset.close_down(self._support_mask(x))
        if metric in ("ppi", "p"):
            return ideal_mask.bit_count()
        maximal_mask = self.poset.maximal_elements_in(ideal_mask)
        total = (ideal_mask.bit_count() - maximal_mask.bit_count()) * self.weight.max_weight
        pi = self.pi
        table = self.weight.table
        while maximal_mask:
            low = maximal_mask & -maximal_mask
            lbl = low.bit_length() - 1
            start = pi.offsets[lbl]
            total += max(table[c % self.m] for c in x[start:start + pi.block_sizes[lbl]])
            maximal_mask ^= low
        return total

    def dist(self, x: Sequence[int], y: Sequence[int], metric: str = "pwpi") -> int:
        """Distance between two vectors: the weight of their difference."""
        return self.wt(self.sub(x, y), metric)

    def hamming_variant(self) -> "BlockSpace":
        """The same block structure with the Hamming coordinate weight.

        The weighted metric of the variant collapses to the ideal-counting
        metric, which is how the unweighted analyses are carried out for
        blocks longer than 1.
        """
        return BlockSpace(self.m, self.poset, self.pi, WeightFunction.hamming(self.m))

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, BlockSpace)
            and self.m == other.m
            and self.poset == other.poset
            and self.pi == other.pi
            and self.weight == other.weight
        )

    def __hash__(self) -> int:
        return hash((self.m, self.poset, self.pi, self.weight))

    def __repr__(self) -> str:
        return (
            f"BlockSpace(m={self.m}, n={self.poset.n}, "
            f"pi={list(self.pi.block_sizes)}, max_weight={self.weight.max_weight})"
        )
