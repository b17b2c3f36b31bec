"""Finite posets on labels 1..n: construction, ideals, and ideal enumeration.

The order relation is materialized densely as one bitmask per label (bit
``j-1`` of ``up[i-1]`` set iff ``i`` is below or equal to ``j``), so every
relation lookup and every downward closure is a handful of integer ops.
Ideals are enumerated by walking antichains and closing them downward:
each nonempty ideal is generated by its set of maximal elements, which is
an antichain, so the walk visits every ideal exactly once.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

from .errors import CapacityError, DomainError, InvalidPosetError

DEFAULT_IDEAL_CAP = 1_000_000


def _labels_from_mask(mask: int) -> frozenset[int]:
    labels = set()
    while mask:
        low = mask & -mask
        labels.add(low.bit_length())
        mask ^= low
    return frozenset(labels)


class Poset:
    """A partial order on ``{1, ..., n}``.

    Construct via :meth:`from_covers`, :meth:`chain` or :meth:`antichain`.
    Instances are immutable and safe to share.
    """

    __slots__ = ("n", "_up", "_down")

    def __init__(self, n: int, up: list[int], down: list[int]):
        self.n = n
        self._up = up
        self._down = down

    @classmethod
    def from_covers(cls, n: int, covers: Iterable[tuple[int, int]]) -> "Poset":
        """Build the reflexive-transitive closure of the given cover pairs.

        Each pair ``(a, b)`` declares ``a`` below ``b``.  Raises
        :class:`InvalidPosetError` if the pairs contain a cycle and
        :class:`DomainError` for labels outside ``1..n``.
        """
        if not isinstance(n, int) or n < 1:
            raise DomainError(f"poset needs a positive ground-set size, got {n!r}")
        up = [0] * n
        for pair in covers:
            a, b = pair
            for lbl in (a, b):
                if not isinstance(lbl, int) or not 1 <= lbl <= n:
                    raise DomainError(f"cover label {lbl!r} outside 1..{n}")
            if a == b:
                raise InvalidPosetError(f"cover ({a}, {b}) is a self-loop")
            up[a - 1] |= 1 << (b - 1)
        # Warshall reachability on bitmask rows.
        for k in range(n):
            kbit = 1 << k
            row_k = up[k]
            for i in range(n):
                if up[i] & kbit:
                    up[i] |= row_k
        for i in range(n):
            if up[i] & (1 << i):
                raise InvalidPosetError("cover relation contains a cycle")
            up[i] |= 1 << i
        down = [0] * n
        for i in range(n):
            row = up[i]
            ibit = 1 << i
            while row:
                low = row & -row
                down[low.bit_length() - 1] |= ibit
                row ^= low
        return cls(n, up, down)

    @classmethod
    def chain(cls, n: int) -> "Poset":
        """The total order 1 below 2 below ... below n."""
        return cls.from_covers(n, [(i, i + 1) for i in range(1, n)])

    @classmethod
    def antichain(cls, n: int) -> "Poset":
        """No relations beyond reflexivity."""
        return cls.from_covers(n, [])

    # -- relation queries ---------------------------------------------------

    def _check_label(self, label: int) -> None:
        if not isinstance(label, int) or not 1 <= label <= self.n:
            raise DomainError(f"label {label!r} outside 1..{self.n}")

    def leq(self, a: int, b: int) -> bool:
        self._check_label(a)
        self._check_label(b)
        return bool(self._up[a - 1] >> (b - 1) & 1)

    def less(self, a: int, b: int) -> bool:
        return a != b and self.leq(a, b)

    def down_set(self, label: int) -> frozenset[int]:
        """All labels below or equal to ``label``."""
        self._check_label(label)
        return _labels_from_mask(self._down[label - 1])

    def up_set(self, label: int) -> frozenset[int]:
        self._check_label(label)
        return _labels_from_mask(self._up[label - 1])

    # -- mask utilities (bit i-1 stands for label i) ------------------------

    def close_down(self, mask: int) -> int:
        """Downward closure of a label mask: the ideal generated by it."""
        out = 0
        while mask:
            low = mask & -mask
            out |= self._down[low.bit_length() - 1]
            mask ^= low
        return out

    def maximal_elements_in(self, mask: int) -> int:
        """Labels of ``mask`` with nothing of ``mask`` strictly above them."""
        out = 0
        rest = mask
        while rest:
            low = rest & -rest
            if self._up[low.bit_length() - 1] & mask == low:
                out |= low
            rest ^= low
        return out

    def comparability_mask(self, label: int) -> int:
        i = label - 1
        return self._up[i] | self._down[i]

    # -- shape predicates ----------------------------------------------------

    def is_chain(self) -> bool:
        full = (1 << self.n) - 1
        return all(self._up[i] | self._down[i] == full for i in range(self.n))

    def is_antichain(self) -> bool:
        return all(self._up[i] == 1 << i for i in range(self.n))

    def maximal_labels(self) -> frozenset[int]:
        """Maximal elements of the whole poset."""
        return _labels_from_mask(self.maximal_elements_in((1 << self.n) - 1))

    def linear_order(self) -> tuple[int, ...]:
        """Labels of a chain poset from bottom to top.

        Raises :class:`PreconditionError` via callers when not a chain;
        here we sort by down-set size, which is the height on a chain.
        """
        return tuple(sorted(range(1, self.n + 1), key=lambda lbl: self._down[lbl - 1].bit_count()))

    def cover_pairs(self) -> tuple[tuple[int, int], ...]:
        """The Hasse diagram of the order, as sorted (lower, upper) pairs."""
        strict = [self._up[i] ^ (1 << i) for i in range(self.n)]
        pairs = []
        for i in range(self.n):
            composite = 0
            row = strict[i]
            while row:
                low = row & -row
                composite |= strict[low.bit_length() - 1]
                row ^= low
            covers = strict[i] & ~composite
            while covers:
                low = covers & -covers
                pairs.append((i + 1, low.bit_length()))
                covers ^= low
        return tuple(sorted(pairs))

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Poset) and self.n == other.n and self._up == other._up

    def __hash__(self) -> int:
        return hash((self.n, tuple(self._up)))

    def __repr__(self) -> str:
        return f"Poset(n={self.n}, covers={list(self.cover_pairs())})"


@dataclass(frozen=True)
class Ideal:
    """A downward-closed subset together with its cached maximal elements."""

    members: frozenset[int]
    maximals: frozenset[int]

    def __len__(self) -> int:
        return len(self.members)

    @property
    def non_maximals(self) -> frozenset[int]:
        return self.members - self.maximals


def ideal_closure(poset: Poset, labels: Iterable[int]) -> Ideal:
    """The smallest ideal containing ``labels``, with maximals cached."""
    mask = 0
    for lbl in labels:
        poset._check_label(lbl)
        mask |= 1 << (lbl - 1)
    members_mask = poset.close_down(mask)
    maximals_mask = poset.maximal_elements_in(members_mask)
    return Ideal(_labels_from_mask(members_mask), _labels_from_mask(maximals_mask))


@dataclass(frozen=True)
class IdealIndex:
    """All ideals of a poset grouped by (cardinality, number of maximal elements).

    The empty ideal is stored apart; every group holds nonempty ideals only.
    """

    poset: Poset
    groups: Mapping[tuple[int, int], tuple[Ideal, ...]]
    empty: Ideal

    def group(self, cardinality: int, maximal_count: int) -> tuple[Ideal, ...]:
        return self.groups.get((cardinality, maximal_count), ())

    def of_cardinality(self, cardinality: int) -> tuple[Ideal, ...]:
        out: list[Ideal] = []
        for (card, _), ideals in sorted(self.groups.items()):
            if card == cardinality:
                out.extend(ideals)
        return tuple(out)

    def census(self) -> dict[tuple[int, int], int]:
        return {key: len(ideals) for key, ideals in sorted(self.groups.items())}

    @property
    def ideal_count(self) -> int:
        """Number of nonempty ideals."""
        return sum(len(ideals) for ideals in self.groups.values())


def enumerate_ideals(poset: Poset, *, max_ideals: int = DEFAULT_IDEAL_CAP) -> IdealIndex:
    """Enumerate every ideal of ``poset``, grouped by size and maximal count.

    Walks antichains depth-first (labels ascending, comparability pruned) and
    closes each downward; raises :class:`CapacityError` past ``max_ideals``
    nonempty ideals.
    """
    n = poset.n
    comp = [poset.comparability_mask(lbl) for lbl in range(1, n + 1)]
    down = poset._down
    groups: dict[tuple[int, int], list[Ideal]] = {}
    count = 0

    def extend(start: int, chosen: int, members: int) -> None:
        nonlocal count
        for v in range(start, n):
            if comp[v] & chosen:
                continue
            new_chosen = chosen | (1 << v)
            new_members = members | down[v]
            count += 1
            if count > max_ideals:
                raise CapacityError(
                    f"ideal enumeration exceeded cap of {max_ideals}; raise the cap to proceed"
                )
            ideal = Ideal(_labels_from_mask(new_members), _labels_from_mask(new_chosen))
            key = (new_members.bit_count(), new_chosen.bit_count())
            groups.setdefault(key, []).append(ideal)
            extend(v + 1, new_chosen, new_members)

    extend(0, 0, 0)
    frozen = {key: tuple(ideals) for key, ideals in groups.items()}
    return IdealIndex(poset=poset, groups=frozen, empty=Ideal(frozenset(), frozenset()))
