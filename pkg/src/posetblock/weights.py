"""Coordinate weights on Z_m and the counting tables built from them.

A weight assigns a nonnegative integer to each residue with w(0) = 0,
w(a) > 0 otherwise, w(-a) = w(a), and w(a + b) <= w(a) + w(b).  All four
axioms are checked at construction, the last one exhaustively over the
m^2 residue pairs.
"""

from __future__ import annotations

from typing import Iterable, Mapping, Sequence

from .errors import DomainError, InvalidWeightError


class WeightFunction:
    """A validated coordinate weight on Z_m, plus derived counting data.

    Attributes of note: ``max_weight`` (the largest value taken),
    ``min_nonzero_weight`` (smallest value on nonzero residues), and
    ``class_sizes`` where ``class_sizes[r]`` counts residues of weight
    exactly ``r``.
    """

    __slots__ = ("m", "table", "max_weight", "min_nonzero_weight", "class_sizes", "_prefix")

    def __init__(self, m: int, table: Sequence[int]):
        if not isinstance(m, int) or m < 2:
            raise DomainError(f"modulus must be an integer >= 2, got {m!r}")
        values = tuple(table)
        if len(values) != m:
            raise InvalidWeightError(f"weight table has {len(values)} entries, expected {m}")
        for a, v in enumerate(values):
            if not isinstance(v, int) or isinstance(v, bool):
                raise InvalidWeightError(f"weight of {a} is {v!r}, expected an integer")
            if v < 0:
                raise InvalidWeightError(f"weight of {a} is negative")
        if values[0] != 0:
            raise InvalidWeightError("weight of 0 must be 0")
        for a in range(1, m):
            if values[a] == 0:
                raise InvalidWeightError(f"weight of nonzero residue {a} must be positive")
            if values[a] != values[m - a]:
                raise InvalidWeightError(
                    f"weight table is not symmetric: w({a})={values[a]} but w({m - a})={values[m - a]}"
                )
        for a in range(m):
            for b in range(m):
                if values[(a + b) % m] > values[a] + values[b]:
                    raise InvalidWeightError(
                        f"weight table is not subadditive at ({a}, {b}): "
                        f"w({(a + b) % m})={values[(a + b) % m]} > {values[a]} + {values[b]}"
                    )
        self.m = m
        self.table = values
        self.max_weight = max(values)
        self.min_nonzero_weight = min(values[1:])
        sizes = [0] * (self.max_weight + 1)
        for v in values:
            sizes[v] += 1
        self.class_sizes = tuple(sizes)
        prefix = [0] * (self.max_weight + 1)
        running = 0
        for r in range(self.max_weight + 1):
            running += sizes[r]
            prefix[r] = running
        self._prefix = tuple(prefix)

    @classmethod
    def hamming(cls, m: int) -> "WeightFunction":
        if not isinstance(m, int) or m < 2:
            raise DomainError(f"modulus must be an integer >= 2, got {m!r}")
        return cls(m, [0] + [1] * (m - 1))

    @classmethod
    def lee(cls, m: int) -> "WeightFunction":
        if not isinstance(m, int) or m < 2:
            raise DomainError(f"modulus must be an integer >= 2, got {m!r}")
        return cls(m, [min(a, m - a) for a in range(m)])

    def __call__(self, alpha: int) -> int:
        if not isinstance(alpha, int):
            raise DomainError(f"residue must be an integer, got {alpha!r}")
        return self.table[alpha % self.m]

    def block_weight(self, coords: Sequence[int]) -> int:
        """Weight of a block: the largest coordinate weight in it."""
        if len(coords) == 0:
            raise DomainError("a block must contain at least one coordinate")
        return max(self.table[c % self.m] for c in coords)

    def block_class_size(self, k: int, r: int) -> int:
        """Number of vectors in Z_m^k whose block weight is exactly r.

        Vectors of block weight at most r are those with every coordinate
        weight at most r, so the count is a difference of k-th powers of
        prefix sums.
        """
        if not isinstance(k, int) or k < 1:
            raise DomainError(f"block length must be a positive integer, got {k!r}")
        if not isinstance(r, int) or not 0 <= r <= self.max_weight:
            raise DomainError(f"block weight {r!r} outside 0..{self.max_weight}")
        if r == 0:
            return 1
        return self._prefix[r] ** k - self._prefix[r - 1] ** k

    def block_table(self, k: int) -> tuple[int, ...]:
        """All block class sizes for length ``k``, indexed by weight."""
        return tuple(self.block_class_size(k, r) if r else 1 for r in range(self.max_weight + 1))

    def __eq__(self, other: object) -> bool:
        return isinstance(other, WeightFunction) and self.m == other.m and self.table == other.table

    def __hash__(self) -> int:
        return hash((self.m, self.table))

    def __repr__(self) -> str:
        return f"WeightFunction(m={self.m}, table={list(self.table)})"


def make_weight(
    kind: str,
    m: int,
    custom_table: Iterable[int] | Mapping[int, int] | None = None,
) -> WeightFunction:
    """Build a weight by name: ``"hamming"``, ``"lee"`` or ``"custom"``.

    A table is required for (and only for) the custom kind; it may be a
    sequence indexed by residue or a mapping with keys exactly 0..m-1.
    """
    if kind == "custom":
        if custom_table is None:
            raise DomainError("custom weight needs a table")
        if isinstance(custom_table, Mapping):
            if not isinstance(m, int) or m < 2:
                raise DomainError(f"modulus must be an integer >= 2, got {m!r}")
            if set(custom_table) != set(range(m)):
                raise InvalidWeightError(
                    f"custom table keys must be exactly 0..{m - 1}"
                )
            return WeightFunction(m, [custom_table[a] for a in range(m)])
        return WeightFunction(m, list(custom_table))
    if custom_table is not None:
        raise DomainError(f"weight kind {kind!r} does not take a table")
    if kind == "hamming":
        return WeightFunction.hamming(m)
    if kind == "lee":
        return WeightFunction.lee(m)
    raise DomainError(f"unknown weight kind {kind!r}")


class BlockWeightTable:
    """Per-block-length class-size rows for one weight, computed lazily."""

    __slots__ = ("weight", "_rows")

    def __init__(self, weight: WeightFunction):
        self.weight = weight
        self._rows: dict[int, tuple[int, ...]] = {}

    def row(self, k: int) -> tuple[int, ...]:
        cached = self._rows.get(k)
        if cached is None:
            cached = self.weight.block_table(k)
            self._rows[k] = cached
        return cached

    def count(self, k: int, r: int) -> int:
        return self.row(k)[r]
