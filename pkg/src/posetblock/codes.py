"""Codes inside a block space: minimum distances and bound checks.

A code is either an explicit set of vectors or, over a prime modulus, the
row space of a generator matrix.  The checks here compare the minimum
distance of a code against the ideal-based bound on its cardinality, and
relate the weighted metric's verdict to the unweighted one.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence

from .blockspace import BlockSpace
from .errors import (
    CapacityError,
    DomainError,
    PreconditionError,
    UnsupportedAlphabetError,
)
from .poset import DEFAULT_IDEAL_CAP, IdealIndex, enumerate_ideals

DEFAULT_CODEWORD_CAP = 1_000_000

CODE_KINDS = ("explicit", "linear")


def _is_prime(m: int) -> bool:
    if m < 2:
        return False
    f = 2
    while f * f <= m:
        if m % f == 0:
            return False
        f += 1
    return True


def _row_reduce_mod_p(rows: list[list[int]], p: int) -> list[tuple[int, ...]]:
    """Reduced row echelon form over Z_p; returns the nonzero rows."""
    work = [list(r) for r in rows]
    width = len(work[0]) if work else 0
    pivot_row = 0
    for col in range(width):
        found = None
        for r in range(pivot_row, len(work)):
            if work[r][col] % p:
                found = r
                break
        if found is None:
            continue
        work[pivot_row], work[found] = work[found], work[pivot_row]
        inv = pow(work[pivot_row][col], -1, p)
        work[pivot_row] = [(v * inv) % p for v in work[pivot_row]]
        for r in range(len(work)):
            if r != pivot_row and work[r][col] % p:
                factor = work[r][col]
                work[r] = [(a - factor * b) % p for a, b in zip(work[r], work[pivot_row])]
        pivot_row += 1
        if pivot_row == len(work):
            break
    return [tuple(r) for r in work[:pivot_row]]


def ceil_log(cardinality: int, q: int) -> int:
    """Least t with q**t >= cardinality, by exact integer comparison."""
    if not isinstance(cardinality, int) or cardinality < 1:
        raise DomainError(f"cardinality must be a positive integer, got {cardinality!r}")
    if not isinstance(q, int) or q < 2:
        raise DomainError(f"base must be an integer >= 2, got {q!r}")
    t = 0
    power = 1
    while power < cardinality:
        power *= q
        t += 1
    return t


class Code:
    """A code in a block space, explicit or linear.

    Linear codes store a reduced basis; their word list is generated on
    demand and is subject to ``codeword_cap``.
    """

    __slots__ = ("space", "kind", "words", "basis", "cardinality", "codeword_cap")

    def __init__(
        self,
        space: BlockSpace,
        kind: str,
        *,
        words: tuple[tuple[int, ...], ...] = (),
        basis: tuple[tuple[int, ...], ...] = (),
        codeword_cap: int = DEFAULT_CODEWORD_CAP,
    ):
        self.space = space
        self.kind = kind
        self.words = words
        self.basis = basis
        self.codeword_cap = codeword_cap
        if kind == "explicit":
            self.cardinality = len(words)
        else:
            self.cardinality = space.m ** len(basis)

    @property
    def rank(self) -> int:
        if self.kind != "linear":
            raise DomainError("only linear codes have a rank")
        return len(self.basis)

    def codewords(self) -> Iterator[tuple[int, ...]]:
        """Every codeword; raises :class:`CapacityError` above the cap."""
        if self.cardinality > self.codeword_cap:
            raise CapacityError(
                f"code has {self.cardinality} words, above the cap of {self.codeword_cap}"
            )
        if self.kind == "explicit":
            return iter(self.words)
        m = self.space.m
        width = self.space.pi.total_length
        basis = self.basis

        def gen() -> Iterator[tuple[int, ...]]:
            for coeffs in itertools.product(range(m), repeat=len(basis)):
                word = [0] * width
                for c, row in zip(coeffs, basis):
                    if c:
                        for i, v in enumerate(row):
                            word[i] = (word[i] + c * v) % m
                yield tuple(word)

        return gen()

    def __repr__(self) -> str:
        if self.kind == "explicit":
            return f"Code(explicit, {self.cardinality} words)"
        return f"Code(linear, rank={self.rank}, {self.cardinality} words)"


def build_code(
    space: BlockSpace,
    kind: str,
    vectors: Sequence[Sequence[int]],
    *,
    codeword_cap: int = DEFAULT_CODEWORD_CAP,
) -> Code:
    """Assemble a code from explicit words or from generator rows.

    Explicit words are validated and deduplicated; generators are
    row-reduced over Z_m, which requires m prime.
    """
    if kind not in CODE_KINDS:
        raise DomainError(f"unknown code kind {kind!r}, expected one of {CODE_KINDS}")
    checked = [space.vector(v) for v in vectors]
    if kind == "explicit":
        if not checked:
            raise DomainError("an explicit code needs at least one word")
        words = tuple(sorted(set(checked)))
        return Code(space, "explicit", words=words, codeword_cap=codeword_cap)
    if not _is_prime(space.m):
        raise UnsupportedAlphabetError(
            f"linear codes need a prime modulus, got {space.m}"
        )
    basis = tuple(_row_reduce_mod_p([list(v) for v in checked], space.m))
    return Code(space, "linear", basis=basis, codeword_cap=codeword_cap)


def min_distance(code: Code, metric: str = "pwpi") -> int:
    """Minimum distance between distinct codewords under the given metric.

    For linear codes this is the least weight of a nonzero codeword.
    """
    space = code.space
    if code.kind == "linear":
        if code.rank == 0:
            raise DomainError("the zero code has no minimum distance")
        best = None
        zero = space.zero()
        for word in code.codewords():
            if word == zero:
                continue
            w = space.wt(word, metric)
            if best is None or w < best:
                best = w
        assert best is not None
        return best
    if code.cardinality < 2:
        raise DomainError("minimum distance needs at least two codewords")
    best = None
    words = code.words
    for i in range(len(words)):
        for j in range(i + 1, len(words)):
            d = space.dist(words[i], words[j], metric)
            if best is None or d < best:
                best = d
    assert best is not None
    return best


@dataclass(frozen=True)
class SingletonReport:
    """Ideal-budget bound on a code's parameters under one metric.

    ``ideal_cardinality`` is how many labels an adversarial ideal may use
    given the minimum distance; ``max_ideal_length`` is the largest total
    block length over ideals of exactly that many labels; ``length_budget``
    is N minus the ceiling of log_q of the cardinality.  The bound says the
    former cannot exceed the latter, and the code is extremal when they tie.
    """

    metric: str
    min_distance: int
    ideal_cardinality: int
    max_ideal_length: int
    length_budget: int

    @property
    def holds(self) -> bool:
        return self.max_ideal_length <= self.length_budget

    @property
    def is_mds(self) -> bool:
        return self.max_ideal_length == self.length_budget


def _max_length_over_ideals(space: BlockSpace, idx: IdealIndex, cardinality: int) -> int:
    if cardinality == 0:
        return 0
    sizes = space.pi.block_sizes
    best = 0
    for ideal in idx.of_cardinality(cardinality):
        total = sum(sizes[lbl - 1] for lbl in ideal.members)
        if total > best:
            best = total
    return best


def singleton_check(
    code: Code,
    metric: str = "pwpi",
    *,
    idx: IdealIndex | None = None,
    ideal_cap: int = DEFAULT_IDEAL_CAP,
) -> SingletonReport:
    """Evaluate the ideal-budget bound for ``code`` under ``metric``.

    The weighted metric discounts the distance by the maximum coordinate
    weight before converting it into an ideal cardinality; the unweighted
    ones use the distance as-is.
    """
    space = code.space
    if idx is None:
        idx = enumerate_ideals(space.poset, max_ideals=ideal_cap)
    d = min_distance(code, metric)
    if metric in ("pwpi", "pw"):
        r = (d - 1) // space.weight.max_weight
    else:
        r = d - 1
    lhs = _max_length_over_ideals(space, idx, r)
    rhs = space.pi.total_length - ceil_log(code.cardinality, space.m)
    assert lhs <= rhs, (
        f"singleton bound violated (lhs={lhs}, rhs={rhs}); "
        "this indicates a bug in the distance or ideal machinery"
    )
    return SingletonReport(
        metric=metric,
        min_distance=d,
        ideal_cardinality=r,
        max_ideal_length=lhs,
        length_budget=rhs,
    )


def mds_necessary_interval(
    n: int,
    block_size: int,
    max_weight: int,
    cardinality: int,
    q: int,
) -> tuple[Fraction, Fraction]:
    """Range the minimum distance of an extremal code must fall in.

    Requires equal block lengths.  Both endpoints are exact rationals:
    max_weight * (n - t/k) + 1 and max_weight * (n - t/k + 1), where t is
    the ceiling of log_q of the cardinality and k the common block length.
    """
    if not isinstance(n, int) or n < 1:
        raise DomainError(f"label count must be a positive integer, got {n!r}")
    if not isinstance(block_size, int) or block_size < 1:
        raise DomainError(f"block length must be a positive integer, got {block_size!r}")
    if not isinstance(max_weight, int) or max_weight < 1:
        raise DomainError(f"max weight must be a positive integer, got {max_weight!r}")
    t = ceil_log(cardinality, q)
    base = Fraction(max_weight) * (Fraction(n) - Fraction(t, block_size))
    return (base + 1, base + max_weight)


@dataclass(frozen=True)
class DistanceComparison:
    """Weighted versus unweighted minimum distance of one code.

    The weighted distance, discounted by the maximum coordinate weight,
    never buys more ideal labels than the unweighted distance allows:
    floor((d_weighted - 1) / max_weight) <= d_unweighted - 1.
    """

    weighted_distance: int
    unweighted_distance: int
    max_weight: int

    @property
    def holds(self) -> bool:
        return (self.weighted_distance - 1) // self.max_weight <= self.unweighted_distance - 1


def distance_comparison_check(code: Code) -> DistanceComparison:
    d_w = min_distance(code, "pwpi")
    d_u = min_distance(code, "ppi")
    return DistanceComparison(
        weighted_distance=d_w,
        unweighted_distance=d_u,
        max_weight=code.space.weight.max_weight,
    )


@dataclass(frozen=True)
class MdsInheritance:
    """Whether extremality under the weighted metric carries to the unweighted one."""

    weighted_mds: bool
    unweighted_mds: bool

    @property
    def consistent(self) -> bool:
        return self.unweighted_mds or not self.weighted_mds


def mds_inheritance_check(
    code: Code,
    *,
    idx: IdealIndex | None = None,
    ideal_cap: int = DEFAULT_IDEAL_CAP,
) -> MdsInheritance:
    if idx is None:
        idx = enumerate_ideals(code.space.poset, max_ideals=ideal_cap)
    weighted = singleton_check(code, "pwpi", idx=idx)
    unweighted = singleton_check(code, "ppi", idx=idx)
    return MdsInheritance(weighted_mds=weighted.is_mds, unweighted_mds=unweighted.is_mds)


@dataclass(frozen=True)
class CodeAnalysis:
    """One-stop summary of a code's distances and bound checks."""

    code: Code
    cardinality: int
    min_distances: dict[str, int]
    singleton: dict[str, SingletonReport]
    mds_interval: tuple[Fraction, Fraction] | None
    comparison: DistanceComparison
    inheritance: MdsInheritance


def analyze_code(
    code: Code,
    *,
    idx: IdealIndex | None = None,
    ideal_cap: int = DEFAULT_IDEAL_CAP,
) -> CodeAnalysis:
    """Compute every distance and check that applies to ``code``.

    The per-coordinate metrics are included only when all blocks have
    length 1, and the extremal-distance interval only when block lengths
    are equal.
    """
    space = code.space
    if idx is None:
        idx = enumerate_ideals(space.poset, max_ideals=ideal_cap)
    distances = {
        "pwpi": min_distance(code, "pwpi"),
        "ppi": min_distance(code, "ppi"),
    }
    if all(k == 1 for k in space.pi.block_sizes):
        distances["pw"] = min_distance(code, "pw")
        distances["p"] = min_distance(code, "p")
    singleton = {
        "pwpi": singleton_check(code, "pwpi", idx=idx),
        "ppi": singleton_check(code, "ppi", idx=idx),
    }
    interval = None
    if len(set(space.pi.block_sizes)) == 1:
        interval = mds_necessary_interval(
            space.poset.n,
            space.pi.block_sizes[0],
            space.weight.max_weight,
            code.cardinality,
            space.m,
        )
    return CodeAnalysis(
        code=code,
        cardinality=code.cardinality,
        min_distances=distances,
        singleton=singleton,
        mds_interval=interval,
        comparison=distance_comparison_check(code),
        inheritance=mds_inheritance_check(code, idx=idx),
    )
