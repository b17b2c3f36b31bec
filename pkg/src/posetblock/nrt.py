"""Chain-poset specializations: closed forms and radius results.

When the label poset is a total order the distribution has a closed form,
every ideal is a bottom segment, and the packing radius of a code follows
from its unweighted minimum distance.  Everything here is gated on the
chain shape and double-checked by brute force in the test suite.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .blockspace import BlockSpace
from .codes import Code, ceil_log, min_distance
from .distribution import (
    DEFAULT_BRUTE_CAP,
    WeightDistribution,
    _chain_counts,
)
from .errors import CapacityError, DomainError, PreconditionError
from .poset import Poset


def chain_order(poset: Poset) -> tuple[int, ...]:
    """Labels of a total order, bottom to top."""
    if not poset.is_chain():
        raise PreconditionError("the poset is not a total order")
    return poset.linear_order()


def chain_distribution(space: BlockSpace) -> WeightDistribution:
    """Closed-form shell counts for a chain: no ideal enumeration.

    Below the top weight of a single block the count is one block-class
    size; past that, each full-weight step up the chain multiplies by the
    number of vectors in the blocks already passed.
    """
    return WeightDistribution(
        space=space, method="chain", counts=tuple(_chain_counts(space))
    )


@dataclass(frozen=True)
class ChainSingletonReport:
    """The ideal-budget bound when the poset is a chain.

    On a chain there is exactly one ideal per cardinality, the bottom
    segment, so the bound compares its total block length against
    N minus the ceiling of log_q of the cardinality.  When all blocks
    share one length the bound also divides through, giving the rational
    inequality stored in the ``uniform_*`` fields.
    """

    min_distance: int
    ideal_cardinality: int
    segment: tuple[int, ...]
    segment_length: int
    length_budget: int
    uniform_lhs: int | None
    uniform_rhs: Fraction | None

    @property
    def holds(self) -> bool:
        return self.segment_length <= self.length_budget

    @property
    def is_mds(self) -> bool:
        return self.segment_length == self.length_budget

    @property
    def uniform_holds(self) -> bool | None:
        if self.uniform_rhs is None:
            return None
        return Fraction(self.uniform_lhs) <= self.uniform_rhs


def chain_singleton_check(code: Code) -> ChainSingletonReport:
    """Evaluate the chain form of the ideal-budget bound for ``code``."""
    space = code.space
    order = chain_order(space.poset)
    sizes = space.pi.block_sizes
    d = min_distance(code, "pwpi")
    r = (d - 1) // space.weight.max_weight
    segment = order[:r]
    lhs = sum(sizes[lbl - 1] for lbl in segment)
    rhs = space.pi.total_length - ceil_log(code.cardinality, space.m)
    assert lhs <= rhs, (
        f"chain singleton bound violated (lhs={lhs}, rhs={rhs}); "
        "this indicates a bug in the distance machinery"
    )
    uniform_lhs = None
    uniform_rhs = None
    if len(set(sizes)) == 1:
        uniform_lhs = r
        uniform_rhs = Fraction(space.poset.n) - Fraction(
            ceil_log(code.cardinality, space.m), sizes[0]
        )
    return ChainSingletonReport(
        min_distance=d,
        ideal_cardinality=r,
        segment=segment,
        segment_length=lhs,
        length_budget=rhs,
        uniform_lhs=uniform_lhs,
        uniform_rhs=uniform_rhs,
    )


@dataclass(frozen=True)
class BallContainmentReport:
    """Weighted ball against unweighted ball at the matching radius.

    A weighted radius of r = t*max_weight + s (1 <= s <= max_weight) fits
    inside the unweighted ball of radius t+1, with set equality exactly
    when r is a multiple of max_weight.
    """

    center: tuple[int, ...]
    radius: int
    unweighted_radius: int
    weighted_ball_size: int
    unweighted_ball_size: int
    contained: bool
    equal: bool
    multiple_of_max_weight: bool

    @property
    def agrees(self) -> bool:
        return self.contained and self.equal == self.multiple_of_max_weight


def ball_containment_check(
    space: BlockSpace,
    center: Sequence[int],
    radius: int,
    *,
    brute_cap: int = DEFAULT_BRUTE_CAP,
) -> BallContainmentReport:
    """Enumerate both balls about ``center`` and compare them.

    Chain poset only; the whole space is walked, so the usual brute cap
    applies.
    """
    if not space.poset.is_chain():
        raise PreconditionError("ball containment check needs a total order")
    x = space.vector(center)
    if not isinstance(radius, int) or not 0 <= radius <= space.max_total_weight:
        raise DomainError(
            f"radius {radius!r} outside 0..{space.max_total_weight} for this space"
        )
    if space.size > brute_cap:
        raise CapacityError(
            f"space has {space.size} vectors, above the brute-force cap of {brute_cap}"
        )
    max_w = space.weight.max_weight
    if radius == 0:
        t_plus_1 = 0
    else:
        t_plus_1 = (radius - 1) // max_w + 1
    weighted = 0
    unweighted = 0
    contained = True
    for y in space.iter_vectors():
        diff = space.sub(x, y)
        in_weighted = space.wt(diff, "pwpi") <= radius
        in_unweighted = space.wt(diff, "ppi") <= t_plus_1
        weighted += in_weighted
        unweighted += in_unweighted
        if in_weighted and not in_unweighted:
            contained = False
    return BallContainmentReport(
        center=x,
        radius=radius,
        unweighted_radius=t_plus_1,
        weighted_ball_size=weighted,
        unweighted_ball_size=unweighted,
        contained=contained,
        equal=weighted == unweighted and contained,
        multiple_of_max_weight=radius % max_w == 0,
    )


def packing_radius(
    code: Code,
    mode: str = "formula",
    *,
    brute_cap: int = DEFAULT_BRUTE_CAP,
) -> int:
    """Largest radius at which balls around distinct codewords stay disjoint.

    ``formula`` scales the unweighted minimum distance: max_weight times
    (d - 1).  ``brute`` walks the space and finds the first vector pulled
    into two balls at once.  Both modes need a chain poset.
    """
    space = code.space
    if not space.poset.is_chain():
        raise PreconditionError("packing radius results need a total order")
    if code.cardinality < 2:
        raise DomainError("packing radius needs at least two codewords")
    if mode == "formula":
        return space.weight.max_weight * (min_distance(code, "ppi") - 1)
    if mode != "brute":
        raise DomainError(f"unknown mode {mode!r}, expected 'formula' or 'brute'")
    if space.size * code.cardinality > brute_cap:
        raise CapacityError(
            f"brute packing radius would cost {space.size * code.cardinality} "
            f"distance evaluations, above the cap of {brute_cap}"
        )
    words = list(code.codewords())
    tightest = None
    for z in space.iter_vectors():
        best = None
        second = None
        for c in words:
            d = space.dist(z, c, "pwpi")
            if best is None or d < best:
                best, second = d, best
            elif second is None or d < second:
                second = d
        if tightest is None or second < tightest:
            tightest = second
    assert tightest is not None
    return tightest - 1


@dataclass(frozen=True)
class MinDistanceRelation:
    """Weighted minimum distance against its chain prediction.

    The prediction is the least nonzero coordinate weight plus max_weight
    times (unweighted minimum distance - 1).  It is a theorem for linear
    codes with every block of length 1; longer blocks can break it, so the
    outcome is reported rather than enforced.
    """

    weighted_distance: int
    unweighted_distance: int
    min_nonzero_weight: int
    max_weight: int
    unit_blocks: bool

    @property
    def predicted_distance(self) -> int:
        return self.min_nonzero_weight + self.max_weight * (self.unweighted_distance - 1)

    @property
    def agrees(self) -> bool:
        return self.weighted_distance == self.predicted_distance

    @property
    def packing_radius_from_distance(self) -> int:
        return self.weighted_distance - self.min_nonzero_weight


def min_distance_relation_check(code: Code) -> MinDistanceRelation:
    """Compare a linear chain code's weighted distance with the prediction."""
    space = code.space
    if not space.poset.is_chain():
        raise PreconditionError("the minimum distance relation needs a total order")
    if code.kind != "linear":
        raise PreconditionError("the minimum distance relation is stated for linear codes")
    if code.rank == 0:
        raise DomainError("the zero code has no minimum distance")
    return MinDistanceRelation(
        weighted_distance=min_distance(code, "pwpi"),
        unweighted_distance=min_distance(code, "ppi"),
        min_nonzero_weight=space.weight.min_nonzero_weight,
        max_weight=space.weight.max_weight,
        unit_blocks=all(k == 1 for k in space.pi.block_sizes),
    )


@dataclass(frozen=True)
class ChainAnalysis:
    """Everything the chain machinery can say about a space and a code."""

    distribution: WeightDistribution
    singleton: ChainSingletonReport | None
    packing_radius_formula: int | None
    packing_radius_brute: int | None
    relation: MinDistanceRelation | None


def analyze_chain(
    space: BlockSpace,
    code: Code | None = None,
    *,
    include_brute_radius: bool = False,
    brute_cap: int = DEFAULT_BRUTE_CAP,
) -> ChainAnalysis:
    """Run the chain specializations that apply to the given inputs.

    The distribution is always computed; the code-dependent parts need a
    code with at least two words, and the distance relation additionally
    needs it to be linear.
    """
    if not space.poset.is_chain():
        raise PreconditionError("chain analysis needs a total order")
    dist = chain_distribution(space)
    singleton = None
    radius_formula = None
    radius_brute = None
    relation = None
    if code is not None:
        if code.space != space:
            raise DomainError("the code does not live in the given space")
        singleton = chain_singleton_check(code)
        radius_formula = packing_radius(code, "formula")
        if include_brute_radius:
            radius_brute = packing_radius(code, "brute", brute_cap=brute_cap)
        if code.kind == "linear":
            relation = min_distance_relation_check(code)
    return ChainAnalysis(
        distribution=dist,
        singleton=singleton,
        packing_radius_formula=radius_formula,
        packing_radius_brute=radius_brute,
        relation=relation,
    )
