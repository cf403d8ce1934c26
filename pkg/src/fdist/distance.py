"""Fuzzy distance between two fuzzy sets, itself a fuzzy set.

The distance between two focal elements is the set of differences
between their points: directional keeps the sign of b - a, the plain
distance takes absolute values. Pairing the two mass assignments' focal
elements is a choice of joint distribution over cells:

* PRODUCT treats them as independent,
* DIAGONAL pairs level slices bottom-up after aligning boundaries,
* ANTIDIAGONAL pairs the lowest slice of one with the highest of the
  other; for uniform slicings this is slice k against slice n+1-k.

Diagonal pairings need a level ordering, so they slice their inputs;
distances between cells of the empty set stay on the empty set.
"""

from dataclasses import dataclass
from enum import Enum
from typing import Callable, Optional, Union

from .intervals import EMPTY, Interval, IntervalUnion
from .mass import (
    MassAssignment,
    NumericFuzzySet,
    PiecewiseShape,
    SlicedAssignment,
    align_levels,
    fuzzy_from_mass,
    slice_shape,
)

DEFAULT_SLICES = 100

CellOp = Callable[[IntervalUnion, IntervalUnion], IntervalUnion]
DistanceInput = Union[PiecewiseShape, MassAssignment, SlicedAssignment]


class Strategy(Enum):
    PRODUCT = "product"
    DIAGONAL = "diagonal"
    ANTIDIAGONAL = "antidiagonal"


def cell_directional(a: IntervalUnion, b: IntervalUnion) -> IntervalUnion:
    """{y - x : x in a, y in b}; empty if either side is empty."""
    if a.is_empty or b.is_empty:
        return EMPTY
    return IntervalUnion(
        tuple(
            Interval(q.lo - p.hi, q.hi - p.lo)
            for p in a.parts
            for q in b.parts
        )
    )


def cell_nondirectional(a: IntervalUnion, b: IntervalUnion) -> IntervalUnion:
    """{|y - x| : x in a, y in b}; empty if either side is empty."""
    if a.is_empty or b.is_empty:
        return EMPTY
    folded = []
    for p in a.parts:
        for q in b.parts:
            lo, hi = q.lo - p.hi, q.hi - p.lo
            if lo >= 0:
                folded.append(Interval(lo, hi))
            elif hi <= 0:
                folded.append(Interval(-hi, -lo))
            else:
                folded.append(Interval(0, max(-lo, hi)))
    return IntervalUnion(tuple(folded))


@dataclass(frozen=True)
class DistanceResult:
    """A distance mass assignment with its membership function."""

    mass: MassAssignment
    fuzzy: NumericFuzzySet

    @classmethod
    def from_mass(cls, m: MassAssignment) -> "DistanceResult":
        return cls(m, fuzzy_from_mass(m))


def assign_product(
    m_a: MassAssignment, m_b: MassAssignment, cell: CellOp = cell_nondirectional
) -> DistanceResult:
    entries = [
        (cell(fa, fb), ma * mb)
        for fa, ma in m_a.entries
        for fb, mb in m_b.entries
    ]
    return DistanceResult.from_mass(MassAssignment(entries))


def _paired(a: SlicedAssignment, b: SlicedAssignment, cell: CellOp) -> DistanceResult:
    if a.boundaries() != b.boundaries():
        raise ValueError("slice levels misaligned; align_levels both inputs first")
    entries = [
        (cell(sa.focal, sb.focal), sa.mass) for sa, sb in zip(a.slices, b.slices)
    ]
    return DistanceResult.from_mass(MassAssignment(entries))


def assign_diagonal(
    a: SlicedAssignment, b: SlicedAssignment, cell: CellOp = cell_nondirectional
) -> DistanceResult:
    """Pair equal level slices: bottom with bottom, top with top."""
    a2, b2 = align_levels(a, b)
    return _paired(a2, b2, cell)


def assign_antidiagonal(
    a: SlicedAssignment, b: SlicedAssignment, cell: CellOp = cell_nondirectional
) -> DistanceResult:
    """Pair opposite level slices: bottom of a with top of b. Implemented
    by reversing b's slice stack before aligning, which both keeps the
    marginals exact for non-uniform level partitions and reduces to
    pairing slice k with slice n+1-k when all slices have equal height."""
    a2, b2 = align_levels(a, b.reversed_levels())
    return _paired(a2, b2, cell)


def _as_sliced(x: DistanceInput, n_slices: Optional[int]) -> SlicedAssignment:
    if isinstance(x, PiecewiseShape):
        return slice_shape(x, n_slices or DEFAULT_SLICES)
    if isinstance(x, MassAssignment):
        return SlicedAssignment.from_mass(x)
    if isinstance(x, SlicedAssignment):
        return x
    raise TypeError(f"cannot take distances over {type(x).__name__}")


def _as_mass(x: DistanceInput, n_slices: Optional[int]) -> MassAssignment:
    if isinstance(x, PiecewiseShape):
        return slice_shape(x, n_slices or DEFAULT_SLICES).to_mass()
    if isinstance(x, MassAssignment):
        return x
    if isinstance(x, SlicedAssignment):
        return x.to_mass()
    raise TypeError(f"cannot take distances over {type(x).__name__}")


def resolve_strategy(
    ma: MassAssignment, mb: MassAssignment, strategy: Optional[Strategy] = None
) -> Strategy:
    """The strategy actually used: the explicit choice, else DIAGONAL for
    normal inputs and PRODUCT when either carries empty-set mass, since
    level pairing against the empty set discards information that
    independent routing keeps."""
    if strategy is not None:
        return strategy
    return Strategy.DIAGONAL if ma.is_normal and mb.is_normal else Strategy.PRODUCT


def distance(
    a: DistanceInput,
    b: DistanceInput,
    *,
    directional: bool = False,
    strategy: Optional[Strategy] = None,
    n_slices: Optional[int] = None,
) -> DistanceResult:
    """Distance between two fuzzy sets given as shapes, mass assignments,
    or sliced assignments. Shapes are sliced first (n_slices, default
    100)."""
    ma, mb = _as_mass(a, n_slices), _as_mass(b, n_slices)
    strategy = resolve_strategy(ma, mb, strategy)
    cell = cell_directional if directional else cell_nondirectional
    if strategy is Strategy.PRODUCT:
        return assign_product(ma, mb, cell)
    sa, sb = _as_sliced(a, n_slices), _as_sliced(b, n_slices)
    if strategy is Strategy.DIAGONAL:
        return assign_diagonal(sa, sb, cell)
    return assign_antidiagonal(sa, sb, cell)
