"""Shared builders and brute-force oracles for the test suite."""

import math
import random
from fractions import Fraction

from hypothesis import strategies as st

from fdist.intervals import EMPTY, IntervalUnion, iu
from fdist.mass import MassAssignment, PiecewiseShape

F = Fraction


def frac(lo=-10, hi=10, den=4):
    """Fractions k/den within [lo, hi]."""
    return st.integers(lo * den, hi * den).map(lambda k: F(k, den))


@st.composite
def interval_unions(draw, max_parts=3, lo=-10, hi=10, den=4, allow_empty=False):
    n = draw(st.integers(0 if allow_empty else 1, max_parts))
    parts = []
    for _ in range(n):
        a = draw(frac(lo, hi, den))
        b = draw(frac(lo, hi, den))
        if a > b:
            a, b = b, a
        parts.append((a, b))
    return iu(*parts)


@st.composite
def numeric_masses(draw, max_focals=4, allow_empty=True, lo=-8, hi=8):
    k = draw(st.integers(1, max_focals))
    focals = [
        draw(interval_unions(max_parts=2, lo=lo, hi=hi, allow_empty=allow_empty))
        for _ in range(k)
    ]
    weights = [draw(st.integers(1, 8)) for _ in range(k)]
    total = sum(weights)
    return MassAssignment((f, F(w, total)) for f, w in zip(focals, weights))


@st.composite
def nested_masses(draw, allow_empty=True):
    """Masses whose nonempty focal elements form a chain under inclusion."""
    lo = draw(frac(-8, 0, 2))
    hi = draw(frac(2, 8, 2))
    depth = draw(st.integers(1, 4))
    chain = [(lo, hi)]
    for _ in range(depth - 1):
        lo2 = draw(frac(0, 2, 4)) + chain[-1][0]
        hi2 = chain[-1][1] - draw(frac(0, 2, 4))
        if lo2 > hi2:
            break
        if (lo2, hi2) != chain[-1]:
            chain.append((lo2, hi2))
    weights = [draw(st.integers(1, 4)) for _ in chain]
    empty_w = draw(st.integers(0, 4)) if allow_empty else 0
    total = sum(weights) + empty_w
    entries = [(iu(p), F(w, total)) for p, w in zip(chain, weights)]
    if empty_w:
        entries.append((EMPTY, F(empty_w, total)))
    return MassAssignment(entries)


def random_triangle(rng: random.Random, left=0, right=40, isosceles=True):
    """Triangle shape with quarter-grid vertices and peak 1."""
    a = F(rng.randint(left * 4, right * 4 - 8), 4)
    half = F(rng.randint(1, 8), 4)
    if isosceles:
        return PiecewiseShape([(a, 0), (a + half, 1), (a + 2 * half, 0)])
    other = F(rng.randint(1, 8), 4)
    while other == half:
        other = F(rng.randint(1, 8), 4)
    return PiecewiseShape([(a, 0), (a + half, 1), (a + half + other, 0)])


def scaled_triangle(shape: PiecewiseShape, scale: Fraction, shift: Fraction):
    """Similar copy: x -> scale*x + shift, memberships unchanged."""
    return PiecewiseShape([(scale * x + shift, m) for x, m in shape.vertices])


def shifted_shape(shape: PiecewiseShape, shift: Fraction):
    return PiecewiseShape([(x + shift, m) for x, m in shape.vertices])


# ---------------------------------------------------------------------------
# brute-force oracles

GRID = F(1, 20)


def grid_points(u: IntervalUnion, step: Fraction = GRID):
    """All multiples of step inside the union (endpoints included when
    they sit on the grid, which generated test data guarantees)."""
    pts = []
    for part in u.parts:
        k = math.ceil(part.lo / step)
        top = math.floor(part.hi / step)
        pts.extend(step * i for i in range(k, top + 1))
    return pts


def oracle_differences(a: IntervalUnion, b: IntervalUnion, directional: bool):
    """The set {y - x} (or {|y - x|}) over grid samples of a and b."""
    xs = grid_points(a)
    ys = grid_points(b)
    if directional:
        return sorted({y - x for x in xs for y in ys})
    return sorted({abs(y - x) for x in xs for y in ys})


def check_cell_against_grid(result: IntervalUnion, diffs, step: Fraction = GRID):
    """Every sampled difference must land in the result; every result
    part must be witnessed and endpoint-tight to within one grid step."""
    for d in diffs:
        assert result.contains_point(d), f"difference {d} outside {result}"
    for part in result.parts:
        inside = [d for d in diffs if part.lo <= d <= part.hi]
        assert inside, f"part {part} of {result} has no witness"
        assert min(inside) - part.lo <= step
        assert part.hi - max(inside) <= step
