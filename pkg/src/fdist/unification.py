"""Semantic unification: how well a claim matches fuzzy evidence.

Each pair of focal elements (one from the claim A, one from the evidence
G) supports a truth label. Routing the two assignments' masses through
the label table gives a truth assignment. Product routing treats the
assignments as independent; maximal routing picks the joint distribution
over the label table that is lexicographically most informative.
"""

from enum import Enum
from fractions import Fraction
from typing import Sequence

from . import exactlp
from .intervals import DEFAULT_TOLERANCE, as_fraction, format_fraction
from .mass import Focal, MassAssignment, focal_is_empty, focal_intersects, focal_issuperset

ZERO = Fraction(0)


class TruthLabel(Enum):
    TRUE = "t"
    FALSE = "f"
    BOTH = "ft"
    UNKNOWN = "empty"

    def __str__(self):
        return {"t": "{t}", "f": "{f}", "ft": "{f,t}", "empty": "[]"}[self.value]


DEFAULT_ORDER = (TruthLabel.BOTH, TruthLabel.TRUE, TruthLabel.FALSE, TruthLabel.UNKNOWN)


def truth_cell(a: Focal, g: Focal) -> TruthLabel:
    """Label for claim focal a against evidence focal g.

    Empty evidence tells us nothing about a non-empty claim (UNKNOWN)
    and trivially confirms an empty one (TRUE). Otherwise: containment
    of the evidence proves the claim, disjointness refutes it, partial
    overlap leaves both possibilities open (BOTH)."""
    if focal_is_empty(g):
        return TruthLabel.TRUE if focal_is_empty(a) else TruthLabel.UNKNOWN
    if focal_is_empty(a):
        return TruthLabel.BOTH
    if focal_issuperset(a, g):
        return TruthLabel.TRUE
    if not focal_intersects(a, g):
        return TruthLabel.FALSE
    return TruthLabel.BOTH


class TruthAssignment:
    """Mass over the four truth labels, summing to 1."""

    __slots__ = ("masses",)

    def __init__(self, masses, *, tolerance: Fraction = DEFAULT_TOLERANCE):
        acc = {label: ZERO for label in TruthLabel}
        for label, mass in dict(masses).items():
            acc[TruthLabel(label)] = as_fraction(mass)
        if any(m < 0 for m in acc.values()):
            raise ValueError("negative truth mass")
        total = sum(acc.values(), ZERO)
        if abs(total - 1) > tolerance:
            raise ValueError(f"truth masses sum to {total}, expected 1")
        object.__setattr__(self, "masses", acc)

    def __setattr__(self, name, value):
        raise AttributeError("TruthAssignment is immutable")

    def __getitem__(self, label: TruthLabel) -> Fraction:
        return self.masses[TruthLabel(label)]

    def as_tuple(self, order: Sequence[TruthLabel] = DEFAULT_ORDER) -> tuple:
        return tuple(self.masses[l] for l in order)

    def __eq__(self, other):
        return isinstance(other, TruthAssignment) and self.masses == other.masses

    def __hash__(self):
        return hash(tuple(sorted((l.value, m) for l, m in self.masses.items())))

    def __repr__(self):
        body = ", ".join(
            f"{label}:{format_fraction(mass)}"
            for label, mass in self.masses.items()
            if mass
        )
        return f"TruthAssignment({body or '0'})"


def unify_product(m_a: MassAssignment, m_g: MassAssignment) -> TruthAssignment:
    """Independent routing: each cell gets the product of its marginals."""
    acc = {label: ZERO for label in TruthLabel}
    for fa, ma in m_a.entries:
        for fg, mg in m_g.entries:
            acc[truth_cell(fa, fg)] += ma * mg
    return TruthAssignment(acc)


def unify_maximal(
    m_a: MassAssignment,
    m_g: MassAssignment,
    order: Sequence[TruthLabel] = DEFAULT_ORDER,
) -> TruthAssignment:
    """Most-informative routing: over all joint mass tables with the two
    assignments as marginals, lexicographically maximize the label totals
    in the given preference order (BOTH, then TRUE, then FALSE, then
    UNKNOWN by default). Solved exactly; only label totals are returned,
    since optimal tables need not be unique."""
    order = tuple(order)
    if sorted(order, key=lambda l: l.value) != sorted(TruthLabel, key=lambda l: l.value):
        raise ValueError("order must list each truth label exactly once")

    # scale to exact marginals so the transportation problem is balanced
    a_entries = [(f, m / m_a.total) for f, m in m_a.entries]
    g_entries = [(f, m / m_g.total) for f, m in m_g.entries]
    na, ng = len(a_entries), len(g_entries)
    nvars = na * ng

    labels = [
        truth_cell(fa, fg) for fa, _ in a_entries for fg, _ in g_entries
    ]
    rows = []
    rhs = []
    for i, (_, ma) in enumerate(a_entries):
        row = [ZERO] * nvars
        for j in range(ng):
            row[i * ng + j] = Fraction(1)
        rows.append(row)
        rhs.append(ma)
    for j, (_, mg) in enumerate(g_entries):
        row = [ZERO] * nvars
        for i in range(na):
            row[i * ng + j] = Fraction(1)
        rows.append(row)
        rhs.append(mg)

    objectives = [
        [Fraction(1) if labels[v] == label else ZERO for v in range(nvars)]
        for label in order
    ]
    values, _ = exactlp.lex_maximize(objectives, rows, rhs)
    return TruthAssignment(dict(zip(order, values)))
