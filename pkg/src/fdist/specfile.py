"""Input documents describing named fuzzy sets, and result serialization.

The document is JSON: {"sets": [...]}, one object per set with a unique
"name" and a "kind" of "points", "discrete", or "mass":

    {"name": "A",  "kind": "points",
     "vertices": [[1, 0], [3, 1], [5, 0]], "slices": 2}
    {"name": "claim", "kind": "discrete",
     "grades": {"a": 1, "b": "0.7", "c": "0.2"}}
    {"name": "mA", "kind": "mass",
     "entries": [{"focal": [[1, 5]], "mass": "0.5"},
                 {"focal": [],      "mass": "0.5"}]}

Numbers may be JSON numbers or strings; decimal literals parse exactly
(0.1 means one tenth) and strings also accept fraction syntax ("1/16").
A focal element is a list of [lo, hi] interval pairs, a list of string
labels, or [] for the empty set. The optional "slices" field on a
points set names its preferred slicing resolution.

Serialization uses canonical exact number strings, so emitted mass
documents re-parse to equal values (round-trip fidelity).
"""

import json
from dataclasses import dataclass
from decimal import Decimal, InvalidOperation
from fractions import Fraction
from typing import Optional, Union

from .intervals import DEFAULT_TOLERANCE, IntervalUnion, as_fraction, format_fraction
from .mass import (
    DiscreteFuzzySet,
    Focal,
    MassAssignment,
    NumericFuzzySet,
    PiecewiseShape,
)
from .unification import TruthAssignment, TruthLabel

KINDS = ("points", "discrete", "mass")

SpecValue = Union[PiecewiseShape, DiscreteFuzzySet, MassAssignment]


class SpecError(ValueError):
    """Malformed input document; the message names the offending field."""

    def __init__(self, path: str, message: str):
        super().__init__(f"{path}: {message}")
        self.path = path


@dataclass(frozen=True)
class SpecSet:
    """One named fuzzy set from an input document."""

    name: str
    kind: str
    value: SpecValue
    slices: Optional[int] = None


def _parse_number(raw: str) -> Fraction:
    try:
        return Fraction(Decimal(raw))
    except InvalidOperation:
        return Fraction(raw)


def _number(value, path: str) -> Fraction:
    if isinstance(value, bool):
        raise SpecError(path, "expected a number, got a boolean")
    try:
        return as_fraction(value)
    except (TypeError, ValueError) as exc:
        raise SpecError(path, str(exc)) from None


def _focal(value, path: str) -> Focal:
    if not isinstance(value, list):
        raise SpecError(path, "focal element must be a list")
    if not value:
        return IntervalUnion()
    if all(isinstance(v, str) for v in value):
        return frozenset(value)
    parts = []
    for i, pair in enumerate(value):
        here = f"{path}[{i}]"
        if isinstance(pair, str):
            raise SpecError(here, "cannot mix labels and intervals")
        if not isinstance(pair, list) or len(pair) != 2:
            raise SpecError(here, "expected an [lo, hi] pair")
        lo, hi = (_number(v, here) for v in pair)
        if lo > hi:
            raise SpecError(here, f"interval endpoints out of order: {lo} > {hi}")
        parts.append((lo, hi))
    return IntervalUnion.from_pairs(parts)


def _expect_keys(obj: dict, path: str, required: set, optional: set = frozenset()):
    missing = required - obj.keys()
    if missing:
        raise SpecError(path, f"missing field {sorted(missing)[0]!r}")
    unknown = obj.keys() - required - optional
    if unknown:
        raise SpecError(path, f"unknown field {sorted(unknown)[0]!r}")


def _parse_set(obj, path: str, tolerance: Fraction) -> SpecSet:
    if not isinstance(obj, dict):
        raise SpecError(path, "each set must be an object")
    _expect_keys(obj, path, {"name", "kind"}, {"vertices", "grades", "entries", "slices"})
    name = obj["name"]
    if not isinstance(name, str) or not name:
        raise SpecError(f"{path}.name", "name must be a non-empty string")
    kind = obj["kind"]
    if kind not in KINDS:
        raise SpecError(f"{path}.kind", f"kind must be one of {', '.join(KINDS)}")

    slices = obj.get("slices")
    if slices is not None:
        if kind != "points":
            raise SpecError(f"{path}.slices", "slices applies only to points sets")
        if isinstance(slices, bool) or not isinstance(slices, int) or slices < 1:
            raise SpecError(f"{path}.slices", "slices must be a positive integer")

    field = {"points": "vertices", "discrete": "grades", "mass": "entries"}[kind]
    if field not in obj:
        raise SpecError(path, f"a {kind} set needs {field!r}")
    for other in {"vertices", "grades", "entries"} - {field}:
        if other in obj:
            raise SpecError(f"{path}.{other}", f"not allowed on a {kind} set")
    body = obj[field]
    here = f"{path}.{field}"

    if kind == "points":
        if not isinstance(body, list) or not body:
            raise SpecError(here, "vertices must be a non-empty list")
        vertices = []
        for i, pair in enumerate(body):
            if not isinstance(pair, list) or len(pair) != 2:
                raise SpecError(f"{here}[{i}]", "expected an [x, membership] pair")
            vertices.append(tuple(_number(v, f"{here}[{i}]") for v in pair))
        try:
            value: SpecValue = PiecewiseShape(vertices)
        except ValueError as exc:
            raise SpecError(here, str(exc)) from None
    elif kind == "discrete":
        if not isinstance(body, dict) or not body:
            raise SpecError(here, "grades must be a non-empty object")
        grades = {
            label: _number(g, f"{here}.{label}") for label, g in body.items()
        }
        try:
            value = DiscreteFuzzySet(grades)
        except ValueError as exc:
            raise SpecError(here, str(exc)) from None
    else:
        if not isinstance(body, list) or not body:
            raise SpecError(here, "entries must be a non-empty list")
        entries = []
        for i, entry in enumerate(body):
            row = f"{here}[{i}]"
            if not isinstance(entry, dict):
                raise SpecError(row, "each entry must be an object")
            _expect_keys(entry, row, {"focal", "mass"})
            entries.append(
                (_focal(entry["focal"], f"{row}.focal"), _number(entry["mass"], f"{row}.mass"))
            )
        try:
            value = MassAssignment(entries, tolerance=tolerance)
        except ValueError as exc:
            raise SpecError(here, str(exc)) from None

    return SpecSet(name, kind, value, slices)


def parse_document(doc, *, tolerance: Fraction = DEFAULT_TOLERANCE) -> dict:
    """Validate a decoded document; returns name -> SpecSet."""
    if not isinstance(doc, dict):
        raise SpecError("$", "document must be an object")
    _expect_keys(doc, "$", {"sets"})
    if not isinstance(doc["sets"], list):
        raise SpecError("$.sets", "sets must be a list")
    out: dict = {}
    for i, obj in enumerate(doc["sets"]):
        parsed = _parse_set(obj, f"$.sets[{i}]", tolerance)
        if parsed.name in out:
            raise SpecError(f"$.sets[{i}].name", f"duplicate set name {parsed.name!r}")
        out[parsed.name] = parsed
    return out


def parse_text(text: str, *, tolerance: Fraction = DEFAULT_TOLERANCE) -> dict:
    try:
        doc = json.loads(text, parse_float=_parse_number)
    except json.JSONDecodeError as exc:
        raise SpecError(f"$ (line {exc.lineno})", exc.msg) from None
    return parse_document(doc, tolerance=tolerance)


def load(path, *, tolerance: Fraction = DEFAULT_TOLERANCE) -> dict:
    with open(path, "r", encoding="utf-8") as handle:
        text = handle.read()
    return parse_text(text, tolerance=tolerance)


# ---------------------------------------------------------------------------
# result serialization (documents that re-parse to equal values)

def _fmt(q: Fraction) -> str:
    return format_fraction(q)


def focal_to_doc(f: Focal) -> list:
    if isinstance(f, frozenset):
        return sorted(f)
    return [[_fmt(p.lo), _fmt(p.hi)] for p in f.parts]


def mass_to_doc(m: MassAssignment, name: str = "result") -> dict:
    """A kind-"mass" set document for this assignment."""
    return {
        "name": name,
        "kind": "mass",
        "entries": [
            {"focal": focal_to_doc(f), "mass": _fmt(mass)} for f, mass in m.entries
        ],
    }


def fuzzy_to_doc(f: NumericFuzzySet) -> list:
    return [
        {
            "mu": _fmt(s.mu),
            "lo": _fmt(s.lo),
            "hi": _fmt(s.hi),
            "lo_open": s.lo_open,
            "hi_open": s.hi_open,
        }
        for s in f.steps
    ]


def truth_to_doc(t: TruthAssignment) -> dict:
    return {label.value: _fmt(t[label]) for label in TruthLabel}
