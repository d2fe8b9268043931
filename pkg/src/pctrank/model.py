"""Value types: citation records, document sets, and percentile rank class schemes.

Every numeric quantity is a `fractions.Fraction`, so boundaries, quantiles and
scores stay exact end to end; nothing here passes through binary floating point.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from pathlib import Path
from typing import Sequence

from .errors import DataError, SchemeError

BUILTIN_SCHEME_NAMES = ("top50", "pr6", "pr100")


def parse_fraction(value: str | int | Fraction) -> Fraction:
    """Parse an exact fraction from "p/q", integer, or decimal notation.

    Decimal strings convert exactly ("0.05" -> 1/20). Binary floats are
    rejected outright so nothing can drift through floating point.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise ValueError(f"cannot parse {value!r} as a fraction")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, float):
        raise ValueError("refusing to convert a binary float; pass a string instead")
    if not isinstance(value, str):
        raise ValueError(f"cannot parse {value!r} as a fraction")
    try:
        return Fraction(value.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"invalid fraction {value!r}") from exc


def format_fraction(value: Fraction) -> str:
    """Exact "p/q" rendering (plain "p" for whole values); inverse of parse_fraction."""
    return str(value)


@dataclass(frozen=True)
class CitationRecord:
    """One document: an opaque id, its citation count, and an optional group key."""

    doc_id: str
    citations: int
    group: str | None = None

    def __post_init__(self):
        if not isinstance(self.doc_id, str) or not self.doc_id:
            raise DataError("document id must be a non-empty string")
        if isinstance(self.citations, bool) or not isinstance(self.citations, int):
            raise DataError(f"citations for {self.doc_id!r} must be an integer")
        if self.citations < 0:
            raise DataError(f"citations for {self.doc_id!r} must be non-negative")


@dataclass(frozen=True)
class DocumentSet:
    """An ordered, non-empty collection of citation records with unique ids."""

    records: tuple[CitationRecord, ...]

    def __post_init__(self):
        object.__setattr__(self, "records", tuple(self.records))
        if not self.records:
            raise DataError("a document set needs at least one record")
        seen: set[str] = set()
        for record in self.records:
            if record.doc_id in seen:
                raise DataError(f"duplicate document id {record.doc_id!r}")
            seen.add(record.doc_id)

    @property
    def n(self) -> int:
        return len(self.records)


@dataclass(frozen=True)
class PRClass:
    """One percentile rank class: a slice of the quantile axis plus its weight.

    The slice is half-open [lower, upper); the scheme's top class additionally
    owns the point 1. Class indices are 1-based within their scheme.
    """

    index: int
    lower: Fraction
    upper: Fraction
    weight: Fraction

    def __post_init__(self):
        if not (0 <= self.lower < self.upper <= 1):
            raise SchemeError(
                f"class {self.index}: need 0 <= lower < upper <= 1, "
                f"got [{self.lower}, {self.upper}]"
            )

    @property
    def width(self) -> Fraction:
        return self.upper - self.lower


@dataclass(frozen=True)
class PRScheme:
    """A contiguous, exhaustive partition of [0, 1] into weighted classes."""

    name: str
    classes: tuple[PRClass, ...]

    def __post_init__(self):
        object.__setattr__(self, "classes", tuple(self.classes))
        if not self.classes:
            raise SchemeError("a scheme needs at least one class")
        if self.classes[0].lower != 0:
            raise SchemeError("the first class must start at 0")
        if self.classes[-1].upper != 1:
            raise SchemeError("the last class must end at 1")
        for prev, cur in zip(self.classes, self.classes[1:]):
            if cur.lower != prev.upper:
                raise SchemeError(
                    f"classes {prev.index} and {cur.index} do not meet: "
                    f"{prev.upper} vs {cur.lower}"
                )
        for position, cls in enumerate(self.classes, start=1):
            if cls.index != position:
                raise SchemeError(f"class at position {position} carries index {cls.index}")

    @property
    def k(self) -> int:
        return len(self.classes)

    @cached_property
    def lower_bounds(self) -> tuple[Fraction, ...]:
        return tuple(cls.lower for cls in self.classes)

    @property
    def boundaries(self) -> tuple[Fraction, ...]:
        """All k+1 cut points from 0 to 1 inclusive."""
        return self.lower_bounds + (Fraction(1),)

    @property
    def interior_boundaries(self) -> tuple[Fraction, ...]:
        """Cut points strictly inside (0, 1); the only ambiguous landing spots."""
        return self.lower_bounds[1:]

    @property
    def weights(self) -> tuple[Fraction, ...]:
        return tuple(cls.weight for cls in self.classes)


def scheme_from_boundaries(
    name: str,
    boundaries: Sequence[Fraction],
    weights: Sequence[Fraction],
) -> PRScheme:
    """Build and validate a scheme from its cut points and per-class weights."""
    if len(boundaries) < 2:
        raise SchemeError("a scheme needs at least two boundaries")
    if len(weights) != len(boundaries) - 1:
        raise SchemeError(
            f"{len(boundaries)} boundaries define {len(boundaries) - 1} classes "
            f"but {len(weights)} weights were given"
        )
    bounds = [Fraction(b) for b in boundaries]
    for bound in bounds:
        if not (0 <= bound <= 1):
            raise SchemeError(f"boundary {bound} lies outside [0, 1]")
    for low, high in zip(bounds, bounds[1:]):
        if low >= high:
            raise SchemeError(f"boundaries must increase strictly; got {low} then {high}")
    classes = tuple(
        PRClass(i + 1, bounds[i], bounds[i + 1], Fraction(weights[i]))
        for i in range(len(weights))
    )
    return PRScheme(name, classes)


def topx_scheme(x: Fraction) -> PRScheme:
    """Two classes: below the top share x (weight 0) and the top share (weight 1)."""
    x = Fraction(x)
    if not (0 < x < 1):
        raise SchemeError(f"top share must lie strictly between 0 and 1, got {x}")
    return scheme_from_boundaries(
        f"topx({x})",
        (Fraction(0), 1 - x, Fraction(1)),
        (Fraction(0), Fraction(1)),
    )


def builtin_scheme(name: str) -> PRScheme:
    """Return a built-in scheme by name.

    Accepts "top50", "pr6", "pr100", and a parameterized top share as
    "topx(F)" or "topx=F" where F is an exact fraction strictly between 0 and 1.
    """
    key = name.strip()
    if key == "top50":
        return scheme_from_boundaries(
            "top50",
            (Fraction(0), Fraction(1, 2), Fraction(1)),
            (Fraction(0), Fraction(1)),
        )
    if key == "pr6":
        return scheme_from_boundaries(
            "pr6",
            (
                Fraction(0),
                Fraction(1, 2),
                Fraction(3, 4),
                Fraction(9, 10),
                Fraction(19, 20),
                Fraction(99, 100),
                Fraction(1),
            ),
            tuple(Fraction(w) for w in range(1, 7)),
        )
    if key == "pr100":
        bounds = tuple(Fraction(i, 100) for i in range(101))
        return scheme_from_boundaries(
            "pr100", bounds, tuple(Fraction(w) for w in range(1, 101))
        )
    if key.startswith("topx"):
        rest = key[len("topx"):].strip()
        if rest.startswith("(") and rest.endswith(")"):
            rest = rest[1:-1]
        elif rest.startswith("="):
            rest = rest[1:]
        else:
            raise SchemeError(f"unknown scheme {name!r}; write topx=1/10 or topx(1/10)")
        try:
            share = parse_fraction(rest)
        except ValueError as exc:
            raise SchemeError(f"invalid top share in {name!r}: {exc}") from None
        return topx_scheme(share)
    raise SchemeError(
        f"unknown scheme {name!r}; expected one of {', '.join(BUILTIN_SCHEME_NAMES)}, "
        "topx=<fraction>, or a custom scheme file"
    )


def theoretical_total(scheme: PRScheme, n: int) -> Fraction:
    """The weighted count total a set of n documents must reach when class mass
    is proportional to class width: n * sum(weight_k * width_k)."""
    if n < 1:
        raise ValueError("n must be at least 1")
    return n * sum((cls.weight * cls.width for cls in scheme.classes), start=Fraction(0))


_SCHEME_FIELDS = {"name", "boundaries", "weights"}


def load_custom_scheme(source: dict | str | Path, name: str | None = None) -> PRScheme:
    """Load a scheme from a JSON document or file of the form
    {"boundaries": [fraction strings], "weights": [fraction strings]}.

    Fractions parse exactly; the document round-trips bit-for-bit through
    scheme_to_document.
    """
    default_name = "custom"
    if isinstance(source, (str, Path)):
        path = Path(source)
        default_name = path.stem
        try:
            text = path.read_text()
        except OSError as exc:
            raise SchemeError(f"cannot read scheme file {path}: {exc}") from None
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as exc:
            raise SchemeError(f"scheme file {path} is not valid JSON: {exc}") from None
    else:
        doc = source
    if not isinstance(doc, dict):
        raise SchemeError("a scheme document must be a JSON object")
    unknown = sorted(set(doc) - _SCHEME_FIELDS)
    if unknown:
        raise SchemeError(f"unknown scheme field(s): {', '.join(unknown)}")
    for field in ("boundaries", "weights"):
        if field not in doc:
            raise SchemeError(f"scheme document is missing the {field!r} field")
        if not isinstance(doc[field], list):
            raise SchemeError(f"scheme field {field!r} must be a list")
    doc_name = doc.get("name", default_name)
    if not isinstance(doc_name, str) or not doc_name:
        raise SchemeError("scheme field 'name' must be a non-empty string")

    def parse_all(field: str) -> list[Fraction]:
        values = []
        for i, raw in enumerate(doc[field]):
            try:
                values.append(parse_fraction(raw))
            except ValueError as exc:
                raise SchemeError(f"{field}[{i}]: {exc}") from None
        return values

    return scheme_from_boundaries(
        name or doc_name, parse_all("boundaries"), parse_all("weights")
    )


def scheme_to_document(scheme: PRScheme) -> dict:
    """Serialize a scheme to the JSON document form load_custom_scheme reads."""
    return {
        "name": scheme.name,
        "boundaries": [format_fraction(b) for b in scheme.boundaries],
        "weights": [format_fraction(w) for w in scheme.weights],
    }
