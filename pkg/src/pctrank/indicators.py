"""Aggregation of attributions into class counts, the I3 / R / PP indicators,
and the cross-rule ambiguity report."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

from .errors import SchemeError
from .model import DocumentSet, PRScheme
from .ranking import RankedSet, rank
from .scoring import (
    POINT_RULES,
    Attribution,
    BoundaryPolicy,
    CountingRule,
    FractionalAttribution,
    MidpointRoute,
    RoundingMode,
    attribute_all,
)


@dataclass(frozen=True)
class ClassCounts:
    """Per-class document mass; fractional under the fractional rule."""

    scheme: PRScheme
    counts: tuple[Fraction, ...]

    @property
    def total(self) -> Fraction:
        return sum(self.counts, start=Fraction(0))


def class_counts(attributions: Sequence[Attribution], scheme: PRScheme) -> ClassCounts:
    """Total per-class mass across documents (one attribution per document)."""
    counts = [Fraction(0)] * scheme.k
    for attribution in attributions:
        if isinstance(attribution, FractionalAttribution):
            if len(attribution.fractions) != scheme.k:
                raise ValueError(
                    f"attribution for {attribution.doc_id!r} has "
                    f"{len(attribution.fractions)} fractions but the scheme has "
                    f"{scheme.k} classes"
                )
            for i, fraction in enumerate(attribution.fractions):
                if fraction:
                    counts[i] += fraction
        else:
            if not (1 <= attribution.class_index <= scheme.k):
                raise ValueError(
                    f"attribution for {attribution.doc_id!r} names class "
                    f"{attribution.class_index}, outside this scheme"
                )
            counts[attribution.class_index - 1] += 1
    return ClassCounts(scheme, tuple(counts))


def i3(counts: ClassCounts) -> Fraction:
    """Weighted sum of the class counts."""
    return sum(
        (cls.weight * count for cls, count in zip(counts.scheme.classes, counts.counts)),
        start=Fraction(0),
    )


def per_doc_score(attribution: Attribution, scheme: PRScheme) -> Fraction:
    """One document's contribution to I3: its class weight, or the
    fraction-weighted sum of weights under the fractional rule."""
    if isinstance(attribution, FractionalAttribution):
        if len(attribution.fractions) != scheme.k:
            raise ValueError(
                f"attribution for {attribution.doc_id!r} does not match the scheme"
            )
        return sum(
            (fraction * cls.weight
             for fraction, cls in zip(attribution.fractions, scheme.classes)),
            start=Fraction(0),
        )
    return scheme.classes[attribution.class_index - 1].weight


def r_indicator(i3_value: Fraction, n: int) -> Fraction:
    """Size-independent indicator: I3 divided by the number of documents."""
    if n < 1:
        raise ValueError("n must be at least 1")
    return Fraction(i3_value) / n


def pp_top(counts: ClassCounts, n: int) -> Fraction:
    """Share of total document mass sitting in the top class of a 2-class scheme."""
    if counts.scheme.k != 2:
        raise SchemeError("pp_top needs a 2-class scheme such as top50 or topx")
    if n < 1:
        raise ValueError("n must be at least 1")
    return counts.counts[-1] / n


@dataclass(frozen=True)
class IndicatorResult:
    """All indicator values for one document set under one configuration."""

    scheme_name: str
    rule: CountingRule
    n: int
    i3: Fraction
    r: Fraction
    pp: Fraction | None  # only for 2-class schemes
    per_doc_scores: dict[str, Fraction]


def compute_indicators(
    ranked: RankedSet,
    scheme: PRScheme,
    rule: CountingRule,
    *,
    rounding: RoundingMode = RoundingMode.NONE,
    policy: BoundaryPolicy = BoundaryPolicy.ERROR,
    midpoint_route: MidpointRoute = MidpointRoute.EXACT,
) -> IndicatorResult:
    """Attribute every document and fold the results into the indicator set."""
    attributions = attribute_all(
        ranked, scheme, rule, rounding=rounding, policy=policy, midpoint_route=midpoint_route
    )
    counts = class_counts(attributions, scheme)
    total = i3(counts)
    scores = {a.doc_id: per_doc_score(a, scheme) for a in attributions}
    pp = pp_top(counts, ranked.n) if scheme.k == 2 else None
    return IndicatorResult(
        scheme.name, rule, ranked.n, total, r_indicator(total, ranked.n), pp, scores
    )


def grouped_indicators(
    sets: Mapping[str, DocumentSet],
    scheme: PRScheme,
    rule: CountingRule,
    *,
    rounding: RoundingMode = RoundingMode.NONE,
    policy: BoundaryPolicy = BoundaryPolicy.ERROR,
    midpoint_route: MidpointRoute = MidpointRoute.EXACT,
) -> dict[str, IndicatorResult]:
    """Indicators per group, computed independently (no cross-group pooling);
    keys come back in sorted order."""
    return {
        key: compute_indicators(
            rank(sets[key]),
            scheme,
            rule,
            rounding=rounding,
            policy=policy,
            midpoint_route=midpoint_route,
        )
        for key in sorted(sets)
    }


@dataclass(frozen=True)
class BoundaryFlag:
    """A point rule landing a document exactly on an interior class boundary."""

    rule: CountingRule
    doc_id: str
    quantile: Fraction
    boundary: Fraction
    interval_low: Fraction
    interval_high: Fraction


@dataclass(frozen=True)
class RuleDisagreement:
    """A document whose class assignment differs between point rules."""

    doc_id: str
    classes: dict[CountingRule, int]


@dataclass(frozen=True)
class AmbiguityReport:
    """Boundary hits and cross-rule class disagreements for one ranked set.

    Flags cover all three point rules; a document appears here exactly when
    some rule's point landed on an interior boundary or when two rules put it
    in different classes. Fractional class counts ride along for reference.
    """

    scheme: PRScheme
    flags: tuple[BoundaryFlag, ...]
    disagreements: tuple[RuleDisagreement, ...]
    fractional_counts: ClassCounts

    def flags_for(self, rule: CountingRule) -> tuple[BoundaryFlag, ...]:
        return tuple(flag for flag in self.flags if flag.rule is rule)

    @property
    def flag_counts(self) -> dict[CountingRule, int]:
        return {rule: len(self.flags_for(rule)) for rule in POINT_RULES}


def compare_rules(
    ranked: RankedSet,
    scheme: PRScheme,
    *,
    rounding: RoundingMode = RoundingMode.NONE,
    midpoint_route: MidpointRoute = MidpointRoute.EXACT,
) -> AmbiguityReport:
    """Run all three point rules side by side and collect the trouble spots.

    Classes are assigned under the 'lower' policy so the comparison can proceed
    across the very boundary cases it exists to surface; each hit is still
    flagged with the boundary it sat on. Fractional counts are attached for
    reference.
    """
    per_rule = {
        rule: attribute_all(
            ranked,
            scheme,
            rule,
            rounding=rounding,
            policy=BoundaryPolicy.LOWER,
            midpoint_route=midpoint_route,
        )
        for rule in POINT_RULES
    }
    flags: list[BoundaryFlag] = []
    for rule in POINT_RULES:
        for attribution in per_rule[rule]:
            if attribution.ambiguous:
                interval = ranked.interval_of[attribution.doc_id]
                flags.append(
                    BoundaryFlag(
                        rule,
                        attribution.doc_id,
                        attribution.quantile,
                        attribution.boundary_hit,
                        interval.low,
                        interval.high,
                    )
                )
    disagreements: list[RuleDisagreement] = []
    for position, doc_id in enumerate(ranked.doc_ids_in_rank_order()):
        classes = {rule: per_rule[rule][position].class_index for rule in POINT_RULES}
        if len(set(classes.values())) > 1:
            disagreements.append(RuleDisagreement(doc_id, classes))
    fractional = class_counts(
        attribute_all(ranked, scheme, CountingRule.FRACTIONAL), scheme
    )
    return AmbiguityReport(scheme, tuple(flags), tuple(disagreements), fractional)
