"""Input parsing and output rendering for the command line tools.

Machine formats (csv, json) carry rationals exclusively as exact "p/q" strings
so downstream consumers never see float drift; decimal and percent renderings
appear only in the human table format. Output is deterministic: groups sort by
key, documents come in rank order, columns are fixed per configuration.
"""

from __future__ import annotations

import csv
import io
import json
import math
import re
import sys
from decimal import ROUND_HALF_UP, Context, Decimal
from fractions import Fraction
from pathlib import Path
from typing import Sequence, TextIO

from .errors import DataError
from .indicators import (
    AmbiguityReport,
    IndicatorResult,
    per_doc_score,
)
from .model import (
    CitationRecord,
    DocumentSet,
    PRScheme,
    format_fraction,
    scheme_to_document,
    theoretical_total,
)
from .ranking import RankedSet
from .scoring import (
    POINT_RULES,
    Attribution,
    BoundaryPolicy,
    CountingRule,
    FractionalAttribution,
    MidpointRoute,
    PointAttribution,
    RoundingMode,
)

SCHEMA_VERSION = "1"
DEFAULT_GROUP = "default"
DEFAULT_PRECISION = 4
PERCENT_DECIMALS = 2

_CITATIONS_RE = re.compile(r"^[0-9]+$")
_KNOWN_COLUMNS = ("id", "citations", "group")


# ---------------------------------------------------------------------------
# display helpers

def decimal_str(value: Fraction, precision: int = DEFAULT_PRECISION) -> str:
    """Decimal rendering with `precision` significant digits, display only.

    Half-up rounding; trailing zeros trimmed. Never feeds back into computation.
    """
    if value == 0:
        return "0"
    context = Context(prec=max(1, precision), rounding=ROUND_HALF_UP)
    quotient = context.divide(Decimal(value.numerator), Decimal(value.denominator))
    text = format(quotient, "f")
    if "." in text:
        text = text.rstrip("0").rstrip(".")
    return text


def percent_str(value: Fraction, decimals: int = PERCENT_DECIMALS) -> str:
    """Quantile rendered as a percentage, trimmed ("2/5" -> "40%", "1/3" -> "33.33%")."""
    scale = 10 ** decimals
    units = math.floor(value * 100 * scale + Fraction(1, 2))
    whole, part = divmod(units, scale)
    if part:
        digits = f"{part:0{decimals}d}".rstrip("0")
        return f"{whole}.{digits}%"
    return f"{whole}%"


def interval_percent_str(low: Fraction, high: Fraction) -> str:
    return f"{percent_str(low)}–{percent_str(high)}"


def _exact_and_decimal(value: Fraction, precision: int) -> str:
    return f"{format_fraction(value)} ({decimal_str(value, precision)})"


# ---------------------------------------------------------------------------
# input

def read_records(source: str | Path | TextIO) -> list[CitationRecord]:
    """Read citation records from delimited text or a JSON document.

    `source` is a path, "-" for stdin, or an open text stream. A leading '['
    or '{' marks JSON (a list of records or {"documents": [...]}); anything
    else is delimited text with a header row naming the columns id, citations
    and optionally group, delimited by comma or tab (sniffed from the header).
    """
    text = _read_text(source)
    stripped = text.lstrip()
    if not stripped:
        raise DataError("input is empty")
    if stripped[0] in "[{":
        return _records_from_json(text)
    return _records_from_delimited(text)


def partition_by_group(records: Sequence[CitationRecord]) -> dict[str, DocumentSet]:
    """One DocumentSet per group key; records without a group go to "default"."""
    buckets: dict[str, list[CitationRecord]] = {}
    for record in records:
        buckets.setdefault(record.group or DEFAULT_GROUP, []).append(record)
    return {key: DocumentSet(tuple(buckets[key])) for key in sorted(buckets)}


def _read_text(source: str | Path | TextIO) -> str:
    if hasattr(source, "read"):
        return source.read()
    if source == "-":
        return sys.stdin.read()
    try:
        return Path(source).read_text()
    except OSError as exc:
        raise DataError(f"cannot read input {source}: {exc}") from None


def _records_from_delimited(text: str) -> list[CitationRecord]:
    lines = text.splitlines()
    delimiter = "\t" if "\t" in lines[0] else ","
    rows = csv.reader(lines, delimiter=delimiter)
    header = [cell.strip().lower() for cell in next(rows)]
    unknown = [name for name in header if name not in _KNOWN_COLUMNS]
    if unknown:
        raise DataError(f"unknown column(s): {', '.join(unknown)}", line=1)
    if len(set(header)) != len(header):
        raise DataError("repeated column name in header", line=1)
    if "id" not in header or "citations" not in header:
        raise DataError("header must name the id and citations columns", line=1)
    position = {name: header.index(name) for name in header}

    records: list[CitationRecord] = []
    seen: dict[str, int] = {}
    for line_no, row in enumerate(rows, start=2):
        if not row or all(not cell.strip() for cell in row):
            continue
        if len(row) != len(header):
            raise DataError(
                f"expected {len(header)} columns, found {len(row)}", line=line_no
            )
        doc_id = row[position["id"]].strip()
        if not doc_id:
            raise DataError("empty document id", line=line_no)
        if doc_id in seen:
            raise DataError(
                f"duplicate document id {doc_id!r} (first seen on line {seen[doc_id]})",
                line=line_no,
            )
        seen[doc_id] = line_no
        raw_citations = row[position["citations"]].strip()
        if not _CITATIONS_RE.match(raw_citations):
            raise DataError(
                f"citations must be a base-10 non-negative integer, got {raw_citations!r}",
                line=line_no,
            )
        group = row[position["group"]].strip() if "group" in position else ""
        records.append(CitationRecord(doc_id, int(raw_citations), group or None))
    if not records:
        raise DataError("no data rows in input")
    return records


def _records_from_json(text: str) -> list[CitationRecord]:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DataError(f"invalid JSON input: {exc}") from None
    rows = doc.get("documents") if isinstance(doc, dict) else doc
    if not isinstance(rows, list):
        raise DataError('JSON input must be a list of records or {"documents": [...]}')
    records: list[CitationRecord] = []
    seen: set[str] = set()
    for pos, row in enumerate(rows, start=1):
        where = f"document {pos}"
        if not isinstance(row, dict):
            raise DataError(f"{where}: expected an object")
        unknown = sorted(set(row) - set(_KNOWN_COLUMNS))
        if unknown:
            raise DataError(f"{where}: unknown field(s): {', '.join(unknown)}")
        doc_id = row.get("id")
        if not isinstance(doc_id, str) or not doc_id:
            raise DataError(f"{where}: id must be a non-empty string")
        if doc_id in seen:
            raise DataError(f"{where}: duplicate document id {doc_id!r}")
        seen.add(doc_id)
        citations = row.get("citations")
        if isinstance(citations, bool) or not isinstance(citations, int) or citations < 0:
            raise DataError(f"{where}: citations must be a non-negative integer")
        group = row.get("group")
        if group is not None and not isinstance(group, str):
            raise DataError(f"{where}: group must be a string when present")
        records.append(CitationRecord(doc_id, citations, group or None))
    if not records:
        raise DataError("no documents in input")
    return records


# ---------------------------------------------------------------------------
# rendering plumbing

def _render_table(header: list[str], rows: list[list[str]]) -> list[str]:
    widths = [
        max(len(header[i]), *(len(row[i]) for row in rows)) if rows else len(header[i])
        for i in range(len(header))
    ]
    lines = ["  ".join(header[i].ljust(widths[i]) for i in range(len(header))).rstrip()]
    lines.append("  ".join("-" * widths[i] for i in range(len(header))))
    for row in rows:
        lines.append("  ".join(row[i].ljust(widths[i]) for i in range(len(header))).rstrip())
    return lines


def _csv_text(header: list[str], rows: list[list[str]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buffer.getvalue()


def _json_text(payload: dict) -> str:
    return json.dumps(payload, indent=2) + "\n"


def _scheme_payload(scheme: PRScheme) -> dict:
    return scheme_to_document(scheme)


def _citations_of(ranked: RankedSet) -> dict[str, int]:
    return {record.doc_id: record.citations for record in ranked.source.records}


def _percentile_exact(attribution: PointAttribution) -> Fraction:
    """The percentile value an attribution used: the rounded integer, or the
    exact unrounded 100*q when no rounding applied."""
    if attribution.percentile is not None:
        return Fraction(attribution.percentile)
    return 100 * attribution.quantile


# ---------------------------------------------------------------------------
# attribute rendering

AttributionBatch = tuple[str, RankedSet, Sequence[Attribution]]


def render_attributions(
    batches: Sequence[AttributionBatch],
    scheme: PRScheme,
    rule: CountingRule,
    *,
    rounding: RoundingMode = RoundingMode.NONE,
    policy: BoundaryPolicy | None = None,
    midpoint_route: MidpointRoute = MidpointRoute.EXACT,
    fmt: str = "table",
    precision: int = DEFAULT_PRECISION,
) -> str:
    if rule is CountingRule.FRACTIONAL:
        return _render_fractional(batches, scheme, fmt, precision)
    return _render_point(batches, scheme, rule, rounding, policy, midpoint_route, fmt, precision)


def _render_fractional(batches, scheme, fmt, precision) -> str:
    class_labels = [f"f_{i}" for i in range(1, scheme.k + 1)]
    if fmt == "csv":
        header = ["id", "citations", "group", "interval_low", "interval_high", "score"]
        header += class_labels
        rows = []
        for group_key, ranked, attributions in batches:
            citations = _citations_of(ranked)
            for attribution in attributions:
                interval = ranked.interval_of[attribution.doc_id]
                rows.append(
                    [
                        attribution.doc_id,
                        str(citations[attribution.doc_id]),
                        group_key,
                        format_fraction(interval.low),
                        format_fraction(interval.high),
                        format_fraction(per_doc_score(attribution, scheme)),
                    ]
                    + [format_fraction(f) for f in attribution.fractions]
                )
        return _csv_text(header, rows)
    if fmt == "json":
        groups = []
        for group_key, ranked, attributions in batches:
            citations = _citations_of(ranked)
            documents = []
            for attribution in attributions:
                interval = ranked.interval_of[attribution.doc_id]
                documents.append(
                    {
                        "id": attribution.doc_id,
                        "citations": citations[attribution.doc_id],
                        "interval": {
                            "low": format_fraction(interval.low),
                            "high": format_fraction(interval.high),
                        },
                        "score": format_fraction(per_doc_score(attribution, scheme)),
                        "fractions": [format_fraction(f) for f in attribution.fractions],
                    }
                )
            groups.append({"group": group_key, "n": ranked.n, "documents": documents})
        return _json_text(
            {
                "schema_version": SCHEMA_VERSION,
                "command": "attribute",
                "scheme": _scheme_payload(scheme),
                "rule": CountingRule.FRACTIONAL.value,
                "groups": groups,
            }
        )
    # table
    sections = []
    for group_key, ranked, attributions in batches:
        citations = _citations_of(ranked)
        rows = []
        for attribution in attributions:
            interval = ranked.interval_of[attribution.doc_id]
            rows.append(
                [
                    attribution.doc_id,
                    str(citations[attribution.doc_id]),
                    f"[{format_fraction(interval.low)}, {format_fraction(interval.high)}]",
                    interval_percent_str(interval.low, interval.high),
                    _exact_and_decimal(per_doc_score(attribution, scheme), precision),
                ]
                + [format_fraction(f) for f in attribution.fractions]
            )
        lines = [
            f"# group={group_key} n={ranked.n} scheme={scheme.name} rule=fractional"
        ]
        lines += _render_table(
            ["id", "citations", "interval", "percent", "score"] + class_labels, rows
        )
        sections.append("\n".join(lines))
    return "\n\n".join(sections) + "\n"


def _render_point(batches, scheme, rule, rounding, policy, midpoint_route, fmt, precision) -> str:
    show_endpoints = (
        rule is CountingRule.MIDPOINT and midpoint_route is MidpointRoute.ENDPOINTS
    )

    def base_cells(group_key, ranked, citations, attribution, exact_only):
        interval = ranked.interval_of[attribution.doc_id]
        weight = scheme.classes[attribution.class_index - 1].weight
        percentile = _percentile_exact(attribution)
        if exact_only:
            cells = [
                attribution.doc_id,
                str(citations[attribution.doc_id]),
                group_key,
                format_fraction(interval.low),
                format_fraction(interval.high),
                format_fraction(attribution.quantile),
                format_fraction(percentile),
            ]
        else:
            cells = [
                attribution.doc_id,
                str(citations[attribution.doc_id]),
                f"[{format_fraction(interval.low)}, {format_fraction(interval.high)}]",
                interval_percent_str(interval.low, interval.high),
                f"{format_fraction(attribution.quantile)} ({percent_str(attribution.quantile)})",
                decimal_str(percentile, precision)
                if attribution.percentile is None
                else str(attribution.percentile),
            ]
        if show_endpoints:
            pair = attribution.endpoint_percentiles
            cells.append("" if pair is None else f"{pair[0]}/{pair[1]}")
        cells += [
            str(attribution.class_index),
            format_fraction(weight),
            "true" if attribution.ambiguous else "false",
            "" if attribution.boundary_hit is None else format_fraction(attribution.boundary_hit),
        ]
        return cells

    if fmt in ("csv", "table"):
        header = (
            ["id", "citations", "group", "interval_low", "interval_high", "quantile", "percentile"]
            if fmt == "csv"
            else ["id", "citations", "interval", "percent", "quantile", "percentile"]
        )
        if show_endpoints:
            header.append("endpoint_pcts")
        header += ["class", "weight", "ambiguous", "boundary"]
        if fmt == "csv":
            rows = []
            for group_key, ranked, attributions in batches:
                citations = _citations_of(ranked)
                rows += [
                    base_cells(group_key, ranked, citations, a, True) for a in attributions
                ]
            return _csv_text(header, rows)
        sections = []
        for group_key, ranked, attributions in batches:
            citations = _citations_of(ranked)
            rows = [base_cells(group_key, ranked, citations, a, False) for a in attributions]
            meta = (
                f"# group={group_key} n={ranked.n} scheme={scheme.name} rule={rule.value}"
                f" rounding={rounding.value} route={midpoint_route.value}"
            )
            if policy is not None:
                meta += f" boundary={policy.value}"
            sections.append("\n".join([meta] + _render_table(header, rows)))
        return "\n\n".join(sections) + "\n"
    # json
    groups = []
    for group_key, ranked, attributions in batches:
        citations = _citations_of(ranked)
        documents = []
        for attribution in attributions:
            interval = ranked.interval_of[attribution.doc_id]
            entry = {
                "id": attribution.doc_id,
                "citations": citations[attribution.doc_id],
                "interval": {
                    "low": format_fraction(interval.low),
                    "high": format_fraction(interval.high),
                },
                "quantile": format_fraction(attribution.quantile),
                "percentile": format_fraction(_percentile_exact(attribution)),
                "class": attribution.class_index,
                "weight": format_fraction(scheme.classes[attribution.class_index - 1].weight),
                "ambiguous": attribution.ambiguous,
                "boundary": None
                if attribution.boundary_hit is None
                else format_fraction(attribution.boundary_hit),
            }
            if show_endpoints:
                pair = attribution.endpoint_percentiles
                entry["endpoint_percentiles"] = None if pair is None else list(pair)
            documents.append(entry)
        groups.append({"group": group_key, "n": ranked.n, "documents": documents})
    payload = {
        "schema_version": SCHEMA_VERSION,
        "command": "attribute",
        "scheme": _scheme_payload(scheme),
        "rule": rule.value,
        "rounding": rounding.value,
        "midpoint_route": midpoint_route.value,
        "groups": groups,
    }
    if policy is not None:
        payload["boundary_policy"] = policy.value
    return _json_text(payload)


# ---------------------------------------------------------------------------
# indicators rendering

def render_indicators(
    batches: Sequence[tuple[str, IndicatorResult]],
    scheme: PRScheme,
    *,
    fmt: str = "table",
    precision: int = DEFAULT_PRECISION,
) -> str:
    def totals(result: IndicatorResult) -> tuple[Fraction, Fraction]:
        expected = theoretical_total(scheme, result.n)
        return expected, result.i3 - expected

    if fmt == "csv":
        header = ["group", "n", "scheme", "rule", "i3", "r", "pp", "theoretical", "difference"]
        rows = []
        for group_key, result in batches:
            expected, difference = totals(result)
            rows.append(
                [
                    group_key,
                    str(result.n),
                    result.scheme_name,
                    result.rule.value,
                    format_fraction(result.i3),
                    format_fraction(result.r),
                    "" if result.pp is None else format_fraction(result.pp),
                    format_fraction(expected),
                    format_fraction(difference),
                ]
            )
        return _csv_text(header, rows)
    if fmt == "json":
        groups = []
        for group_key, result in batches:
            expected, difference = totals(result)
            groups.append(
                {
                    "group": group_key,
                    "n": result.n,
                    "i3": format_fraction(result.i3),
                    "r": format_fraction(result.r),
                    "pp": None if result.pp is None else format_fraction(result.pp),
                    "theoretical": format_fraction(expected),
                    "difference": format_fraction(difference),
                }
            )
        rule = batches[0][1].rule.value if batches else None
        return _json_text(
            {
                "schema_version": SCHEMA_VERSION,
                "command": "indicators",
                "scheme": _scheme_payload(scheme),
                "rule": rule,
                "groups": groups,
            }
        )
    header = ["group", "n", "i3", "r", "pp", "theoretical", "difference"]
    rows = []
    for group_key, result in batches:
        expected, difference = totals(result)
        rows.append(
            [
                group_key,
                str(result.n),
                _exact_and_decimal(result.i3, precision),
                _exact_and_decimal(result.r, precision),
                "-" if result.pp is None else _exact_and_decimal(result.pp, precision),
                _exact_and_decimal(expected, precision),
                format_fraction(difference),
            ]
        )
    rule = batches[0][1].rule.value if batches else "-"
    meta = f"# scheme={scheme.name} rule={rule}"
    return "\n".join([meta] + _render_table(header, rows)) + "\n"


# ---------------------------------------------------------------------------
# report rendering

ReportBatch = tuple[str, RankedSet, AmbiguityReport]


def render_report(
    batches: Sequence[ReportBatch],
    scheme: PRScheme,
    *,
    rounding: RoundingMode = RoundingMode.NONE,
    midpoint_route: MidpointRoute = MidpointRoute.EXACT,
    fmt: str = "table",
    precision: int = DEFAULT_PRECISION,
) -> str:
    if fmt == "csv":
        header = [
            "group",
            "record",
            "rule",
            "id",
            "interval_low",
            "interval_high",
            "quantile",
            "boundary",
            "class_count_worse",
            "class_count_worse_or_equal",
            "class_midpoint",
            "class_index",
            "count",
        ]
        rows = []
        for group_key, _ranked, report in batches:
            for flag in report.flags:
                rows.append(
                    [
                        group_key,
                        "flag",
                        flag.rule.value,
                        flag.doc_id,
                        format_fraction(flag.interval_low),
                        format_fraction(flag.interval_high),
                        format_fraction(flag.quantile),
                        format_fraction(flag.boundary),
                        "", "", "", "", "",
                    ]
                )
            for disagreement in report.disagreements:
                rows.append(
                    [
                        group_key,
                        "disagreement",
                        "",
                        disagreement.doc_id,
                        "", "", "", "",
                        str(disagreement.classes[CountingRule.COUNT_WORSE]),
                        str(disagreement.classes[CountingRule.COUNT_WORSE_OR_EQUAL]),
                        str(disagreement.classes[CountingRule.MIDPOINT]),
                        "", "",
                    ]
                )
            for index, count in enumerate(report.fractional_counts.counts, start=1):
                rows.append(
                    [
                        group_key,
                        "fractional_count",
                        "", "", "", "", "", "", "", "", "",
                        str(index),
                        format_fraction(count),
                    ]
                )
        return _csv_text(header, rows)
    if fmt == "json":
        groups = []
        for group_key, ranked, report in batches:
            groups.append(
                {
                    "group": group_key,
                    "n": ranked.n,
                    "flags": [
                        {
                            "rule": flag.rule.value,
                            "id": flag.doc_id,
                            "quantile": format_fraction(flag.quantile),
                            "boundary": format_fraction(flag.boundary),
                            "interval": {
                                "low": format_fraction(flag.interval_low),
                                "high": format_fraction(flag.interval_high),
                            },
                        }
                        for flag in report.flags
                    ],
                    "disagreements": [
                        {
                            "id": disagreement.doc_id,
                            "classes": {
                                rule.value: disagreement.classes[rule]
                                for rule in POINT_RULES
                            },
                        }
                        for disagreement in report.disagreements
                    ],
                    "fractional_class_counts": [
                        format_fraction(c) for c in report.fractional_counts.counts
                    ],
                    "summary": {
                        "flag_counts": {
                            rule.value: count
                            for rule, count in report.flag_counts.items()
                        },
                        "disagreements": len(report.disagreements),
                    },
                }
            )
        return _json_text(
            {
                "schema_version": SCHEMA_VERSION,
                "command": "report",
                "scheme": _scheme_payload(scheme),
                "rounding": rounding.value,
                "midpoint_route": midpoint_route.value,
                "groups": groups,
            }
        )
    sections = []
    for group_key, ranked, report in batches:
        lines = [
            f"# group={group_key} n={ranked.n} scheme={scheme.name}"
            f" rounding={rounding.value} route={midpoint_route.value}"
        ]
        lines.append("boundary hits:")
        if report.flags:
            rows = [
                [
                    flag.rule.value,
                    flag.doc_id,
                    f"[{format_fraction(flag.interval_low)}, {format_fraction(flag.interval_high)}]",
                    interval_percent_str(flag.interval_low, flag.interval_high),
                    format_fraction(flag.quantile),
                    format_fraction(flag.boundary),
                ]
                for flag in report.flags
            ]
            lines += _render_table(
                ["rule", "id", "interval", "percent", "quantile", "boundary"], rows
            )
        else:
            lines.append("  none")
        lines.append("class disagreements:")
        if report.disagreements:
            rows = [
                [
                    disagreement.doc_id,
                    str(disagreement.classes[CountingRule.COUNT_WORSE]),
                    str(disagreement.classes[CountingRule.COUNT_WORSE_OR_EQUAL]),
                    str(disagreement.classes[CountingRule.MIDPOINT]),
                ]
                for disagreement in report.disagreements
            ]
            lines += _render_table(
                ["id", "count-worse", "count-worse-or-equal", "midpoint"], rows
            )
        else:
            lines.append("  none")
        counts_text = ", ".join(
            format_fraction(c) for c in report.fractional_counts.counts
        )
        lines.append(f"fractional class counts: {counts_text}")
        flag_summary = ", ".join(
            f"{rule.value}={count}" for rule, count in report.flag_counts.items()
        )
        lines.append(
            f"summary: flags [{flag_summary}], disagreements {len(report.disagreements)}"
        )
        sections.append("\n".join(lines))
    return "\n\n".join(sections) + "\n"


# ---------------------------------------------------------------------------
# scheme rendering

def render_scheme_detail(
    scheme: PRScheme, *, fmt: str = "table", precision: int = DEFAULT_PRECISION
) -> str:
    if fmt == "csv":
        header = ["index", "lower", "upper", "weight"]
        rows = [
            [str(cls.index), format_fraction(cls.lower), format_fraction(cls.upper),
             format_fraction(cls.weight)]
            for cls in scheme.classes
        ]
        return _csv_text(header, rows)
    if fmt == "json":
        payload = {
            "schema_version": SCHEMA_VERSION,
            "command": "schemes",
            **scheme_to_document(scheme),
            "classes": [
                {
                    "index": cls.index,
                    "lower": format_fraction(cls.lower),
                    "upper": format_fraction(cls.upper),
                    "weight": format_fraction(cls.weight),
                }
                for cls in scheme.classes
            ],
        }
        return _json_text(payload)
    rows = [
        [
            str(cls.index),
            f"[{format_fraction(cls.lower)}, {format_fraction(cls.upper)}"
            + ("]" if cls.index == scheme.k else ")"),
            interval_percent_str(cls.lower, cls.upper),
            format_fraction(cls.weight),
        ]
        for cls in scheme.classes
    ]
    meta = f"# scheme={scheme.name} classes={scheme.k}"
    return "\n".join([meta] + _render_table(["class", "range", "percent", "weight"], rows)) + "\n"


def render_scheme_list(schemes: Sequence[PRScheme], *, fmt: str = "table") -> str:
    if fmt == "csv":
        header = ["name", "classes"]
        rows = [[scheme.name, str(scheme.k)] for scheme in schemes]
        return _csv_text(header, rows)
    if fmt == "json":
        return _json_text(
            {
                "schema_version": SCHEMA_VERSION,
                "command": "schemes",
                "schemes": [
                    {"name": scheme.name, "classes": scheme.k} for scheme in schemes
                ],
            }
        )
    rows = []
    for scheme in schemes:
        weights = scheme.weights
        if len(weights) > 8:
            weight_text = f"{format_fraction(weights[0])} .. {format_fraction(weights[-1])}"
        else:
            weight_text = ", ".join(format_fraction(w) for w in weights)
        rows.append([scheme.name, str(scheme.k), weight_text])
    return "\n".join(_render_table(["name", "classes", "weights"], rows)) + "\n"
