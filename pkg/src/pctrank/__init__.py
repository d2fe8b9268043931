"""Percentile rank class attribution with exact rational arithmetic.

Rank documents by citation count, give each one its exact quantile interval,
attribute it to percentile rank classes under four counting rules, and compute
the I3, R and PP indicators, flagging every point that lands exactly on a
class boundary.
"""

__version__ = "0.1.0"  # set before the imports; cli reads it back from here

from .cli import main
from .errors import (
    BoundaryAmbiguityError,
    ConfigError,
    DataError,
    PctrankError,
    SchemeError,
)
from .io import (
    DEFAULT_GROUP,
    DEFAULT_PRECISION,
    SCHEMA_VERSION,
    decimal_str,
    interval_percent_str,
    partition_by_group,
    percent_str,
    read_records,
    render_attributions,
    render_indicators,
    render_report,
    render_scheme_detail,
    render_scheme_list,
)
from .indicators import (
    AmbiguityReport,
    BoundaryFlag,
    ClassCounts,
    IndicatorResult,
    RuleDisagreement,
    class_counts,
    compare_rules,
    compute_indicators,
    grouped_indicators,
    i3,
    per_doc_score,
    pp_top,
    r_indicator,
)
from .model import (
    BUILTIN_SCHEME_NAMES,
    CitationRecord,
    DocumentSet,
    PRClass,
    PRScheme,
    builtin_scheme,
    format_fraction,
    load_custom_scheme,
    parse_fraction,
    scheme_from_boundaries,
    scheme_to_document,
    theoretical_total,
    topx_scheme,
)
from .ranking import QuantileInterval, RankedSet, TieGroup, interval_for, rank
from .scoring import (
    POINT_RULES,
    Attribution,
    BoundaryPolicy,
    CountingRule,
    FractionalAttribution,
    MidpointRoute,
    PointAttribution,
    PointClassification,
    RoundingMode,
    attribute_all,
    classify_point,
    fractional_attribution,
    point_attribution,
    point_quantile,
    to_percentile,
)

__all__ = [
    "AmbiguityReport",
    "Attribution",
    "BUILTIN_SCHEME_NAMES",
    "BoundaryAmbiguityError",
    "BoundaryFlag",
    "BoundaryPolicy",
    "CitationRecord",
    "ClassCounts",
    "ConfigError",
    "CountingRule",
    "DEFAULT_GROUP",
    "DEFAULT_PRECISION",
    "DataError",
    "DocumentSet",
    "FractionalAttribution",
    "IndicatorResult",
    "MidpointRoute",
    "POINT_RULES",
    "PRClass",
    "PRScheme",
    "PctrankError",
    "PointAttribution",
    "PointClassification",
    "QuantileInterval",
    "RankedSet",
    "RoundingMode",
    "RuleDisagreement",
    "SCHEMA_VERSION",
    "SchemeError",
    "TieGroup",
    "attribute_all",
    "builtin_scheme",
    "class_counts",
    "classify_point",
    "compare_rules",
    "compute_indicators",
    "decimal_str",
    "format_fraction",
    "fractional_attribution",
    "grouped_indicators",
    "i3",
    "interval_for",
    "interval_percent_str",
    "load_custom_scheme",
    "main",
    "parse_fraction",
    "partition_by_group",
    "per_doc_score",
    "percent_str",
    "point_attribution",
    "point_quantile",
    "pp_top",
    "r_indicator",
    "rank",
    "read_records",
    "render_attributions",
    "render_indicators",
    "render_report",
    "render_scheme_detail",
    "render_scheme_list",
    "scheme_from_boundaries",
    "scheme_to_document",
    "theoretical_total",
    "to_percentile",
    "topx_scheme",
]
