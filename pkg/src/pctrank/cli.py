"""The `pct` command line tool.

Subcommands: attribute (per-document class attribution), indicators (I3, R and
PP per group), report (boundary hits and cross-rule disagreements), schemes
(list or inspect class schemes). Exit codes: 0 success, 2 input data errors,
3 configuration/usage errors, 4 boundary policy refusals.
"""

from __future__ import annotations

import argparse
import os
import sys

from . import __version__
from .errors import BoundaryAmbiguityError, ConfigError, DataError
from .indicators import compare_rules, compute_indicators
from .io import (
    DEFAULT_PRECISION,
    partition_by_group,
    read_records,
    render_attributions,
    render_indicators,
    render_report,
    render_scheme_detail,
    render_scheme_list,
)
from .model import BUILTIN_SCHEME_NAMES, PRScheme, builtin_scheme, load_custom_scheme
from .ranking import rank
from .scoring import (
    BoundaryPolicy,
    CountingRule,
    MidpointRoute,
    PointAttribution,
    RoundingMode,
    attribute_all,
)

EXIT_OK = 0
EXIT_DATA = 2
EXIT_CONFIG = 3
EXIT_BOUNDARY = 4

PRECISION_ENV = "PCT_PRECISION"


class _Parser(argparse.ArgumentParser):
    """Parser whose usage failures exit with the configuration error code."""

    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_CONFIG)


def resolve_scheme(selector: str) -> PRScheme:
    """Turn a --scheme selector into a validated scheme.

    Selectors: top50 | pr6 | pr100 | topx=<fraction> | custom=<path>.
    """
    if selector.startswith("custom="):
        return load_custom_scheme(selector[len("custom="):])
    return builtin_scheme(selector)


def _resolve_precision(args) -> int:
    if args.precision is not None:
        value = args.precision
    else:
        raw = os.environ.get(PRECISION_ENV)
        if raw is None:
            return DEFAULT_PRECISION
        try:
            value = int(raw)
        except ValueError:
            raise ConfigError(f"{PRECISION_ENV} must be an integer, got {raw!r}") from None
    if value < 1:
        raise ConfigError("precision must be at least 1")
    return value


def _resolve_policy(args) -> tuple[BoundaryPolicy, bool]:
    """CLI default is lower, with a warning if an ambiguity actually occurs."""
    if args.boundary is None:
        return BoundaryPolicy.LOWER, True
    return BoundaryPolicy(args.boundary), False


def _warn_defaulted_ambiguities(batches) -> None:
    hits = sum(
        1
        for _key, _ranked, attributions in batches
        for attribution in attributions
        if isinstance(attribution, PointAttribution) and attribution.ambiguous
    )
    if hits:
        noun = "attribution" if hits == 1 else "attributions"
        print(
            f"pct: warning: {hits} {noun} landed exactly on a class boundary and "
            "went to the class below; pass --boundary to choose",
            file=sys.stderr,
        )


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="pct",
        description=(
            "Percentile rank class attribution and citation impact indicators "
            "with exact rational arithmetic."
        ),
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    subparsers = parser.add_subparsers(dest="command", required=True)

    io_common = argparse.ArgumentParser(add_help=False)
    io_common.add_argument(
        "--input", default="-", help="input file (csv, tsv or json), or - for stdin"
    )
    io_common.add_argument(
        "--format", choices=("table", "csv", "json"), default="table",
        help="output format (default table; csv/json carry exact p/q values)",
    )
    io_common.add_argument(
        "--precision", type=int, default=None,
        help=f"significant digits for decimal renderings "
             f"(default {DEFAULT_PRECISION}; env {PRECISION_ENV})",
    )

    scheme_required = argparse.ArgumentParser(add_help=False)
    scheme_required.add_argument(
        "--scheme", required=True,
        help="top50 | pr6 | pr100 | topx=<fraction> | custom=<path>",
    )

    rule_config = argparse.ArgumentParser(add_help=False)
    rule_config.add_argument(
        "--rule", choices=[rule.value for rule in CountingRule],
        default=CountingRule.FRACTIONAL.value,
        help="counting rule (default fractional)",
    )
    rule_config.add_argument(
        "--boundary", choices=[policy.value for policy in BoundaryPolicy], default=None,
        help="class for a point landing on an interior boundary "
             "(default lower, with a warning)",
    )

    rounding_config = argparse.ArgumentParser(add_help=False)
    rounding_config.add_argument(
        "--rounding", choices=[mode.value for mode in RoundingMode],
        default=RoundingMode.NONE.value,
        help="rounding of 100*q before classification (default none)",
    )
    rounding_config.add_argument(
        "--midpoint-route", dest="midpoint_route",
        choices=[route.value for route in MidpointRoute],
        default=MidpointRoute.EXACT.value,
        help="midpoint taken exactly, or as the rounded middle of rounded "
             "endpoint percentiles (default exact)",
    )

    subparsers.add_parser(
        "attribute",
        parents=[io_common, scheme_required, rule_config, rounding_config],
        help="per-document class attribution",
    )
    subparsers.add_parser(
        "indicators",
        parents=[io_common, scheme_required, rule_config, rounding_config],
        help="I3, R and PP per group",
    )
    subparsers.add_parser(
        "report",
        parents=[io_common, scheme_required, rounding_config],
        help="boundary hits and cross-rule class disagreements",
    )
    schemes_parser = subparsers.add_parser(
        "schemes", help="list built-in schemes or inspect/validate one"
    )
    schemes_parser.add_argument(
        "--scheme", default=None,
        help="scheme to show in full (builtin selector or custom=<path>); "
             "omit to list the built-ins",
    )
    schemes_parser.add_argument(
        "--format", choices=("table", "csv", "json"), default="table"
    )
    schemes_parser.add_argument("--precision", type=int, default=None)
    return parser


def _run(args) -> str:
    precision = _resolve_precision(args)

    if args.command == "schemes":
        if args.scheme is None:
            names = list(BUILTIN_SCHEME_NAMES) + ["topx(1/10)"]
            return render_scheme_list(
                [resolve_scheme(name) for name in names], fmt=args.format
            )
        return render_scheme_detail(
            resolve_scheme(args.scheme), fmt=args.format, precision=precision
        )

    scheme = resolve_scheme(args.scheme)
    sets = partition_by_group(read_records(args.input))
    rounding = RoundingMode(args.rounding)
    midpoint_route = MidpointRoute(args.midpoint_route)

    if args.command == "report":
        batches = []
        for key in sorted(sets):
            ranked = rank(sets[key])
            batches.append(
                (key, ranked, compare_rules(
                    ranked, scheme, rounding=rounding, midpoint_route=midpoint_route
                ))
            )
        return render_report(
            batches, scheme,
            rounding=rounding, midpoint_route=midpoint_route,
            fmt=args.format, precision=precision,
        )

    rule = CountingRule(args.rule)
    policy, warn_on_ambiguity = _resolve_policy(args)
    batches = []
    for key in sorted(sets):
        ranked = rank(sets[key])
        attributions = attribute_all(
            ranked, scheme, rule,
            rounding=rounding, policy=policy, midpoint_route=midpoint_route,
        )
        batches.append((key, ranked, attributions))
    if warn_on_ambiguity and rule is not CountingRule.FRACTIONAL:
        _warn_defaulted_ambiguities(batches)

    if args.command == "attribute":
        return render_attributions(
            batches, scheme, rule,
            rounding=rounding,
            policy=None if rule is CountingRule.FRACTIONAL else policy,
            midpoint_route=midpoint_route,
            fmt=args.format, precision=precision,
        )

    # indicators: reuse the attributions computed above through compute_indicators
    results = []
    for key in sorted(sets):
        ranked = rank(sets[key])
        results.append(
            (key, compute_indicators(
                ranked, scheme, rule,
                rounding=rounding, policy=policy, midpoint_route=midpoint_route,
            ))
        )
    return render_indicators(results, scheme, fmt=args.format, precision=precision)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        output = _run(args)
    except DataError as exc:
        print(f"pct: input error: {exc}", file=sys.stderr)
        return EXIT_DATA
    except ConfigError as exc:
        print(f"pct: config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except BoundaryAmbiguityError as exc:
        print(f"pct: {exc}", file=sys.stderr)
        return EXIT_BOUNDARY
    sys.stdout.write(output)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
