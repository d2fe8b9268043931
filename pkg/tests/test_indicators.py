from __future__ import annotations

from fractions import Fraction

import pytest

from pctrank import (
    BoundaryPolicy,
    CountingRule,
    FractionalAttribution,
    PointAttribution,
    RoundingMode,
    SchemeError,
    attribute_all,
    builtin_scheme,
    class_counts,
    compare_rules,
    compute_indicators,
    grouped_indicators,
    i3,
    per_doc_score,
    pp_top,
    r_indicator,
    rank,
    scheme_from_boundaries,
    theoretical_total,
    topx_scheme,
)
from support import make_distinct, make_tied

F = Fraction

CW = CountingRule.COUNT_WORSE
CWE = CountingRule.COUNT_WORSE_OR_EQUAL
MID = CountingRule.MIDPOINT
FRAC = CountingRule.FRACTIONAL


def counts_for(ranked, scheme, rule, **kwargs):
    return class_counts(attribute_all(ranked, scheme, rule, **kwargs), scheme)


class TestClassCounts:
    def test_fractional_five_split_in_half(self, five_ranked):
        counts = counts_for(five_ranked, builtin_scheme("top50"), FRAC)
        assert counts.counts == (F(5, 2), F(5, 2))
        assert counts.total == 5

    @pytest.mark.parametrize(
        "policy,expected",
        [(BoundaryPolicy.LOWER, (3, 2)), (BoundaryPolicy.UPPER, (2, 3))],
    )
    def test_midpoint_five_depends_on_the_boundary_policy(
        self, five_ranked, policy, expected
    ):
        counts = counts_for(five_ranked, builtin_scheme("top50"), MID, policy=policy)
        assert counts.counts == expected

    def test_point_and_fractional_counts_differ_by_half(self, five_ranked):
        top50 = builtin_scheme("top50")
        point = counts_for(five_ranked, top50, MID, policy=BoundaryPolicy.LOWER)
        fractional = counts_for(five_ranked, top50, FRAC)
        diffs = [p - f for p, f in zip(point.counts, fractional.counts)]
        assert diffs == [F(1, 2), F(-1, 2)]

    def test_rejects_attribution_from_another_scheme(self):
        top50 = builtin_scheme("top50")
        with pytest.raises(ValueError):
            class_counts([FractionalAttribution("x", (F(1),))], top50)
        with pytest.raises(ValueError):
            class_counts(
                [PointAttribution("x", F(1, 4), None, 3, False, None)], top50
            )


class TestScoresAndI3:
    def test_thousand_distinct_documents_reach_the_theoretical_total(self):
        scheme = builtin_scheme("pr6")
        ranked = rank(make_distinct(1000))
        total = i3(counts_for(ranked, scheme, FRAC))
        assert total == 1910
        assert total == theoretical_total(scheme, 1000)

    def test_eight_distinct_documents_on_the_hundredth_scale(self, eight_ranked):
        assert i3(counts_for(eight_ranked, builtin_scheme("pr100"), FRAC)) == 404

    def test_top_of_eight_scores(self, eight_ranked):
        pr6 = builtin_scheme("pr6")
        pr100 = builtin_scheme("pr100")
        by_id = {
            a.doc_id: a for a in attribute_all(eight_ranked, pr6, FRAC)
        }
        assert per_doc_score(by_id["d8"], pr6) == F(107, 25)
        by_id = {
            a.doc_id: a for a in attribute_all(eight_ranked, pr100, FRAC)
        }
        assert per_doc_score(by_id["d8"], pr100) == F(2356, 25)

    def test_top_of_eight_midpoint_with_floor(self, eight_ranked):
        pr6 = builtin_scheme("pr6")
        attribution = attribute_all(
            eight_ranked, pr6, MID,
            rounding=RoundingMode.FLOOR, policy=BoundaryPolicy.LOWER,
        )[-1]
        assert attribution.doc_id == "d8"
        assert attribution.percentile == 93
        assert per_doc_score(attribution, pr6) == 4

    def test_i3_is_the_sum_of_per_doc_scores(self, eight_ranked):
        for scheme in (builtin_scheme("pr6"), builtin_scheme("top50")):
            for rule in (FRAC, MID):
                attributions = attribute_all(
                    eight_ranked, scheme, rule, policy=BoundaryPolicy.LOWER
                )
                total = i3(class_counts(attributions, scheme))
                assert total == sum(per_doc_score(a, scheme) for a in attributions)

    def test_exact_shares_for_a_custom_scheme(self):
        # ten distinct documents against cuts at 3/10 and 1/2
        scheme = scheme_from_boundaries(
            "custom", [F(0), F(3, 10), F(1, 2), F(1)], [F(0), F(1), F(2)]
        )
        counts = counts_for(rank(make_distinct(10)), scheme, FRAC)
        assert counts.counts == (3, 2, 5)


class TestRAndPP:
    def test_r_divides_by_n(self):
        assert r_indicator(F(382, 25), 8) == F(191, 100)
        assert r_indicator(F(5, 2), 5) == F(1, 2)

    def test_r_rejects_empty_sets(self):
        with pytest.raises(ValueError):
            r_indicator(F(1), 0)

    def test_pp_needs_two_classes(self):
        counts = counts_for(rank(make_distinct(10)), builtin_scheme("pr6"), FRAC)
        with pytest.raises(SchemeError):
            pp_top(counts, 10)

    def test_pp_top_decile_of_ten_distinct(self):
        scheme = topx_scheme(F(1, 10))
        counts = counts_for(rank(make_distinct(10)), scheme, FRAC)
        assert pp_top(counts, 10) == F(1, 10)


class TestComputeIndicators:
    def test_five_documents_top50(self, five_ranked):
        result = compute_indicators(five_ranked, builtin_scheme("top50"), FRAC)
        assert result.scheme_name == "top50"
        assert result.rule is FRAC
        assert result.n == 5
        assert result.i3 == F(5, 2)
        assert result.r == F(1, 2)
        assert result.pp == F(1, 2)
        assert result.per_doc_scores["d3"] == F(1, 2)

    def test_eight_documents_pr6(self, eight_ranked):
        result = compute_indicators(eight_ranked, builtin_scheme("pr6"), FRAC)
        assert result.i3 == F(382, 25)
        assert result.r == F(191, 100)
        assert result.pp is None
        assert result.per_doc_scores["d8"] == F(107, 25)
        assert result.per_doc_scores["d8"] / result.n == F(107, 200)

    def test_eight_documents_pr100(self, eight_ranked):
        result = compute_indicators(eight_ranked, builtin_scheme("pr100"), FRAC)
        assert result.i3 == 404
        assert result.r == F(101, 2)
        assert result.per_doc_scores["d8"] == F(2356, 25)
        assert result.per_doc_scores["d8"] / result.n == F(589, 50)


class TestGroupedIndicators:
    @pytest.fixture
    def sets(self):
        return {"solo": make_distinct(10), "herd": make_tied(10)}

    def test_fractional_pp_ignores_ties(self, sets):
        results = grouped_indicators(sets, topx_scheme(F(1, 10)), FRAC)
        assert results["solo"].pp == F(1, 10)
        assert results["herd"].pp == F(1, 10)

    def test_point_rules_break_on_full_ties(self, sets):
        scheme = topx_scheme(F(1, 10))
        high = grouped_indicators(
            sets, scheme, CWE, policy=BoundaryPolicy.LOWER
        )
        assert high["solo"].pp == F(1, 10)
        assert high["herd"].pp == 1  # every tied document counts as top
        mid = grouped_indicators(
            sets, scheme, MID, policy=BoundaryPolicy.LOWER
        )
        assert mid["solo"].pp == F(1, 10)
        assert mid["herd"].pp == 0  # and here none does

    def test_keys_come_back_sorted(self, sets):
        results = grouped_indicators(sets, builtin_scheme("top50"), FRAC)
        assert list(results) == ["herd", "solo"]


class TestCompareRules:
    def test_five_documents(self, five_ranked):
        report = compare_rules(five_ranked, builtin_scheme("top50"))
        assert [f.rule for f in report.flags] == [MID]
        flag = report.flags[0]
        assert flag.doc_id == "d3"
        assert flag.quantile == flag.boundary == F(1, 2)
        assert (flag.interval_low, flag.interval_high) == (F(2, 5), F(3, 5))
        assert report.flag_counts == {CW: 0, CWE: 0, MID: 1}
        assert [d.doc_id for d in report.disagreements] == ["d3"]
        assert report.disagreements[0].classes == {CW: 1, CWE: 2, MID: 1}
        assert report.fractional_counts.counts == (F(5, 2), F(5, 2))

    def test_four_documents_hit_boundaries_with_the_end_rules(self):
        report = compare_rules(rank(make_distinct(4)), builtin_scheme("top50"))
        assert report.flags_for(MID) == ()
        [cw_flag] = report.flags_for(CW)
        [cwe_flag] = report.flags_for(CWE)
        assert (cw_flag.doc_id, cw_flag.boundary) == ("d3", F(1, 2))
        assert (cwe_flag.doc_id, cwe_flag.boundary) == ("d2", F(1, 2))
        assert [d.doc_id for d in report.disagreements] == ["d3"]
        assert report.disagreements[0].classes == {CW: 1, CWE: 2, MID: 2}

    def test_hundred_and_fifty_documents_pr6(self):
        report = compare_rules(rank(make_distinct(150)), builtin_scheme("pr6"))
        midpoint_hits = {f.doc_id: f.boundary for f in report.flags_for(MID)}
        assert midpoint_hits == {
            "d113": F(3, 4), "d143": F(19, 20), "d149": F(99, 100),
        }
        at_99 = [f for f in report.flags if f.boundary == F(99, 100)]
        assert [f.doc_id for f in at_99] == ["d149"]
        assert at_99[0].interval_low == F(74, 75)
        assert at_99[0].interval_high == F(149, 150)

    def test_rounding_is_passed_through(self, eight_ranked):
        report = compare_rules(
            eight_ranked, builtin_scheme("pr100"), rounding=RoundingMode.FLOOR
        )
        # floor(93.75) = 93 puts the top document's midpoint on a class edge
        assert any(
            f.rule is MID and f.doc_id == "d8" and f.boundary == F(93, 100)
            for f in report.flags
        )
