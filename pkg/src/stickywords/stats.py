"""Two-sample statistics reproducing SPSS-style selection/evaluation tables.

Group summaries use the n-1 sample standard deviation. The t-tests come in
the classic pooled-variance form and the Welch form with Satterthwaite
degrees of freedom; variance homogeneity is checked with the mean-centered
Levene test (one-way ANOVA on absolute deviations from the group means).
Questionnaire responses are scored as the arithmetic mean of their 1-5
items after reverse-coding.
"""
from __future__ import annotations

import csv
import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import MalformedRecord, MissingVariant, OutOfScale, TooFewObservations
from .special import f_sf, student_t_p_two_tailed, student_t_ppf

VARIANT_ORIGINAL = "original"
VARIANT_TREATMENT = "treatment"
VARIANTS = (VARIANT_ORIGINAL, VARIANT_TREATMENT)

UES_DIMENSIONS = (
    "novelty_aesthetic_appeal",
    "focused_attention",
    "felt_involvement",
    "perceived_usability",
    "endurability_reward",
)


@dataclass(frozen=True)
class GroupSummary:
    n: int
    mean: float
    sd: float
    se_mean: float


@dataclass(frozen=True)
class TTestResult:
    t: float
    df: float
    p_two_tailed: float
    mean_diff: float
    se_diff: float
    ci95: tuple[float, float]


@dataclass(frozen=True)
class LeveneResult:
    F: float
    p: float


@dataclass(frozen=True)
class UESResponse:
    """One participant's record: which variant they saw, whether they
    selected it, and their questionnaire items on the 1-5 scale.

    With the default five-item form, items follow UES_DIMENSIONS order;
    logs may carry any item count (item_1..item_k)."""

    response_id: str
    variant: str
    selected: bool
    items: tuple[int, ...]


@dataclass(frozen=True)
class VariantComparison:
    """Original-vs-treatment block for one measure."""

    original: GroupSummary
    treatment: GroupSummary
    levene: LeveneResult
    pooled: TTestResult
    welch: TTestResult | None


@dataclass(frozen=True)
class ExperimentReport:
    selection: VariantComparison
    ues: VariantComparison


def summarize(values: Sequence[float]) -> GroupSummary:
    """Sample mean, n-1 standard deviation, and standard error of the mean."""
    n = len(values)
    if n < 2:
        raise TooFewObservations(f"need at least 2 observations, got {n}")
    mean = math.fsum(values) / n
    variance = math.fsum((x - mean) ** 2 for x in values) / (n - 1)
    sd = math.sqrt(variance)
    return GroupSummary(n=n, mean=mean, sd=sd, se_mean=sd / math.sqrt(n))


def _finish_t_test(mean_diff: float, se: float, df: float) -> TTestResult:
    if se == 0.0:
        # Degenerate zero-variance case: identical means give the null
        # outcome, differing means an infinite statistic.
        if mean_diff == 0.0:
            return TTestResult(0.0, df, 1.0, 0.0, 0.0, (0.0, 0.0))
        t = math.inf if mean_diff > 0 else -math.inf
        return TTestResult(t, df, 0.0, mean_diff, 0.0, (mean_diff, mean_diff))
    t = mean_diff / se
    p = student_t_p_two_tailed(t, df)
    half_width = student_t_ppf(0.975, df) * se
    return TTestResult(
        t=t,
        df=df,
        p_two_tailed=p,
        mean_diff=mean_diff,
        se_diff=se,
        ci95=(mean_diff - half_width, mean_diff + half_width),
    )


def pooled_t_test(g1: GroupSummary, g2: GroupSummary) -> TTestResult:
    """Equal-variances-assumed two-sample t-test from group summaries."""
    df = g1.n + g2.n - 2
    sp2 = ((g1.n - 1) * g1.sd**2 + (g2.n - 1) * g2.sd**2) / df
    se = math.sqrt(sp2 * (1.0 / g1.n + 1.0 / g2.n))
    return _finish_t_test(g1.mean - g2.mean, se, float(df))


def welch_t_test(g1: GroupSummary, g2: GroupSummary) -> TTestResult:
    """Unequal-variances t-test with Welch-Satterthwaite degrees of freedom."""
    v1 = g1.sd**2 / g1.n
    v2 = g2.sd**2 / g2.n
    se = math.sqrt(v1 + v2)
    if se == 0.0:
        df = float(g1.n + g2.n - 2)
    else:
        df = (v1 + v2) ** 2 / (v1**2 / (g1.n - 1) + v2**2 / (g2.n - 1))
    return _finish_t_test(g1.mean - g2.mean, se, df)


def levene_test(raw1: Sequence[float], raw2: Sequence[float]) -> LeveneResult:
    """Mean-centered Levene test for equality of variances (two groups)."""
    n1, n2 = len(raw1), len(raw2)
    if n1 < 2 or n2 < 2:
        raise TooFewObservations("each group needs at least 2 observations")
    mean1 = math.fsum(raw1) / n1
    mean2 = math.fsum(raw2) / n2
    z1 = [abs(x - mean1) for x in raw1]
    z2 = [abs(x - mean2) for x in raw2]
    zbar1 = math.fsum(z1) / n1
    zbar2 = math.fsum(z2) / n2
    zbar = math.fsum((zbar1 * n1, zbar2 * n2)) / (n1 + n2)
    df2 = n1 + n2 - 2
    ss_between = n1 * (zbar1 - zbar) ** 2 + n2 * (zbar2 - zbar) ** 2
    ss_within = math.fsum((z - zbar1) ** 2 for z in z1) + math.fsum(
        (z - zbar2) ** 2 for z in z2
    )
    if ss_within == 0.0:
        if ss_between == 0.0:
            return LeveneResult(F=0.0, p=1.0)
        return LeveneResult(F=math.inf, p=0.0)
    F = ss_between / (ss_within / df2)
    return LeveneResult(F=F, p=f_sf(F, 1.0, float(df2)))


def ues_score(response: UESResponse, reverse_items: frozenset[int] = frozenset()) -> float:
    """Mean of the coded items; reverse-coded items map x to 6 - x.

    reverse_items holds 0-based item indices.
    """
    if not response.items:
        raise OutOfScale("response has no items")
    coded = []
    for index, item in enumerate(response.items):
        if item not in (1, 2, 3, 4, 5):
            raise OutOfScale(f"item {index + 1} out of 1..5 scale: {item!r}")
        coded.append(6 - item if index in reverse_items else item)
    return math.fsum(coded) / len(coded)


def analyze_experiment(
    responses: Iterable[UESResponse],
    reverse_items: frozenset[int] = frozenset(),
) -> ExperimentReport:
    """Full selection + evaluation analysis over a set of responses.

    Selection (binary 0/1) gets group summaries, the mean-centered Levene
    test, and the pooled t-test; the questionnaire average additionally
    gets the Welch t-test. Results are independent of response order.
    """
    by_variant: dict[str, list[UESResponse]] = {v: [] for v in VARIANTS}
    for response in responses:
        if response.variant not in by_variant:
            raise ValueError(f"unknown variant {response.variant!r}")
        by_variant[response.variant].append(response)
    for variant in VARIANTS:
        if not by_variant[variant]:
            raise MissingVariant(f"no responses for variant {variant!r}")

    selection = {
        v: [1.0 if r.selected else 0.0 for r in by_variant[v]] for v in VARIANTS
    }
    ues = {
        v: [ues_score(r, reverse_items) for r in by_variant[v]] for v in VARIANTS
    }

    sel_orig = summarize(selection[VARIANT_ORIGINAL])
    sel_treat = summarize(selection[VARIANT_TREATMENT])
    ues_orig = summarize(ues[VARIANT_ORIGINAL])
    ues_treat = summarize(ues[VARIANT_TREATMENT])

    return ExperimentReport(
        selection=VariantComparison(
            original=sel_orig,
            treatment=sel_treat,
            levene=levene_test(selection[VARIANT_ORIGINAL], selection[VARIANT_TREATMENT]),
            pooled=pooled_t_test(sel_orig, sel_treat),
            welch=None,
        ),
        ues=VariantComparison(
            original=ues_orig,
            treatment=ues_treat,
            levene=levene_test(ues[VARIANT_ORIGINAL], ues[VARIANT_TREATMENT]),
            pooled=pooled_t_test(ues_orig, ues_treat),
            welch=welch_t_test(ues_orig, ues_treat),
        ),
    )


def read_response_log(path) -> list[UESResponse]:
    """Parse a response log: CSV with header
    response_id, variant, selected, item_1..item_k.

    Raises MalformedRecord with the offending 1-based line number.
    """
    with open(path, encoding="utf-8", newline="") as handle:
        reader = csv.reader(handle)
        try:
            header = next(reader)
        except StopIteration:
            raise MalformedRecord(1, "response log is empty") from None
        header = [h.strip().lower() for h in header]
        expected_prefix = ["response_id", "variant", "selected"]
        if header[: len(expected_prefix)] != expected_prefix:
            raise MalformedRecord(
                1, f"header must start with {','.join(expected_prefix)}, got {','.join(header)}"
            )
        item_count = len(header) - len(expected_prefix)
        for index in range(item_count):
            if header[3 + index] != f"item_{index + 1}":
                raise MalformedRecord(1, f"expected column item_{index + 1}, got {header[3 + index]!r}")
        if item_count == 0:
            raise MalformedRecord(1, "response log has no item columns")

        responses = []
        for line_no, row in enumerate(reader, start=2):
            if not row or (len(row) == 1 and not row[0].strip()):
                continue
            if len(row) != len(header):
                raise MalformedRecord(line_no, f"expected {len(header)} fields, got {len(row)}")
            response_id = row[0].strip()
            variant = row[1].strip().lower()
            if variant not in VARIANTS:
                raise MalformedRecord(line_no, f"variant must be original or treatment, got {row[1]!r}")
            selected_text = row[2].strip()
            if selected_text not in ("0", "1"):
                raise MalformedRecord(line_no, f"selected must be 0 or 1, got {row[2]!r}")
            items = []
            for offset, cell in enumerate(row[3:], start=1):
                try:
                    item = int(cell.strip())
                except ValueError:
                    raise MalformedRecord(line_no, f"item_{offset} is not an integer: {cell!r}") from None
                if item not in (1, 2, 3, 4, 5):
                    raise MalformedRecord(line_no, f"item_{offset} out of 1..5 scale: {item}")
                items.append(item)
            responses.append(
                UESResponse(
                    response_id=response_id,
                    variant=variant,
                    selected=selected_text == "1",
                    items=tuple(items),
                )
            )
    return responses


def _summary_dict(summary: GroupSummary) -> dict:
    return {"n": summary.n, "mean": summary.mean, "sd": summary.sd, "se_mean": summary.se_mean}


def _t_test_dict(result: TTestResult) -> dict:
    return {
        "t": result.t,
        "df": result.df,
        "sig_2_tailed": result.p_two_tailed,
        "mean_difference": result.mean_diff,
        "std_error_difference": result.se_diff,
        "ci95_lower": result.ci95[0],
        "ci95_upper": result.ci95[1],
    }


def report_to_dict(report: ExperimentReport) -> dict:
    """JSON-ready report mirroring the published table field names."""
    def comparison(block: VariantComparison) -> dict:
        out = {
            "groups": {
                VARIANT_ORIGINAL: _summary_dict(block.original),
                VARIANT_TREATMENT: _summary_dict(block.treatment),
            },
            "levene": {"F": block.levene.F, "sig": block.levene.p},
            "equal_variances_assumed": _t_test_dict(block.pooled),
        }
        if block.welch is not None:
            out["equal_variances_not_assumed"] = _t_test_dict(block.welch)
        return out

    return {"selection": comparison(report.selection), "ues": comparison(report.ues)}


def format_report(report: ExperimentReport) -> str:
    """Human-readable report in the layout of the published tables."""
    lines = []

    def group_block(heading: str, block: VariantComparison):
        lines.append(heading)
        lines.append(f"  {'variant':<12}{'n':>6}{'mean':>10}{'sd':>10}{'se_mean':>10}")
        for name, s in ((VARIANT_ORIGINAL, block.original), (VARIANT_TREATMENT, block.treatment)):
            lines.append(f"  {name:<12}{s.n:>6}{s.mean:>10.4f}{s.sd:>10.4f}{s.se_mean:>10.4f}")
        lines.append(f"  Levene's test: F = {block.levene.F:.3f}, sig = {block.levene.p:.4g}")
        rows = [("equal variances assumed", block.pooled)]
        if block.welch is not None:
            rows.append(("equal variances not assumed", block.welch))
        for label, r in rows:
            lines.append(
                f"  {label}: t = {r.t:.3f}, df = {r.df:.3f}, sig. (2-tailed) = {r.p_two_tailed:.4g}, "
                f"mean difference = {r.mean_diff:.5f}, std. error difference = {r.se_diff:.5f}, "
                f"ci95 = ({r.ci95[0]:.5f}, {r.ci95[1]:.5f})"
            )
        lines.append("")

    group_block("Selection statistics", report.selection)
    group_block("Evaluation statistics (questionnaire average)", report.ues)
    return "\n".join(lines)
