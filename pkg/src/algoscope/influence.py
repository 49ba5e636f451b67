"""Per-algorithm influence analytics.

The counting unit is the article: a document contributes at most once to an
algorithm's count for its year, no matter how many sentences mention it.
An algorithm's annual influence in a year is the number of documents
mentioning it divided by all documents published that year; its influence
score is the mean annual influence over the years from its first appearance
through the analysis end year, inclusive.
"""

from __future__ import annotations

import statistics
from dataclasses import dataclass

from .dictionary import ERA_GROUPS, AlgorithmDictionary
from .errors import InputError, InternalError
from .extract import MentionRecord


@dataclass(frozen=True)
class MentionMatrix:
    """doc_ids mentioning each algorithm, keyed by canonical name and year."""

    docs: dict[str, dict[int, frozenset[str]]]

    def count(self, canonical: str, year: int) -> int:
        return len(self.docs.get(canonical, {}).get(year, ()))

    def algorithms(self) -> list[str]:
        return sorted(self.docs)

    def total_mentions(self, canonical: str) -> int:
        return sum(len(ids) for ids in self.docs.get(canonical, {}).values())


@dataclass(frozen=True)
class InfluenceSeries:
    canonical: str
    first_year: int
    end_year: int
    T: int
    score: float
    annual: dict[int, float]  # zero-filled over [first_year, end_year]
    counts: dict[int, int]  # mentioning-document counts, same year range

    def total_mentions(self) -> int:
        return sum(self.counts.values())


@dataclass(frozen=True)
class RisingSpan:
    first_year: int
    peak_year: int
    span: int


@dataclass(frozen=True)
class TrendThresholds:
    burst: float = 0.5
    slope_up: float = 0.01
    slope_down: float = -0.01


@dataclass(frozen=True)
class TrendLabel:
    label: str  # rapid_growth | steady_growth | steady_decline | flat
    normalized_slope: float
    burst_score: float


def mention_counts(records: list[MentionRecord]) -> MentionMatrix:
    """Distinct mentioning documents per (algorithm, year); unresolved records
    (empty canonical) are ignored."""
    cells: dict[str, dict[int, set[str]]] = {}
    for record in records:
        if not record.canonical:
            continue
        cells.setdefault(record.canonical, {}).setdefault(record.year, set()).add(record.doc_id)
    return MentionMatrix(
        {
            canonical: {year: frozenset(ids) for year, ids in sorted(by_year.items())}
            for canonical, by_year in sorted(cells.items())
        }
    )


def influence_score(
    matrix: MentionMatrix,
    totals: dict[int, int],
    canonical: str,
    end_year: int,
) -> InfluenceSeries:
    """Annual influence values and the mean-influence score for one algorithm."""
    by_year = matrix.docs.get(canonical, {})
    mention_years = sorted(y for y, ids in by_year.items() if ids and y <= end_year)
    if not mention_years:
        raise InputError(f"{canonical!r} has no mentions in or before {end_year}")
    first_year = mention_years[0]
    annual: dict[int, float] = {}
    counts: dict[int, int] = {}
    for year in range(first_year, end_year + 1):
        n_mentioning = len(by_year.get(year, ()))
        n_total = totals.get(year, 0)
        if n_mentioning > n_total:
            raise InternalError(
                f"{canonical!r} mentioned by {n_mentioning} documents in {year} "
                f"but only {n_total} were published"
            )
        counts[year] = n_mentioning
        annual[year] = n_mentioning / n_total if n_total else 0.0
    duration = end_year - first_year + 1
    return InfluenceSeries(
        canonical=canonical,
        first_year=first_year,
        end_year=end_year,
        T=duration,
        score=sum(annual.values()) / duration,
        annual=annual,
        counts=counts,
    )


def all_influence_series(
    matrix: MentionMatrix, totals: dict[int, int], end_year: int
) -> dict[str, InfluenceSeries]:
    series = {}
    for canonical in matrix.algorithms():
        if any(y <= end_year for y in matrix.docs[canonical]):
            series[canonical] = influence_score(matrix, totals, canonical, end_year)
    return series


def yearly_rankings(
    all_series: dict[str, InfluenceSeries],
    k: int,
    year_range: range,
) -> dict[int, list[tuple[str, float]]]:
    """Per year, the top-k algorithms by annual influence.

    Only algorithms actually mentioned that year are ranked, so a year can
    have fewer than k rows.  Ties break by higher total mention count, then
    by canonical name.
    """
    if k < 1:
        raise InputError("k must be >= 1")
    rankings: dict[int, list[tuple[str, float]]] = {}
    for year in year_range:
        rows = []
        for canonical, series in all_series.items():
            if series.counts.get(year, 0) > 0:
                rows.append(
                    (-series.annual[year], -series.total_mentions(), canonical)
                )
        rows.sort()
        rankings[year] = [(canonical, -neg_annual) for neg_annual, _, canonical in rows[:k]]
    return rankings


@dataclass(frozen=True)
class CategorySummary:
    category: str
    member_count: int
    mean_score: float


def category_summary(
    scores: dict[str, float],
    dictionary: AlgorithmDictionary,
    top_n: int = 100,
) -> list[CategorySummary]:
    """Group the top-n algorithms by category; mean score per category,
    sorted by mean descending."""
    categories = {e.canonical: e.category or "other" for e in dictionary.entries}
    ranked = sorted(scores.items(), key=lambda item: (-item[1], item[0]))[:top_n]
    grouped: dict[str, list[float]] = {}
    for canonical, score in ranked:
        grouped.setdefault(categories.get(canonical, "other"), []).append(score)
    summaries = [
        CategorySummary(category, len(values), sum(values) / len(values))
        for category, values in grouped.items()
    ]
    summaries.sort(key=lambda s: (-s.mean_score, s.category))
    return summaries


def rising_span(series: InfluenceSeries) -> RisingSpan:
    """Years from first appearance to the (earliest) peak of annual influence."""
    peak_value = max(series.annual.values())
    if peak_value <= 0.0:
        raise InputError(f"{series.canonical!r} has an all-zero influence series")
    peak_year = min(y for y, v in series.annual.items() if v == peak_value)
    return RisingSpan(series.first_year, peak_year, peak_year - series.first_year)


def classify_trend(
    series: InfluenceSeries, thresholds: TrendThresholds | None = None
) -> TrendLabel:
    """Label the evolution shape of an annual-influence series.

    The series is normalized by its maximum, so the label is invariant under
    positive scaling.  A burst is the largest year-over-year increase of the
    normalized series; rapid growth requires a burst at or above the burst
    threshold plus a final third that is on average higher than the first
    third.  Otherwise the least-squares slope per year decides between steady
    growth, steady decline, and flat.
    """
    thresholds = thresholds or TrendThresholds()
    values = [series.annual[y] for y in range(series.first_year, series.end_year + 1)]
    if len(values) < 3:
        raise InputError(
            f"{series.canonical!r} spans only {len(values)} year(s); need at least 3"
        )
    peak = max(values)
    if peak <= 0.0:
        raise InputError(f"{series.canonical!r} has an all-zero influence series")
    norm = [v / peak for v in values]
    slope = statistics.linear_regression(range(len(norm)), norm).slope
    burst = max(
        (norm[i + 1] - norm[i] for i in range(len(norm) - 1) if norm[i + 1] > norm[i]),
        default=0.0,
    )
    third = max(1, len(norm) // 3)
    early = sum(norm[:third]) / third
    late = sum(norm[-third:]) / third
    if burst >= thresholds.burst and late > early:
        label = "rapid_growth"
    elif slope >= thresholds.slope_up:
        label = "steady_growth"
    elif slope <= thresholds.slope_down:
        label = "steady_decline"
    else:
        label = "flat"
    return TrendLabel(label, slope, burst)


def era_group_counts(
    rankings: dict[int, list[tuple[str, float]]],
    dictionary: AlgorithmDictionary,
) -> dict[int, dict[str, int]]:
    """Per year, how many ranked algorithms fall in each era group."""
    groups = {e.canonical: e.era_group or "other" for e in dictionary.entries}
    counts: dict[int, dict[str, int]] = {}
    for year, rows in rankings.items():
        per_group = dict.fromkeys(ERA_GROUPS, 0)
        for canonical, _ in rows:
            per_group[groups.get(canonical, "other")] += 1
        counts[year] = per_group
    return counts
