"""Plot-ready output tables and atomic file writing.

Every table has a canonical name and default serialization (mentions.tsv,
influence.csv, ...).  Floats are always written with six decimals so repeated
runs over identical inputs are byte-identical.
"""

from __future__ import annotations

import csv
import io
import json
import os
import tempfile
from dataclasses import dataclass
from pathlib import Path

from .dictionary import ERA_GROUPS, AlgorithmDictionary
from .extract import MentionRecord
from .influence import CategorySummary, InfluenceSeries, TrendThresholds, classify_trend, rising_span
from .matcher import Matcher


@dataclass(frozen=True)
class Table:
    name: str
    default_format: str  # "tsv" or "csv"
    header: tuple[str, ...]
    rows: tuple[tuple[object, ...], ...]


def _text(value: object) -> str:
    if isinstance(value, float):
        return f"{value:.6f}"
    return str(value)


def render_table(table: Table, fmt: str) -> str:
    if fmt == "json":
        rows = [
            {
                key: (round(value, 6) if isinstance(value, float) else value)
                for key, value in zip(table.header, row)
            }
            for row in table.rows
        ]
        return json.dumps(rows, ensure_ascii=False, indent=2) + "\n"
    buffer = io.StringIO()
    writer = csv.writer(buffer, delimiter="\t" if fmt == "tsv" else ",", lineterminator="\n")
    writer.writerow(table.header)
    for row in table.rows:
        writer.writerow([_text(value) for value in row])
    return buffer.getvalue()


def atomic_write_text(path: Path, text: str) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp_name = tempfile.mkstemp(dir=path.parent, prefix=f".{path.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="") as handle:
            handle.write(text)
        os.replace(tmp_name, path)
    except BaseException:
        if os.path.exists(tmp_name):
            os.unlink(tmp_name)
        raise


def write_table(table: Table, out_dir: Path, fmt: str | None = None) -> Path:
    fmt = fmt or table.default_format
    path = out_dir / f"{table.name}.{fmt}"
    atomic_write_text(path, render_table(table, fmt))
    return path


def mentions_table(records: list[MentionRecord]) -> Table:
    header = (
        "doc_id",
        "year",
        "sentence_index",
        "section",
        "start",
        "end",
        "surface",
        "alias",
        "canonical",
        "resolution",
    )
    rows = tuple(
        (
            r.doc_id,
            r.year,
            r.sentence_index,
            r.section,
            r.start,
            r.end,
            r.surface,
            r.alias,
            r.canonical,
            r.resolution,
        )
        for r in records
    )
    return Table("mentions", "tsv", header, rows)


def unresolved_table(records: list[MentionRecord], matcher: Matcher) -> Table:
    """Summary of unresolved mentions by alias; excluded from all counts."""
    mentions: dict[str, int] = {}
    docs: dict[str, set[str]] = {}
    for record in records:
        if record.resolution != "unresolved":
            continue
        mentions[record.alias] = mentions.get(record.alias, 0) + 1
        docs.setdefault(record.alias, set()).add(record.doc_id)
    rows = tuple(
        (
            alias,
            mentions[alias],
            len(docs[alias]),
            "|".join(sorted(matcher.patterns.get(alias, frozenset()))),
        )
        for alias in sorted(mentions, key=lambda a: (-mentions[a], a))
    )
    return Table("unresolved", "tsv", ("alias", "num_mentions", "num_docs", "candidates"), rows)


def _tags(dictionary: AlgorithmDictionary) -> dict[str, tuple[str, str]]:
    return {
        e.canonical: (e.category or "other", e.era_group or "other")
        for e in dictionary.entries
    }


def influence_table(
    series: dict[str, InfluenceSeries], dictionary: AlgorithmDictionary
) -> Table:
    tags = _tags(dictionary)
    ordered = sorted(series.values(), key=lambda s: (-s.score, s.canonical))
    rows = tuple(
        (
            s.canonical,
            s.first_year,
            s.T,
            s.score,
            tags.get(s.canonical, ("other", "other"))[0],
            tags.get(s.canonical, ("other", "other"))[1],
        )
        for s in ordered
    )
    return Table(
        "influence",
        "csv",
        ("canonical", "first_year", "T", "score", "category", "era_group"),
        rows,
    )


def annual_table(series: dict[str, InfluenceSeries], end_year: int) -> Table:
    if series:
        start = min(s.first_year for s in series.values())
        years = list(range(start, end_year + 1))
    else:
        years = []
    header = ("canonical", *[str(y) for y in years])
    rows = tuple(
        (canonical, *[series[canonical].annual.get(y, 0.0) for y in years])
        for canonical in sorted(series)
    )
    return Table("annual", "csv", header, rows)


def rankings_table(rankings: dict[int, list[tuple[str, float]]]) -> Table:
    rows = []
    for year in sorted(rankings):
        for rank, (canonical, annual) in enumerate(rankings[year], start=1):
            rows.append((year, rank, canonical, annual))
    return Table(
        "rankings", "tsv", ("year", "rank", "canonical", "annual_influence"), tuple(rows)
    )


def trends_table(
    series: dict[str, InfluenceSeries], thresholds: TrendThresholds | None = None
) -> Table:
    rows = []
    for canonical in sorted(series):
        s = series[canonical]
        if s.T < 3:
            # Too short to classify; rising span alone would be misleading.
            continue
        label = classify_trend(s, thresholds)
        span = rising_span(s)
        rows.append(
            (
                canonical,
                label.label,
                label.normalized_slope,
                label.burst_score,
                span.first_year,
                span.peak_year,
                span.span,
            )
        )
    return Table(
        "trends",
        "csv",
        ("canonical", "label", "normalized_slope", "burst_score", "first_year", "peak_year", "span"),
        tuple(rows),
    )


def categories_table(summaries: list[CategorySummary]) -> Table:
    rows = tuple((s.category, s.member_count, s.mean_score) for s in summaries)
    return Table("categories", "csv", ("category", "member_count", "mean_score"), rows)


def era_counts_table(era_counts: dict[int, dict[str, int]]) -> Table:
    rows = tuple(
        (year, *[era_counts[year].get(group, 0) for group in ERA_GROUPS])
        for year in sorted(era_counts)
    )
    return Table("era_counts", "csv", ("year", *ERA_GROUPS), rows)


def render_agreement_report(report: dict[str, float]) -> str:
    rounded = {key: round(value, 6) for key, value in report.items()}
    return json.dumps(rounded, indent=2, sort_keys=True) + "\n"
