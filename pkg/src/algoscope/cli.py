"""Command-line pipeline: extract, influence, rank, trends, agreement, report.

All data goes to files in --out-dir (written atomically); diagnostics go to
stderr.  Exit codes: 0 success, 1 invalid input, 2 internal error.  Identical
inputs always produce byte-identical outputs.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, fields
from pathlib import Path

from . import agreement as agreement_mod
from . import reports
from .corpus import Document, load_abbreviations, load_corpus, yearly_counts
from .dictionary import AlgorithmDictionary, load_dictionary
from .errors import InputError
from .extract import DisambiguationPolicy, extract_corpus_mentions
from .influence import (
    TrendThresholds,
    all_influence_series,
    category_summary,
    era_group_counts,
    mention_counts,
    yearly_rankings,
)
from .matcher import MatchConfig, Matcher, build_matcher

COMMANDS = ("extract", "influence", "rank", "trends", "agreement", "report")

_POLICY_NAMES = {
    "drop": "drop",
    "keep": "keep_flagged",
    "keep_flagged": "keep_flagged",
    "assign-unique": "assign_unique",
    "assign_unique": "assign_unique",
}


@dataclass
class RunConfig:
    corpus: str | None = None
    corpus_format: str = "jsonl"
    dictionary: str | None = None
    end_year: int = 2015
    min_year: int = 1900
    top_k: int = 10
    top_n: int = 100
    case_fold: bool = True
    hyphen_space_equiv: bool = True
    short_alias_threshold: int = 3
    short_alias_uppercase: bool = True
    unresolved_policy: str = "drop"
    abbreviations: str | None = None
    annotations_a: str | None = None
    annotations_b: str | None = None
    out_dir: str = "out"
    format: str | None = None

    def match_config(self) -> MatchConfig:
        return MatchConfig(
            case_fold=self.case_fold,
            hyphen_space_equiv=self.hyphen_space_equiv,
            short_alias_threshold=self.short_alias_threshold,
            short_alias_requires_uppercase=self.short_alias_uppercase,
        )

    def policy(self) -> DisambiguationPolicy:
        return DisambiguationPolicy(unresolved_action=_POLICY_NAMES[self.unresolved_policy])


def _merge_config(args: argparse.Namespace) -> RunConfig:
    """Build the run configuration: flags win over the config file, which wins
    over built-in defaults."""
    file_values: dict = {}
    if args.config:
        config_path = Path(args.config)
        if not config_path.is_file():
            raise InputError(f"{config_path}: config file not found")
        try:
            file_values = json.loads(config_path.read_text("utf-8"))
        except json.JSONDecodeError as exc:
            raise InputError(f"{config_path}: invalid JSON: {exc}") from exc
        if not isinstance(file_values, dict):
            raise InputError(f"{config_path}: config must be a JSON object")
    config = RunConfig()
    int_fields = {"end_year", "min_year", "top_k", "top_n", "short_alias_threshold"}
    bool_fields = {"case_fold", "hyphen_space_equiv", "short_alias_uppercase"}
    valid = {f.name for f in fields(RunConfig)}
    for key, value in file_values.items():
        if key not in valid:
            raise InputError(f"{args.config}: unknown config key {key!r}")
        if key in int_fields and (isinstance(value, bool) or not isinstance(value, int)):
            raise InputError(f"{args.config}: {key} must be an integer")
        if key in bool_fields and not isinstance(value, bool):
            raise InputError(f"{args.config}: {key} must be a boolean")
        if key not in int_fields and key not in bool_fields and not isinstance(value, str):
            raise InputError(f"{args.config}: {key} must be a string")
        setattr(config, key, value)
    for name in valid:
        flag_value = getattr(args, name, None)
        if flag_value is not None:
            setattr(config, name, flag_value)
    if config.unresolved_policy not in _POLICY_NAMES:
        raise InputError(f"unknown unresolved policy {config.unresolved_policy!r}")
    if config.top_k < 1:
        raise InputError("--top-k must be >= 1")
    if config.top_n < 1:
        raise InputError("--top-n must be >= 1")
    if config.corpus_format not in ("jsonl", "xml"):
        raise InputError(f"unknown corpus format {config.corpus_format!r}")
    if config.format not in (None, "tsv", "csv", "json"):
        raise InputError(f"unknown output format {config.format!r}")
    return config


def _require(config: RunConfig, *names: str) -> None:
    for name in names:
        if getattr(config, name) is None:
            flag = "--" + name.replace("_", "-")
            raise InputError(f"{flag} is required for this command")


def _load_inputs(config: RunConfig) -> tuple[list[Document], AlgorithmDictionary, Matcher]:
    _require(config, "corpus", "dictionary")
    warnings: list[str] = []
    dictionary = load_dictionary(config.dictionary, warnings=warnings)
    for warning in warnings:
        print(f"warning: {warning}", file=sys.stderr)
    abbreviations = load_abbreviations(config.abbreviations) if config.abbreviations else None
    corpus = load_corpus(
        config.corpus,
        format=config.corpus_format,
        min_year=config.min_year,
        abbreviations=abbreviations,
    )
    late = [d for d in corpus if d.year > config.end_year]
    if late:
        print(
            f"warning: excluding {len(late)} document(s) published after "
            f"end year {config.end_year}",
            file=sys.stderr,
        )
        corpus = [d for d in corpus if d.year <= config.end_year]
    return corpus, dictionary, build_matcher(dictionary, config.match_config())


def compute_tables(corpus, dictionary, matcher, config: RunConfig) -> dict[str, reports.Table]:
    """Build every output table from loaded inputs.

    `matcher` only needs find_mentions() and a patterns mapping, so a
    brute-force scanner can be swapped in for cross-checking.
    """
    # Extract with unresolved mentions kept so they can be summarized, then
    # apply the drop policy as a filter (equivalent by construction).
    policy = config.policy()
    keep = policy if policy.unresolved_action != "drop" else DisambiguationPolicy("keep_flagged")
    all_records = extract_corpus_mentions(corpus, matcher, dictionary, keep)
    if policy.unresolved_action == "drop":
        records = [r for r in all_records if r.resolution != "unresolved"]
    else:
        records = all_records
    matrix = mention_counts(records)
    totals = yearly_counts(corpus)
    series = all_influence_series(matrix, totals, config.end_year)
    if series:
        first = min(s.first_year for s in series.values())
        rankings = yearly_rankings(series, config.top_k, range(first, config.end_year + 1))
    else:
        rankings = {}
    scores = {canonical: s.score for canonical, s in series.items()}
    return {
        "mentions": reports.mentions_table(records),
        "unresolved": reports.unresolved_table(all_records, matcher),
        "influence": reports.influence_table(series, dictionary),
        "annual": reports.annual_table(series, config.end_year),
        "categories": reports.categories_table(
            category_summary(scores, dictionary, config.top_n)
        ),
        "rankings": reports.rankings_table(rankings),
        "era_counts": reports.era_counts_table(era_group_counts(rankings, dictionary)),
        "trends": reports.trends_table(series, TrendThresholds()),
    }


def _analysis_tables(config: RunConfig) -> dict[str, reports.Table]:
    corpus, dictionary, matcher = _load_inputs(config)
    return compute_tables(corpus, dictionary, matcher, config)


_COMMAND_TABLES = {
    "extract": ("mentions", "unresolved"),
    "influence": ("influence", "annual", "categories"),
    "rank": ("rankings", "era_counts"),
    "trends": ("trends",),
    "report": (
        "mentions",
        "unresolved",
        "influence",
        "annual",
        "categories",
        "rankings",
        "era_counts",
        "trends",
    ),
}


def _run_agreement(config: RunConfig) -> None:
    _require(config, "annotations_a", "annotations_b")
    corpus, dictionary, matcher = _load_inputs(config)
    sample_ids = {d.doc_id for d in corpus}
    annotations = {}
    for label, path in (("a", config.annotations_a), ("b", config.annotations_b)):
        annotation_set = agreement_mod.load_annotations(path, sample_ids)
        known = {e.canonical for e in dictionary.entries}
        stray = sorted({n for names in annotation_set.values() for n in names} - known)
        if stray:
            raise InputError(f"{path}: unknown algorithm name(s): {stray[:5]}")
        annotations[label] = annotation_set
    records = extract_corpus_mentions(corpus, matcher, dictionary, config.policy())
    extracted: dict[str, set[str]] = {doc_id: set() for doc_id in sample_ids}
    for record in records:
        if record.canonical:
            extracted[record.doc_id].add(record.canonical)
    merged = agreement_mod.merge_annotations(annotations["a"], annotations["b"])
    gold = agreement_mod.gold_standard(
        merged, {d: frozenset(v) for d, v in extracted.items()}
    )
    observed = set()
    for labels in (annotations["a"], annotations["b"], gold):
        for names in labels.values():
            observed.update(names)
    if not observed:
        raise InputError("no algorithms labeled or matched in the sample")
    universe = {(doc_id, name) for doc_id in sample_ids for name in observed}
    report = agreement_mod.agreement_report(annotations["a"], annotations["b"], gold, universe)
    out_dir = Path(config.out_dir)
    reports.atomic_write_text(out_dir / "agreement.json", reports.render_agreement_report(report))


def run(command: str, config: RunConfig) -> int:
    """Execute one pipeline command; returns the process exit code."""
    try:
        if command not in COMMANDS:
            raise InputError(f"unknown command {command!r}")
        if command == "agreement":
            _run_agreement(config)
        else:
            tables = _analysis_tables(config)
            out_dir = Path(config.out_dir)
            for name in _COMMAND_TABLES[command]:
                reports.write_table(tables[name], out_dir, config.format)
        return 0
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except Exception as exc:
        print(f"internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="algoscope",
        description="Extract named-algorithm mentions from a corpus and compute influence analytics.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for command in COMMANDS:
        p = sub.add_parser(command)
        p.add_argument("--config", help="JSON config file; explicit flags win")
        p.add_argument("--corpus", help="corpus file (JSONL or XML)")
        p.add_argument("--corpus-format", dest="corpus_format", choices=["jsonl", "xml"])
        p.add_argument("--dictionary", help="algorithm dictionary (JSON or TSV)")
        p.add_argument("--end-year", dest="end_year", type=int)
        p.add_argument("--min-year", dest="min_year", type=int)
        p.add_argument("--top-k", dest="top_k", type=int)
        p.add_argument("--top-n", dest="top_n", type=int)
        p.add_argument("--case-fold", dest="case_fold", action=argparse.BooleanOptionalAction)
        p.add_argument(
            "--hyphen-space-equiv",
            dest="hyphen_space_equiv",
            action=argparse.BooleanOptionalAction,
        )
        p.add_argument("--short-alias-threshold", dest="short_alias_threshold", type=int)
        p.add_argument(
            "--short-alias-uppercase",
            dest="short_alias_uppercase",
            action=argparse.BooleanOptionalAction,
        )
        p.add_argument(
            "--unresolved-policy",
            dest="unresolved_policy",
            choices=["drop", "keep", "assign-unique"],
        )
        p.add_argument("--abbreviations", help="custom sentence-splitter abbreviation list")
        p.add_argument("--out-dir", dest="out_dir")
        p.add_argument("--format", choices=["tsv", "csv", "json"])
        if command == "agreement":
            p.add_argument("--annotations-a", dest="annotations_a")
            p.add_argument("--annotations-b", dest="annotations_b")
    return parser


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        config = _merge_config(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return run(args.command, config)


if __name__ == "__main__":
    sys.exit(main())
