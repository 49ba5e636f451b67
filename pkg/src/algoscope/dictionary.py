"""The algorithm-name dictionary: canonical names, aliases, abbreviations,
category, and era-group tags.

Alias strings are normalized at load time (case-folded, whitespace collapsed).
Hyphen/space equivalence is deliberately NOT applied here: it is a matcher
configuration choice, so "support-vector machine" and "support vector machine"
stay distinct aliases of one entry and only merge into a single pattern when
the matcher is built with hyphen folding on.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

from .errors import InputError

CATEGORIES = (
    "classification",
    "clustering",
    "dimension_reduction",
    "grammar",
    "ensemble",
    "link_analysis",
    "metric",
    "neural_network",
    "optimization",
    "probabilistic_graphical_model",
    "regression",
    "search",
    "nlp_unique",
    "other",
)

ERA_GROUPS = ("syntactic", "traditional_ml", "deep_learning", "other")

# Aliases at or below this normalized length are high false-positive risks
# ("em", "nb", "me") and are flagged by the validator.  The matcher has its
# own, configurable copy of the threshold.
SHORT_ALIAS_THRESHOLD = 3


def normalize_name(name: str) -> str:
    """Case-fold and collapse internal whitespace; the dictionary-level normal form."""
    return " ".join(name.casefold().split())


@dataclass(frozen=True)
class AlgorithmEntry:
    canonical: str
    aliases: frozenset[str]
    abbreviations: frozenset[str]
    category: str | None = None
    era_group: str | None = None


@dataclass(frozen=True)
class AlgorithmDictionary:
    entries: tuple[AlgorithmEntry, ...]
    ambiguous_aliases: dict[str, frozenset[str]] = field(default_factory=dict)

    def __len__(self) -> int:
        return len(self.entries)

    def alias_owners(self) -> dict[str, frozenset[str]]:
        """Map every alias to the set of canonical names owning it."""
        owners: dict[str, set[str]] = {}
        for entry in self.entries:
            for alias in entry.aliases:
                owners.setdefault(alias, set()).add(entry.canonical)
        return {alias: frozenset(names) for alias, names in owners.items()}


def _ambiguous(entries: list[AlgorithmEntry]) -> dict[str, frozenset[str]]:
    owners: dict[str, set[str]] = {}
    for entry in entries:
        for alias in entry.aliases:
            owners.setdefault(alias, set()).add(entry.canonical)
    return {a: frozenset(c) for a, c in sorted(owners.items()) if len(c) >= 2}


def _make_entry(
    canonical: str,
    aliases: list[str],
    abbreviations: list[str],
    category: str | None,
    era_group: str | None,
    locus: str,
    warnings: list[str],
) -> AlgorithmEntry:
    norm_canonical = normalize_name(canonical)
    if not norm_canonical:
        raise InputError(f"{locus}: empty canonical name")
    norm_aliases: list[str] = []
    for alias in [canonical, *aliases]:
        norm = normalize_name(alias)
        if not norm:
            raise InputError(f"{locus}: entry {norm_canonical!r} has an empty alias")
        if norm in norm_aliases:
            warnings.append(f"{locus}: entry {norm_canonical!r} lists duplicate alias {norm!r}")
        else:
            norm_aliases.append(norm)
    norm_abbrevs = set()
    for abbrev in abbreviations:
        norm = normalize_name(abbrev)
        if norm not in norm_aliases:
            raise InputError(
                f"{locus}: entry {norm_canonical!r} flags {norm!r} as an abbreviation "
                "but does not list it as an alias"
            )
        norm_abbrevs.add(norm)
    if category is not None and category not in CATEGORIES:
        raise InputError(f"{locus}: entry {norm_canonical!r} has unknown category {category!r}")
    if era_group is not None and era_group not in ERA_GROUPS:
        raise InputError(f"{locus}: entry {norm_canonical!r} has unknown era_group {era_group!r}")
    return AlgorithmEntry(
        canonical=norm_canonical,
        aliases=frozenset(norm_aliases),
        abbreviations=frozenset(norm_abbrevs),
        category=category,
        era_group=era_group,
    )


def _load_json_entries(path: Path, warnings: list[str]) -> list[AlgorithmEntry]:
    try:
        data = json.loads(path.read_text("utf-8"))
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: invalid JSON: {exc}") from exc
    if not isinstance(data, list):
        raise InputError(f"{path}: expected a JSON array of entries")
    entries = []
    for pos, item in enumerate(data):
        locus = f"{path}: entry[{pos}]"
        if not isinstance(item, dict) or "canonical" not in item:
            raise InputError(f"{locus}: expected an object with a 'canonical' field")
        entries.append(
            _make_entry(
                str(item["canonical"]),
                [str(a) for a in item.get("aliases", [])],
                [str(a) for a in item.get("abbreviations", [])],
                item.get("category"),
                item.get("era_group"),
                locus,
                warnings,
            )
        )
    return entries


def _load_tsv_entries(path: Path, warnings: list[str]) -> list[AlgorithmEntry]:
    # One algorithm per line: canonical <TAB> pipe-separated aliases, with
    # optional extra columns for abbreviations, category, and era group.
    # Without an abbreviations column, aliases at or below the short-alias
    # threshold are assumed to be abbreviations.
    entries = []
    for lineno, line in enumerate(path.read_text("utf-8").splitlines(), start=1):
        if not line.strip() or line.startswith("#"):
            continue
        locus = f"{path}:{lineno}"
        columns = line.rstrip("\n").split("\t")
        canonical = columns[0]
        aliases = [a for a in columns[1].split("|") if a.strip()] if len(columns) > 1 else []
        if len(columns) > 2 and columns[2].strip():
            abbreviations = [a for a in columns[2].split("|") if a.strip()]
        else:
            abbreviations = [
                a
                for a in [canonical, *aliases]
                if len(normalize_name(a)) <= SHORT_ALIAS_THRESHOLD
            ]
        category = columns[3].strip() or None if len(columns) > 3 else None
        era_group = columns[4].strip() or None if len(columns) > 4 else None
        entries.append(
            _make_entry(canonical, aliases, abbreviations, category, era_group, locus, warnings)
        )
    return entries


def make_entry(
    canonical: str,
    aliases: list[str] | tuple[str, ...] = (),
    abbreviations: list[str] | tuple[str, ...] = (),
    category: str | None = None,
    era_group: str | None = None,
) -> AlgorithmEntry:
    """Build one normalized, validated entry programmatically."""
    warnings: list[str] = []
    return _make_entry(
        canonical, list(aliases), list(abbreviations), category, era_group, "entry", warnings
    )


def build_dictionary(entries: list[AlgorithmEntry] | tuple[AlgorithmEntry, ...]) -> AlgorithmDictionary:
    """Assemble entries into a dictionary, deriving the shared-alias index."""
    entries = list(entries)
    if not entries:
        raise InputError("dictionary has no entries")
    seen = set()
    for entry in entries:
        if entry.canonical in seen:
            raise InputError(f"duplicate canonical name {entry.canonical!r}")
        seen.add(entry.canonical)
    return AlgorithmDictionary(tuple(entries), _ambiguous(entries))


def load_dictionary(
    path: str | Path,
    format: str | None = None,
    warnings: list[str] | None = None,
) -> AlgorithmDictionary:
    """Load a dictionary file (JSON array or TSV; inferred from the suffix).

    Within-entry duplicate aliases are dropped with a warning (appended to
    `warnings` when given).  Aliases shared across entries are legal and are
    recorded in `ambiguous_aliases`.
    """
    path = Path(path)
    if not path.is_file():
        raise InputError(f"{path}: dictionary file not found")
    if format is None:
        format = "tsv" if path.suffix.lower() in (".tsv", ".txt") else "json"
    if warnings is None:
        warnings = []
    if format == "json":
        entries = _load_json_entries(path, warnings)
    elif format == "tsv":
        entries = _load_tsv_entries(path, warnings)
    else:
        raise InputError(f"unknown dictionary format {format!r} (expected 'json' or 'tsv')")
    if not entries:
        raise InputError(f"{path}: dictionary has no entries")
    try:
        return build_dictionary(entries)
    except InputError as exc:
        raise InputError(f"{path}: {exc}") from exc


def dump_dictionary(dictionary: AlgorithmDictionary, path: str | Path) -> None:
    """Serialize to the JSON entry format; load_dictionary round-trips it."""
    data = [
        {
            "canonical": e.canonical,
            "aliases": sorted(e.aliases - {e.canonical}),
            "abbreviations": sorted(e.abbreviations),
            **({"category": e.category} if e.category else {}),
            **({"era_group": e.era_group} if e.era_group else {}),
        }
        for e in dictionary.entries
    ]
    Path(path).write_text(json.dumps(data, ensure_ascii=False, indent=2) + "\n", "utf-8")


def load_stopwords(path: str | Path | None = None) -> frozenset[str]:
    if path is None:
        text = resources.files("algoscope.data").joinpath("stopwords.txt").read_text("utf-8")
    else:
        text = Path(path).read_text("utf-8")
    words = set()
    for line in text.splitlines():
        line = line.strip()
        if line and not line.startswith("#"):
            words.add(line.casefold())
    return frozenset(words)


@dataclass(frozen=True)
class ValidationReport:
    ambiguous: dict[str, frozenset[str]]
    short_aliases: tuple[str, ...]
    stopword_aliases: tuple[str, ...]

    def is_clean(self) -> bool:
        return not (self.ambiguous or self.short_aliases or self.stopword_aliases)


def validate_dictionary(
    dictionary: AlgorithmDictionary,
    short_threshold: int = SHORT_ALIAS_THRESHOLD,
    stopwords: frozenset[str] | None = None,
) -> ValidationReport:
    """Report risky dictionary content without mutating anything."""
    if stopwords is None:
        stopwords = load_stopwords()
    aliases = sorted({a for e in dictionary.entries for a in e.aliases})
    return ValidationReport(
        ambiguous=dict(dictionary.ambiguous_aliases),
        short_aliases=tuple(a for a in aliases if len(a) <= short_threshold),
        stopword_aliases=tuple(a for a in aliases if a in stopwords),
    )
