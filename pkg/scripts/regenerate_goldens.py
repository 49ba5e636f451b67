#!/usr/bin/env python3
"""Regenerate tests/golden/ from the bundled demo corpus and seed dictionary.

Extraction runs through the brute-force oracle scanner rather than the trie
matcher, so the checked-in goldens are an independent reference: the golden
test exercises the production path against them byte-for-byte.  Regenerate
only after reviewing the diff by hand.
"""

from __future__ import annotations

import sys
from pathlib import Path

from algoscope import reports
from algoscope.cli import RunConfig, compute_tables
from algoscope.corpus import load_corpus
from algoscope.dictionary import AlgorithmDictionary, load_dictionary
from algoscope.matcher import MatchConfig, normalize_pattern, oracle_scan
from algoscope.resources import demo_corpus_path, seed_dictionary_path

GOLDEN_DIR = Path(__file__).resolve().parent.parent / "tests" / "golden"


class BruteForceMatcher:
    """Drop-in matcher backed by oracle_scan."""

    def __init__(self, dictionary: AlgorithmDictionary, config: MatchConfig) -> None:
        self.dictionary = dictionary
        self.config = config
        patterns: dict[str, set[str]] = {}
        for entry in dictionary.entries:
            for alias in entry.aliases:
                patterns.setdefault(normalize_pattern(alias, config), set()).add(entry.canonical)
        self.patterns = {p: frozenset(c) for p, c in patterns.items()}

    def find_mentions(self, sentence):
        return oracle_scan(self.dictionary, self.config, sentence)


def main() -> int:
    config = RunConfig(
        corpus=str(demo_corpus_path()),
        dictionary=str(seed_dictionary_path()),
        end_year=2015,
        out_dir=str(GOLDEN_DIR),
    )
    dictionary = load_dictionary(config.dictionary)
    corpus = load_corpus(config.corpus)
    matcher = BruteForceMatcher(dictionary, config.match_config())
    tables = compute_tables(corpus, dictionary, matcher, config)
    GOLDEN_DIR.mkdir(parents=True, exist_ok=True)
    for table in tables.values():
        path = reports.write_table(table, GOLDEN_DIR)
        print(f"wrote {path}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
