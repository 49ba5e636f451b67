import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from algoscope.dictionary import (
    CATEGORIES,
    ERA_GROUPS,
    build_dictionary,
    dump_dictionary,
    load_dictionary,
    make_entry,
    normalize_name,
    validate_dictionary,
)
from algoscope.errors import InputError


def write_json(tmp_path, entries, name="dict.json"):
    path = tmp_path / name
    path.write_text(json.dumps(entries), "utf-8")
    return path


class TestLoadDictionary:
    def test_multi_alias_entry(self, tmp_path):
        path = write_json(
            tmp_path,
            [
                {
                    "canonical": "Support Vector Machine",
                    "aliases": [
                        "svm",
                        "svms",
                        "support vector machines",
                        "support-vector machines",
                        "support-vector machine",
                    ],
                }
            ],
        )
        d = load_dictionary(path)
        entry = d.entries[0]
        assert entry.canonical == "support vector machine"
        # canonical plus five aliases; hyphenated forms stay distinct at load time
        assert len(entry.aliases) == 6
        assert "support vector machine" in entry.aliases

    def test_shared_alias_is_legal_and_indexed(self, tmp_path):
        path = write_json(
            tmp_path,
            [
                {"canonical": "back propagation", "aliases": ["bp"], "abbreviations": ["bp"]},
                {"canonical": "belief propagation", "aliases": ["bp"], "abbreviations": ["bp"]},
            ],
        )
        d = load_dictionary(path)
        assert len(d.entries) == 2
        assert d.ambiguous_aliases == {"bp": frozenset({"back propagation", "belief propagation"})}

    def test_empty_dictionary_rejected(self, tmp_path):
        with pytest.raises(InputError, match="no entries"):
            load_dictionary(write_json(tmp_path, []))

    def test_empty_canonical_rejected(self, tmp_path):
        with pytest.raises(InputError, match="empty canonical"):
            load_dictionary(write_json(tmp_path, [{"canonical": "   "}]))

    def test_duplicate_canonical_rejected(self, tmp_path):
        path = write_json(tmp_path, [{"canonical": "svm"}, {"canonical": "SVM"}])
        with pytest.raises(InputError, match="duplicate canonical"):
            load_dictionary(path)

    def test_unknown_tags_rejected(self, tmp_path):
        with pytest.raises(InputError, match="unknown category"):
            load_dictionary(write_json(tmp_path, [{"canonical": "x", "category": "magic"}]))
        with pytest.raises(InputError, match="unknown era_group"):
            load_dictionary(write_json(tmp_path, [{"canonical": "x", "era_group": "stone_age"}]))

    def test_duplicate_alias_warns_and_dedups(self, tmp_path):
        path = write_json(
            tmp_path, [{"canonical": "k-means", "aliases": ["K-Means", "kmeans"]}]
        )
        warnings = []
        d = load_dictionary(path, warnings=warnings)
        assert d.entries[0].aliases == frozenset({"k-means", "kmeans"})
        assert len(warnings) == 1 and "duplicate alias" in warnings[0]

    def test_tsv_import(self, tmp_path):
        path = tmp_path / "dict.tsv"
        path.write_text(
            "Support Vector Machine\tsvm|support vector machines\n"
            "Expectation Maximization\tem|em-algorithm\t\toptimization\ttraditional_ml\n",
            "utf-8",
        )
        d = load_dictionary(path)
        svm, em = d.entries
        assert svm.aliases == frozenset({"support vector machine", "svm", "support vector machines"})
        # without an abbreviations column, short aliases are assumed abbreviations
        assert svm.abbreviations == frozenset({"svm"})
        assert em.abbreviations == frozenset({"em"})
        assert em.category == "optimization"
        assert em.era_group == "traditional_ml"

    def test_round_trip_stability(self, tmp_path, seed_dictionary):
        out = tmp_path / "dumped.json"
        dump_dictionary(seed_dictionary, out)
        reloaded = load_dictionary(out)
        assert reloaded == seed_dictionary
        dump_dictionary(reloaded, tmp_path / "dumped2.json")
        assert (tmp_path / "dumped2.json").read_bytes() == out.read_bytes()


class TestValidateDictionary:
    def test_short_and_stopword_alias_flagged(self):
        d = build_dictionary([make_entry("maximum entropy", ["me", "maxent"], ["me"])])
        report = validate_dictionary(d)
        assert "me" in report.short_aliases
        assert "me" in report.stopword_aliases

    def test_clean_dictionary_empty_report(self):
        d = build_dictionary([make_entry("gradient descent", ["gradient-descent"])])
        report = validate_dictionary(d)
        assert report.is_clean()

    def test_ambiguous_alias_listed_with_candidates(self):
        d = build_dictionary(
            [
                make_entry("expectation maximization", ["em"], ["em"]),
                make_entry("entity matching", ["em"], ["em"]),
            ]
        )
        report = validate_dictionary(d)
        assert report.ambiguous["em"] == frozenset({"expectation maximization", "entity matching"})


names = st.text(alphabet="abcdefgh ", min_size=1, max_size=12).map(normalize_name).filter(bool)


@given(alias_sets=st.lists(st.sets(names, min_size=1, max_size=4), min_size=1, max_size=10))
@settings(max_examples=100)
def test_ambiguity_index_matches_brute_force(alias_sets):
    entries = [
        make_entry(f"algorithm {i}", sorted(aliases)) for i, aliases in enumerate(alias_sets)
    ]
    d = build_dictionary(entries)
    owners = {}
    for entry in entries:
        for alias in entry.aliases:
            owners.setdefault(alias, set()).add(entry.canonical)
    expected = {a: frozenset(c) for a, c in owners.items() if len(c) >= 2}
    assert d.ambiguous_aliases == expected


def test_name_accounting(seed_dictionary):
    # total alias slots minus cross-entry duplicates equals distinct names
    slots = sum(len(e.aliases) for e in seed_dictionary.entries)
    distinct = {a for e in seed_dictionary.entries for a in e.aliases}
    duplicate_slots = slots - len(distinct)
    shared_recount = sum(
        len(owners) - 1 for owners in seed_dictionary.alias_owners().values() if len(owners) >= 2
    )
    assert duplicate_slots == shared_recount


def test_seed_dictionary_tags_are_valid(seed_dictionary):
    assert len(seed_dictionary.entries) >= 40
    for entry in seed_dictionary.entries:
        assert entry.category in CATEGORIES
        assert entry.era_group in ERA_GROUPS
        assert entry.canonical in entry.aliases
        assert entry.abbreviations <= entry.aliases
