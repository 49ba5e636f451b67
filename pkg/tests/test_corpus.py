import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from algoscope.corpus import Document, load_abbreviations, load_corpus, segment_sentences, yearly_counts
from algoscope.errors import InputError


def write_jsonl(tmp_path, records, name="corpus.jsonl"):
    path = tmp_path / name
    path.write_text("\n".join(json.dumps(r) for r in records) + "\n", "utf-8")
    return path


class TestSegmentSentences:
    def test_plain_split(self):
        texts = [s.text for s in segment_sentences("We use SVM. It works.")]
        assert texts == ["We use SVM.", "It works."]

    def test_empty_input(self):
        assert segment_sentences("") == []

    def test_abbreviation_not_split(self):
        # "e.g." never starts a new sentence even when followed by a capital
        texts = [s.text for s in segment_sentences("Trained using the EM algorithm, e.g. on transducers.")]
        assert texts == ["Trained using the EM algorithm, e.g. on transducers."]
        texts = [s.text for s in segment_sentences("Several models, e.g. Markov chains, are used.")]
        assert texts == ["Several models, e.g. Markov chains, are used."]

    def test_single_capital_initial_not_split(self):
        texts = [s.text for s in segment_sentences("Results follow J. Smith closely. They hold.")]
        assert texts == ["Results follow J. Smith closely.", "They hold."]

    def test_et_al_not_split(self):
        texts = [s.text for s in segment_sentences("As shown by Lee et al. Nothing changed.")]
        assert texts == ["As shown by Lee et al. Nothing changed."]

    def test_split_requires_upper_or_digit(self):
        assert len(segment_sentences("First part. second part.")) == 1
        assert len(segment_sentences("First part. 2nd part.")) == 2

    def test_question_and_exclamation(self):
        texts = [s.text for s in segment_sentences("Does it work? Yes! Truly.")]
        assert texts == ["Does it work?", "Yes!", "Truly."]

    def test_whitespace_normalized(self):
        texts = [s.text for s in segment_sentences("A  b\tc   d. Next one here.")]
        assert texts == ["A b c d.", "Next one here."]
        assert all("\n" not in t for t in texts)

    def test_indices_contiguous(self):
        sentences = segment_sentences("One. Two. Three.")
        assert [s.index for s in sentences] == [0, 1, 2]
        assert all(s.section == "body" for s in sentences)

    words = st.text(alphabet="abcdefghijklmnopqrstuvwxyz", min_size=4, max_size=8)

    @given(a_words=st.lists(words, min_size=1, max_size=6), b_words=st.lists(words, min_size=1, max_size=6))
    @settings(max_examples=150)
    def test_concatenation_property(self, a_words, b_words):
        # a ends with a terminator, b starts uppercase: segmenting the
        # concatenation equals concatenating the segmentations
        a = " ".join(a_words) + "."
        b = (" ".join(b_words)).capitalize() + "."
        combined = [s.text for s in segment_sentences(a + " " + b)]
        separate = [s.text for s in segment_sentences(a)] + [s.text for s in segment_sentences(b)]
        assert combined == separate


class TestLoadCorpusJsonl:
    def test_three_records_in_order(self, tmp_path):
        path = write_jsonl(
            tmp_path,
            [
                {"doc_id": "a", "year": 2001, "title": "", "text": "One sentence."},
                {"doc_id": "b", "year": 2002, "title": "", "text": "Another."},
                {"doc_id": "c", "year": 2003, "title": "", "text": ""},
            ],
        )
        docs = load_corpus(path)
        assert [d.doc_id for d in docs] == ["a", "b", "c"]

    def test_fields_preserved(self, tmp_path):
        path = write_jsonl(
            tmp_path,
            [
                {
                    "doc_id": "P01-1049",
                    "year": 2001,
                    "title": "Building Semantic Perceptron Net for Topic Spotting",
                    "text": "",
                }
            ],
        )
        doc = load_corpus(path)[0]
        assert doc.doc_id == "P01-1049"
        assert doc.year == 2001
        assert doc.title == "Building Semantic Perceptron Net for Topic Spotting"

    def test_missing_year_names_record(self, tmp_path):
        path = write_jsonl(tmp_path, [{"doc_id": "x1", "title": "t", "text": ""}])
        with pytest.raises(InputError, match="x1.*missing 'year'"):
            load_corpus(path)

    def test_duplicate_doc_id_rejected(self, tmp_path):
        path = write_jsonl(
            tmp_path,
            [
                {"doc_id": "a", "year": 2000, "text": ""},
                {"doc_id": "a", "year": 2001, "text": ""},
            ],
        )
        with pytest.raises(InputError, match="duplicate doc_id"):
            load_corpus(path)

    def test_year_window(self, tmp_path):
        path = write_jsonl(tmp_path, [{"doc_id": "a", "year": 1825, "text": ""}])
        with pytest.raises(InputError, match="outside window"):
            load_corpus(path)
        path2 = write_jsonl(tmp_path, [{"doc_id": "a", "year": 2030, "text": ""}], "c2.jsonl")
        with pytest.raises(InputError, match="outside window"):
            load_corpus(path2, max_year=2015)
        assert len(load_corpus(path2)) == 1

    def test_invalid_json_line_located(self, tmp_path):
        path = tmp_path / "bad.jsonl"
        path.write_text('{"doc_id": "a", "year": 2000, "text": ""}\n{oops\n', "utf-8")
        with pytest.raises(InputError, match="bad.jsonl:2"):
            load_corpus(path)

    def test_presegmented_kept_verbatim(self, tmp_path):
        path = write_jsonl(
            tmp_path,
            [
                {
                    "doc_id": "a",
                    "year": 2000,
                    "title": "Ignored Title",
                    "sentences": [
                        {"section": "abstract", "text": "Kept  exactly as   written. No resegmentation."},
                        {"section": "weird", "text": "Unknown tag collapses."},
                    ],
                }
            ],
        )
        doc = load_corpus(path)[0]
        assert [s.text for s in doc.sentences] == [
            "Kept  exactly as   written. No resegmentation.",
            "Unknown tag collapses.",
        ]
        assert [s.section for s in doc.sentences] == ["abstract", "other"]
        assert [s.index for s in doc.sentences] == [0, 1]

    def test_presegmented_newline_rejected(self, tmp_path):
        path = write_jsonl(
            tmp_path,
            [{"doc_id": "a", "year": 2000, "sentences": [{"text": "bad\nsentence"}]}],
        )
        with pytest.raises(InputError, match="newline"):
            load_corpus(path)

    def test_raw_record_title_becomes_title_sentence(self, tmp_path):
        path = write_jsonl(
            tmp_path,
            [{"doc_id": "a", "year": 2000, "title": "A Fine Title", "text": "Body here."}],
        )
        doc = load_corpus(path)[0]
        assert doc.sentences[0].section == "title"
        assert doc.sentences[0].text == "A Fine Title"
        assert doc.sentences[1].section == "body"

    def test_deterministic(self, tmp_path):
        path = write_jsonl(
            tmp_path,
            [{"doc_id": "a", "year": 2000, "title": "T", "text": "One. Two B."}],
        )
        assert load_corpus(path) == load_corpus(path)


class TestLoadCorpusXml:
    def test_adapter_schema(self, tmp_path):
        path = tmp_path / "corpus.xml"
        path.write_text(
            """<?xml version="1.0" encoding="UTF-8"?>
<corpus>
  <document id="X1" year="1999">
    <title>Sample Title</title>
    <section name="abstract">
      <sentence>Presplit sentence.</sentence>
    </section>
    <section name="body">
      <paragraph>First body sentence here. Second one follows.</paragraph>
    </section>
  </document>
</corpus>
""",
            "utf-8",
        )
        doc = load_corpus(path, format="xml")[0]
        assert doc.doc_id == "X1"
        assert doc.year == 1999
        assert [(s.section, s.text) for s in doc.sentences] == [
            ("title", "Sample Title"),
            ("abstract", "Presplit sentence."),
            ("body", "First body sentence here."),
            ("body", "Second one follows."),
        ]

    def test_missing_year_attribute(self, tmp_path):
        path = tmp_path / "c.xml"
        path.write_text('<corpus><document id="a"/></corpus>', "utf-8")
        with pytest.raises(InputError, match="year"):
            load_corpus(path, format="xml")


class TestYearlyCounts:
    def test_direct_count(self, tmp_path):
        path = write_jsonl(
            tmp_path,
            [
                {"doc_id": "a", "year": 1998, "text": ""},
                {"doc_id": "b", "year": 1998, "text": ""},
                {"doc_id": "c", "year": 1999, "text": ""},
            ],
        )
        assert yearly_counts(load_corpus(path)) == {1998: 2, 1999: 1}

    def test_empty_corpus(self):
        assert yearly_counts([]) == {}

    @given(years=st.lists(st.integers(min_value=1950, max_value=2020), max_size=60))
    def test_totals_sum_to_corpus_size(self, years, tmp_path_factory):
        records = [{"doc_id": f"d{i}", "year": y, "text": ""} for i, y in enumerate(years)]
        tmp = tmp_path_factory.mktemp("yc")
        docs = load_corpus(write_jsonl(tmp, records)) if records else []
        counts = yearly_counts(docs)
        assert sum(counts.values()) == len(docs) == len(years)
        assert all(v > 0 for v in counts.values())

    def test_totals_sum_at_conference_scale(self):
        docs = [Document(f"d{i}", 1979 + (i % 37), "", ()) for i in range(4641)]
        assert sum(yearly_counts(docs).values()) == 4641


def test_custom_abbreviation_list(tmp_path):
    path = tmp_path / "abbrev.txt"
    path.write_text("# local additions\nAlg.\n", "utf-8")
    custom = load_abbreviations(path)
    default_split = segment_sentences("See Alg. 2 for details.")
    custom_split = segment_sentences("See Alg. 2 for details.", abbreviations=custom)
    assert len(default_split) == 2
    assert len(custom_split) == 1
