"""Corpus loading, sentence segmentation, and yearly publication totals.

A corpus is a list of immutable :class:`Document` values.  Two input formats
are supported: JSONL (canonical) and a simplified XML layout (see the README
for both schemas).  Raw-text records are split into sentences by a
deterministic rule-based segmenter.
"""

from __future__ import annotations

import json
import xml.etree.ElementTree as ET
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from .errors import InputError

SECTIONS = ("title", "abstract", "body", "caption", "other")

_TERMINATORS = ".!?"


@dataclass(frozen=True)
class Sentence:
    index: int
    section: str
    text: str


@dataclass(frozen=True)
class Document:
    doc_id: str
    year: int
    title: str
    sentences: tuple[Sentence, ...]


def load_abbreviations(path: str | Path | None = None) -> frozenset[str]:
    """Read the non-splitting abbreviation list; returns lowercased final tokens.

    With no path the bundled default list is used.  Multi-word entries such as
    "et al." contribute their final token ("al.").
    """
    if path is None:
        text = resources.files("algoscope.data").joinpath("abbreviations.txt").read_text("utf-8")
    else:
        text = Path(path).read_text("utf-8")
    tokens = set()
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        tokens.add(line.split()[-1].lower())
    return frozenset(tokens)


_DEFAULT_ABBREVIATIONS: frozenset[str] | None = None


def _default_abbreviations() -> frozenset[str]:
    global _DEFAULT_ABBREVIATIONS
    if _DEFAULT_ABBREVIATIONS is None:
        _DEFAULT_ABBREVIATIONS = load_abbreviations()
    return _DEFAULT_ABBREVIATIONS


def _suppressed_by_abbreviation(text: str, dot: int, abbreviations: frozenset[str]) -> bool:
    # Token = run of non-space characters ending at the period, with any
    # leading quote/bracket punctuation stripped.
    start = dot
    while start > 0 and not text[start - 1].isspace():
        start -= 1
    token = text[start : dot + 1].lstrip("\"'([{“‘")
    if token.lower() in abbreviations:
        return True
    # Single capital letter, e.g. an author initial "J."
    return len(token) == 2 and token[0].isalpha() and token[0].isupper()


def segment_sentences(
    raw_text: str,
    section: str = "body",
    abbreviations: frozenset[str] | None = None,
    index_base: int = 0,
) -> list[Sentence]:
    """Split raw text into sentences by a deterministic punctuation rule.

    A split happens after a run of sentence terminators (. ! ?) that is
    followed by whitespace and then an uppercase letter or digit, unless the
    run is a single period preceded by a listed abbreviation or a single
    capital letter.  Whitespace inside each sentence is collapsed to single
    spaces.
    """
    if abbreviations is None:
        abbreviations = _default_abbreviations()
    text = raw_text
    n = len(text)
    breaks = []
    i = 0
    while i < n:
        if text[i] not in _TERMINATORS:
            i += 1
            continue
        j = i
        while j + 1 < n and text[j + 1] in _TERMINATORS:
            j += 1
        k = j + 1
        while k < n and text[k].isspace():
            k += 1
        if k > j + 1 and k < n and (text[k].isupper() or text[k].isdigit()):
            single_period = i == j and text[i] == "."
            if not (single_period and _suppressed_by_abbreviation(text, i, abbreviations)):
                breaks.append(j + 1)
        i = j + 1
    sentences = []
    prev = 0
    for cut in breaks + [n]:
        piece = " ".join(text[prev:cut].split())
        if piece:
            sentences.append(Sentence(index_base + len(sentences), section, piece))
        prev = cut
    return sentences


def _normalize_section(tag: str) -> str:
    tag = tag.strip().lower()
    return tag if tag in SECTIONS else "other"


def _check_year(year: object, locus: str, min_year: int, max_year: int | None) -> int:
    if isinstance(year, bool) or not isinstance(year, int):
        raise InputError(f"{locus}: year must be an integer, got {year!r}")
    if year < min_year or (max_year is not None and year > max_year):
        window = f"[{min_year}, {max_year if max_year is not None else 'inf'}]"
        raise InputError(f"{locus}: year {year} outside window {window}")
    return year


def _presegmented(items: object, locus: str) -> list[tuple[str, str]]:
    if not isinstance(items, list):
        raise InputError(f"{locus}: 'sentences' must be a list")
    out = []
    for pos, item in enumerate(items):
        if not isinstance(item, dict) or not isinstance(item.get("text"), str):
            raise InputError(f"{locus}: sentence {pos} must be an object with a 'text' string")
        text = item["text"]
        if "\n" in text or "\r" in text:
            raise InputError(f"{locus}: sentence {pos} contains a newline")
        out.append((_normalize_section(str(item.get("section", "body"))), text))
    return out


def _build_document(
    doc_id: str,
    year: int,
    title: str,
    presegmented: list[tuple[str, str]] | None,
    raw_text: str | None,
    abbreviations: frozenset[str] | None,
) -> Document:
    sentences: list[Sentence] = []
    if presegmented is not None:
        # Explicit sentence lists are preserved verbatim and fully control
        # what gets matched (including whether the title appears).
        for section, text in presegmented:
            sentences.append(Sentence(len(sentences), section, text))
    else:
        if title.strip():
            sentences.extend(segment_sentences(title, "title", abbreviations))
        if raw_text:
            sentences.extend(
                segment_sentences(raw_text, "body", abbreviations, index_base=len(sentences))
            )
    return Document(doc_id, year, title, tuple(sentences))


def _load_jsonl(
    path: Path,
    min_year: int,
    max_year: int | None,
    abbreviations: frozenset[str] | None,
) -> list[Document]:
    documents = []
    seen = set()
    with open(path, encoding="utf-8") as handle:
        for lineno, line in enumerate(handle, start=1):
            if not line.strip():
                continue
            locus = f"{path}:{lineno}"
            try:
                record = json.loads(line)
            except json.JSONDecodeError as exc:
                raise InputError(f"{locus}: invalid JSON: {exc}") from exc
            if not isinstance(record, dict):
                raise InputError(f"{locus}: record must be a JSON object")
            doc_id = record.get("doc_id")
            if not isinstance(doc_id, str) or not doc_id:
                raise InputError(f"{locus}: missing or empty 'doc_id'")
            if "year" not in record:
                raise InputError(f"{locus}: record {doc_id!r} is missing 'year'")
            year = _check_year(record["year"], f"{locus} ({doc_id})", min_year, max_year)
            if doc_id in seen:
                raise InputError(f"{locus}: duplicate doc_id {doc_id!r}")
            seen.add(doc_id)
            title = record.get("title", "")
            if not isinstance(title, str):
                raise InputError(f"{locus}: 'title' must be a string")
            if "sentences" in record and "text" in record:
                raise InputError(f"{locus}: record {doc_id!r} has both 'sentences' and 'text'")
            presegmented = None
            raw_text = None
            if "sentences" in record:
                presegmented = _presegmented(record["sentences"], f"{locus} ({doc_id})")
            else:
                raw_text = record.get("text", "")
                if not isinstance(raw_text, str):
                    raise InputError(f"{locus}: 'text' must be a string")
            documents.append(
                _build_document(doc_id, year, title, presegmented, raw_text, abbreviations)
            )
    return documents


def _element_text(elem: ET.Element) -> str:
    return " ".join("".join(elem.itertext()).split())


def _load_xml(
    path: Path,
    min_year: int,
    max_year: int | None,
    abbreviations: frozenset[str] | None,
) -> list[Document]:
    try:
        root = ET.parse(path).getroot()
    except ET.ParseError as exc:
        raise InputError(f"{path}: invalid XML: {exc}") from exc
    documents = []
    seen = set()
    for pos, doc_elem in enumerate(root.iter("document")):
        locus = f"{path}: document[{pos}]"
        doc_id = doc_elem.get("id")
        if not doc_id:
            raise InputError(f"{locus}: missing 'id' attribute")
        locus = f"{path}: document id={doc_id!r}"
        if doc_id in seen:
            raise InputError(f"{locus}: duplicate doc_id")
        seen.add(doc_id)
        year_attr = doc_elem.get("year")
        if year_attr is None:
            raise InputError(f"{locus}: missing 'year' attribute")
        try:
            year = int(year_attr)
        except ValueError:
            raise InputError(f"{locus}: year must be an integer, got {year_attr!r}") from None
        year = _check_year(year, locus, min_year, max_year)
        title_elem = doc_elem.find("title")
        title = _element_text(title_elem) if title_elem is not None else ""
        sentences: list[Sentence] = []
        if title:
            sentences.extend(segment_sentences(title, "title", abbreviations))
        for section_elem in doc_elem.iter("section"):
            section = _normalize_section(section_elem.get("name", "body"))
            for child in section_elem:
                text = _element_text(child)
                if not text:
                    continue
                if child.tag == "sentence":
                    sentences.append(Sentence(len(sentences), section, text))
                elif child.tag == "paragraph":
                    sentences.extend(
                        segment_sentences(text, section, abbreviations, index_base=len(sentences))
                    )
                else:
                    raise InputError(f"{locus}: unexpected element <{child.tag}> in <section>")
        documents.append(Document(doc_id, year, title, tuple(sentences)))
    return documents


def load_corpus(
    path: str | Path,
    format: str = "jsonl",
    min_year: int = 1900,
    max_year: int | None = None,
    abbreviations: frozenset[str] | None = None,
) -> list[Document]:
    """Load a corpus file into documents, in file order.

    Duplicate doc_ids and years outside [min_year, max_year] are rejected.
    Records carrying pre-segmented sentences are preserved verbatim; raw-text
    records run through :func:`segment_sentences` (title first, tagged
    "title", then the body text).
    """
    path = Path(path)
    if not path.is_file():
        raise InputError(f"{path}: corpus file not found")
    if format == "jsonl":
        return _load_jsonl(path, min_year, max_year, abbreviations)
    if format == "xml":
        return _load_xml(path, min_year, max_year, abbreviations)
    raise InputError(f"unknown corpus format {format!r} (expected 'jsonl' or 'xml')")


def yearly_counts(corpus: list[Document]) -> dict[int, int]:
    """Count documents per publication year; years with no documents are absent."""
    counts: dict[int, int] = {}
    for doc in corpus:
        counts[doc.year] = counts.get(doc.year, 0) + 1
    return dict(sorted(counts.items()))
