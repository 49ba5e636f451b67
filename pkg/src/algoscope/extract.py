"""Turn raw alias matches into resolved mention records.

Resolution works per document:

* an alias owned by exactly one entry and longer than the short-alias
  threshold resolves directly;
* a short or shared alias resolves to the one candidate, if any, whose
  non-abbreviated name also appears somewhere else in the same document
  (co-occurrence); evidence supporting two or more candidates resolves
  nothing, since mentions are never guessed;
* failing that, a single-candidate alias may be assigned its only candidate
  under the ``assign_unique`` policy;
* anything else is unresolved and is dropped or kept flagged per policy.
"""

from __future__ import annotations

from dataclasses import dataclass

from .corpus import Document
from .dictionary import AlgorithmDictionary
from .errors import InputError
from .matcher import Matcher, RawMention

UNRESOLVED_ACTIONS = ("drop", "keep_flagged", "assign_unique")

RESOLUTIONS = ("direct", "cooccurrence", "unique_candidate", "unresolved")


@dataclass(frozen=True)
class DisambiguationPolicy:
    unresolved_action: str = "drop"
    scope: str = "document"

    def __post_init__(self) -> None:
        if self.unresolved_action not in UNRESOLVED_ACTIONS:
            raise InputError(f"unknown unresolved_action {self.unresolved_action!r}")
        if self.scope != "document":
            raise InputError("only document-scoped disambiguation is supported")


@dataclass(frozen=True)
class MentionRecord:
    doc_id: str
    year: int
    sentence_index: int
    section: str
    start: int
    end: int
    surface: str
    alias: str
    canonical: str
    resolution: str

    def sort_key(self) -> tuple[str, int, int]:
        return (self.doc_id, self.sentence_index, self.start)


def resolve_abbreviation(
    document: Document,
    doc_mentions: list[RawMention],
    dictionary: AlgorithmDictionary,
    policy: DisambiguationPolicy | None = None,
) -> list[MentionRecord]:
    """Resolve one document's raw mentions; pure function of the document's
    own mention set."""
    policy = policy or DisambiguationPolicy()
    sections = {s.index: s.section for s in document.sentences}
    # Mentions that can vouch for a canonical: index -> vouched canonicals.
    vouchers: dict[str, set[int]] = {}
    for k, mention in enumerate(doc_mentions):
        for canonical in mention.full_name_of:
            vouchers.setdefault(canonical, set()).add(k)
    records = []
    for k, mention in enumerate(doc_mentions):
        if not mention.guarded and len(mention.candidates) == 1:
            canonical, resolution = next(iter(mention.candidates)), "direct"
        else:
            supported = sorted(
                c for c in mention.candidates if vouchers.get(c, set()) - {k}
            )
            if len(supported) == 1:
                canonical, resolution = supported[0], "cooccurrence"
            elif (
                not supported
                and len(mention.candidates) == 1
                and policy.unresolved_action == "assign_unique"
            ):
                canonical, resolution = next(iter(mention.candidates)), "unique_candidate"
            else:
                canonical, resolution = "", "unresolved"
        if resolution == "unresolved" and policy.unresolved_action == "drop":
            continue
        records.append(
            MentionRecord(
                doc_id=document.doc_id,
                year=document.year,
                sentence_index=mention.sentence_index,
                section=sections.get(mention.sentence_index, "other"),
                start=mention.start,
                end=mention.end,
                surface=mention.surface,
                alias=mention.alias,
                canonical=canonical,
                resolution=resolution,
            )
        )
    return records


def extract_corpus_mentions(
    corpus: list[Document],
    matcher: Matcher,
    dictionary: AlgorithmDictionary,
    policy: DisambiguationPolicy | None = None,
) -> list[MentionRecord]:
    """Match every sentence, resolve per document, and return records sorted
    by (doc_id, sentence_index, start)."""
    records = []
    for document in corpus:
        raw = [m for sentence in document.sentences for m in matcher.find_mentions(sentence)]
        records.extend(resolve_abbreviation(document, raw, dictionary, policy))
    records.sort(key=MentionRecord.sort_key)
    return records
