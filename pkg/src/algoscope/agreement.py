"""Annotator-agreement statistics over (document, algorithm) presence labels.

An annotation set maps each sampled document to the set of algorithms the
annotator labeled as present.  Agreement is computed over an explicit universe
of (doc_id, canonical) pairs: both annotators implicitly label every pair in
the universe yes or no.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

from .dictionary import normalize_name
from .errors import InputError

AnnotationSet = dict[str, frozenset[str]]


def _pairs(annotations: AnnotationSet) -> frozenset[tuple[str, str]]:
    return frozenset(
        (doc_id, name) for doc_id, names in annotations.items() for name in names
    )


def load_annotations(path: str | Path, sample_ids: set[str]) -> AnnotationSet:
    """Read a doc_id<TAB>canonical file (one labeled pair per line, no header).

    Documents from the sample that the annotator labeled nothing for simply do
    not appear in the file; they come back with empty label sets.
    """
    path = Path(path)
    if not path.is_file():
        raise InputError(f"{path}: annotation file not found")
    labels: dict[str, set[str]] = {doc_id: set() for doc_id in sample_ids}
    for lineno, line in enumerate(path.read_text("utf-8").splitlines(), start=1):
        if not line.strip() or line.startswith("#"):
            continue
        columns = line.rstrip("\n").split("\t")
        if len(columns) != 2 or not columns[0].strip() or not columns[1].strip():
            raise InputError(f"{path}:{lineno}: expected doc_id<TAB>canonical")
        doc_id = columns[0].strip()
        if doc_id not in labels:
            raise InputError(f"{path}:{lineno}: doc_id {doc_id!r} is not in the corpus sample")
        labels[doc_id].add(normalize_name(columns[1]))
    return {doc_id: frozenset(names) for doc_id, names in labels.items()}


def merge_annotations(a: AnnotationSet, b: AnnotationSet) -> AnnotationSet:
    """Per-document union of two annotators' labels (gold-standard candidate)."""
    if set(a) != set(b):
        only_a = sorted(set(a) - set(b))
        only_b = sorted(set(b) - set(a))
        raise InputError(
            f"annotation sets cover different documents (only in A: {only_a}, only in B: {only_b})"
        )
    return {doc_id: a[doc_id] | b[doc_id] for doc_id in a}


def missing_rate(annotations: AnnotationSet, gold: AnnotationSet) -> float:
    """Fraction of gold (document, algorithm) pairs the annotator missed."""
    gold_pairs = _pairs(gold)
    if not gold_pairs:
        raise InputError("gold standard has no labeled pairs")
    return len(gold_pairs - _pairs(annotations)) / len(gold_pairs)


@dataclass(frozen=True)
class AgreementTable:
    both_yes: int
    only_a: int
    only_b: int
    both_no: int

    @property
    def n(self) -> int:
        return self.both_yes + self.only_a + self.only_b + self.both_no

    @property
    def p_o(self) -> float:
        return (self.both_yes + self.both_no) / self.n

    @property
    def p_e(self) -> float:
        a, b, c, d = self.both_yes, self.only_a, self.only_b, self.both_no
        return ((a + b) * (a + c) + (c + d) * (b + d)) / (self.n * self.n)

    @property
    def kappa(self) -> float:
        a, b, c, d = self.both_yes, self.only_a, self.only_b, self.both_no
        n = self.n
        pe_numerator = (a + b) * (a + c) + (c + d) * (b + d)
        if pe_numerator == n * n:
            # Chance agreement is exactly 1 only when both annotators are
            # constant and equal, which forces perfect observed agreement.
            if a + d == n:
                return 1.0
            raise InputError("degenerate agreement: chance agreement 1 with disagreements")
        return (self.p_o - self.p_e) / (1.0 - self.p_e)


def agreement_table(
    a: AnnotationSet, b: AnnotationSet, universe: set[tuple[str, str]]
) -> AgreementTable:
    if not universe:
        raise InputError("agreement universe is empty")
    pairs_a = _pairs(a)
    pairs_b = _pairs(b)
    for name, pairs in (("A", pairs_a), ("B", pairs_b)):
        stray = pairs - set(universe)
        if stray:
            raise InputError(
                f"annotator {name} labeled pairs outside the universe: {sorted(stray)[:5]}"
            )
    both_yes = only_a = only_b = both_no = 0
    for pair in universe:
        in_a = pair in pairs_a
        in_b = pair in pairs_b
        if in_a and in_b:
            both_yes += 1
        elif in_a:
            only_a += 1
        elif in_b:
            only_b += 1
        else:
            both_no += 1
    return AgreementTable(both_yes, only_a, only_b, both_no)


def cohens_kappa(a: AnnotationSet, b: AnnotationSet, universe: set[tuple[str, str]]) -> float:
    return agreement_table(a, b, universe).kappa


def gold_standard(merged: AnnotationSet, extracted: AnnotationSet) -> AnnotationSet:
    """Merged annotator labels backfilled with dictionary-matched algorithms."""
    return {
        doc_id: merged.get(doc_id, frozenset()) | extracted.get(doc_id, frozenset())
        for doc_id in set(merged) | set(extracted)
    }


def agreement_report(
    a: AnnotationSet,
    b: AnnotationSet,
    gold: AnnotationSet,
    universe: set[tuple[str, str]],
) -> dict[str, float]:
    """The full agreement summary serialized by the CLI.

    joint_missing_rate is the fraction of gold pairs missed by BOTH
    annotators (intersection of the two miss sets).
    """
    table = agreement_table(a, b, universe)
    gold_pairs = _pairs(gold)
    if not gold_pairs:
        raise InputError("gold standard has no labeled pairs")
    missed_both = (gold_pairs - _pairs(a)) & (gold_pairs - _pairs(b))
    return {
        "kappa": table.kappa,
        "p_o": table.p_o,
        "p_e": table.p_e,
        "missing_rate_a": missing_rate(a, gold),
        "missing_rate_b": missing_rate(b, gold),
        "joint_missing_rate": len(missed_both) / len(gold_pairs),
    }
