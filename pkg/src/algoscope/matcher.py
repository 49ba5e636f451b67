"""Multi-pattern alias matching over sentences.

Matching rules, applied in this order:

1. Normalization: case-fold (unless disabled), collapse whitespace runs to a
   single space, and treat "-" as a space when hyphen/space equivalence is on.
   Aliases and sentence text are normalized identically; reported offsets
   always refer to the original sentence text.
2. Boundaries: a match may not be immediately preceded or followed by an
   alphanumeric character in the original text.
3. Overlap: leftmost-longest scan.  At each position the longest boundary- and
   guard-valid alias wins and scanning resumes after it, so shorter aliases
   contained in a chosen match are suppressed.
4. Short-alias guard: a match whose normalized alias is at or below the length
   threshold is emitted only when its surface form is fully uppercase (when
   the uppercase requirement is on).  Candidate resolution happens later, in
   the extract stage.

`find_mentions` runs on a prefix trie; `oracle_scan` is a brute-force
re-implementation of the same contract kept for equivalence testing.
"""

from __future__ import annotations

from dataclasses import dataclass

from .corpus import Sentence
from .dictionary import AlgorithmDictionary
from .errors import InputError


@dataclass(frozen=True)
class MatchConfig:
    case_fold: bool = True
    hyphen_space_equiv: bool = True
    short_alias_threshold: int = 3
    short_alias_requires_uppercase: bool = True

    def __post_init__(self) -> None:
        if self.short_alias_threshold < 0:
            raise InputError("short_alias_threshold must be >= 0")


@dataclass(frozen=True)
class RawMention:
    sentence_index: int
    start: int
    end: int
    surface: str
    alias: str
    candidates: frozenset[str]
    # guarded: the alias is short enough to need resolution evidence.
    guarded: bool
    # full_name_of: candidates for which this alias is a non-abbreviated name,
    # i.e. the candidates this mention can vouch for during disambiguation.
    full_name_of: frozenset[str]


def _fold_char(ch: str, cfg: MatchConfig) -> str:
    if cfg.hyphen_space_equiv and ch == "-":
        return " "
    if ch.isspace():
        return " "
    return ch.casefold() if cfg.case_fold else ch


def normalize_with_map(text: str, cfg: MatchConfig) -> tuple[str, list[tuple[int, int]]]:
    """Normalize text, returning for every normalized character the original
    [start, end) span it covers.  A collapsed whitespace run is one space
    spanning the whole run."""
    chars: list[str] = []
    spans: list[tuple[int, int]] = []
    for i, ch in enumerate(text):
        for folded in _fold_char(ch, cfg):
            if folded == " ":
                if not chars:
                    continue
                if chars[-1] == " ":
                    spans[-1] = (spans[-1][0], i + 1)
                    continue
            chars.append(folded)
            spans.append((i, i + 1))
    if chars and chars[-1] == " ":
        chars.pop()
        spans.pop()
    return "".join(chars), spans


def normalize_pattern(alias: str, cfg: MatchConfig) -> str:
    """The pattern form of an alias: same normalization as sentence text."""
    return " ".join("".join(_fold_char(ch, cfg) for ch in alias).split())


class _TrieNode:
    __slots__ = ("children", "pattern")

    def __init__(self) -> None:
        self.children: dict[str, _TrieNode] = {}
        self.pattern: str | None = None


class Matcher:
    """Immutable compiled pattern set; safe to share across threads."""

    def __init__(self, dictionary: AlgorithmDictionary, config: MatchConfig) -> None:
        if not dictionary.entries:
            raise InputError("cannot build a matcher from an empty dictionary")
        self.config = config
        patterns: dict[str, set[str]] = {}
        full_names: dict[str, set[str]] = {}
        for entry in dictionary.entries:
            for alias in entry.aliases:
                pattern = normalize_pattern(alias, config)
                if not pattern:
                    raise InputError(f"alias {alias!r} normalizes to an empty pattern")
                patterns.setdefault(pattern, set()).add(entry.canonical)
                full_names.setdefault(pattern, set())
                if alias not in entry.abbreviations:
                    full_names[pattern].add(entry.canonical)
        self.patterns: dict[str, frozenset[str]] = {
            p: frozenset(c) for p, c in sorted(patterns.items())
        }
        self.full_names: dict[str, frozenset[str]] = {
            p: frozenset(c) for p, c in sorted(full_names.items())
        }
        self._root = _TrieNode()
        for pattern in self.patterns:
            node = self._root
            for ch in pattern:
                node = node.children.setdefault(ch, _TrieNode())
            node.pattern = pattern

    @property
    def pattern_count(self) -> int:
        return len(self.patterns)

    def find_mentions(self, sentence: Sentence) -> list[RawMention]:
        text = sentence.text
        norm, spans = normalize_with_map(text, self.config)
        cfg = self.config
        n = len(norm)
        mentions: list[RawMention] = []
        pos = 0
        while pos < n:
            if norm[pos] == " ":
                pos += 1
                continue
            orig_start = spans[pos][0]
            if orig_start > 0 and text[orig_start - 1].isalnum():
                pos += 1
                continue
            hits: list[tuple[int, str]] = []
            node = self._root
            q = pos
            while q < n:
                node = node.children.get(norm[q])
                if node is None:
                    break
                q += 1
                if node.pattern is not None:
                    hits.append((q, node.pattern))
            chosen = None
            for norm_end, pattern in reversed(hits):
                orig_end = spans[norm_end - 1][1]
                if orig_end < len(text) and text[orig_end].isalnum():
                    continue
                surface = text[orig_start:orig_end]
                guarded = len(pattern) <= cfg.short_alias_threshold
                if guarded and cfg.short_alias_requires_uppercase and not surface.isupper():
                    continue
                chosen = (norm_end, pattern, orig_end, surface, guarded)
                break
            if chosen is None:
                pos += 1
                continue
            norm_end, pattern, orig_end, surface, guarded = chosen
            mentions.append(
                RawMention(
                    sentence_index=sentence.index,
                    start=orig_start,
                    end=orig_end,
                    surface=surface,
                    alias=pattern,
                    candidates=self.patterns[pattern],
                    guarded=guarded,
                    full_name_of=self.full_names[pattern],
                )
            )
            pos = norm_end
        return mentions


def build_matcher(dictionary: AlgorithmDictionary, config: MatchConfig | None = None) -> Matcher:
    return Matcher(dictionary, config or MatchConfig())


def find_mentions(matcher: Matcher, sentence: Sentence) -> list[RawMention]:
    return matcher.find_mentions(sentence)


def oracle_scan(
    dictionary: AlgorithmDictionary, cfg: MatchConfig, sentence: Sentence
) -> list[RawMention]:
    """Brute-force reference scan; output contract identical to find_mentions.

    Every alias is tested at every position for boundary-delimited equality
    under the same normalization, then the same leftmost-longest and
    short-alias rules are applied.  No trie, no shared scanning code.
    """
    text = sentence.text
    norm, spans = normalize_with_map(text, cfg)
    n = len(norm)
    patterns: dict[str, set[str]] = {}
    full_names: dict[str, set[str]] = {}
    for entry in dictionary.entries:
        for alias in entry.aliases:
            pattern = normalize_pattern(alias, cfg)
            patterns.setdefault(pattern, set()).add(entry.canonical)
            full_names.setdefault(pattern, set())
            if alias not in entry.abbreviations:
                full_names[pattern].add(entry.canonical)
    valid_by_start: dict[int, list[tuple[int, str]]] = {}
    for pattern in patterns:
        if not pattern:
            continue
        idx = norm.find(pattern)
        while idx != -1:
            end = idx + len(pattern)
            orig_start = spans[idx][0]
            orig_end = spans[end - 1][1]
            ok = not (orig_start > 0 and text[orig_start - 1].isalnum())
            if ok and orig_end < len(text) and text[orig_end].isalnum():
                ok = False
            if ok and len(pattern) <= cfg.short_alias_threshold:
                if cfg.short_alias_requires_uppercase and not text[orig_start:orig_end].isupper():
                    ok = False
            if ok:
                valid_by_start.setdefault(idx, []).append((end, pattern))
            idx = norm.find(pattern, idx + 1)
    mentions: list[RawMention] = []
    pos = 0
    while pos < n:
        options = valid_by_start.get(pos)
        if not options:
            pos += 1
            continue
        end, pattern = max(options)
        orig_start = spans[pos][0]
        orig_end = spans[end - 1][1]
        mentions.append(
            RawMention(
                sentence_index=sentence.index,
                start=orig_start,
                end=orig_end,
                surface=text[orig_start:orig_end],
                alias=pattern,
                candidates=frozenset(patterns[pattern]),
                guarded=len(pattern) <= cfg.short_alias_threshold,
                full_name_of=frozenset(full_names[pattern]),
            )
        )
        pos = end
    return mentions
