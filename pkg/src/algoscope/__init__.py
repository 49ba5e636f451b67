"""Dictionary-based extraction of named-algorithm mentions from scholarly
corpora, plus per-algorithm influence analytics (annual influence, mean
influence score, yearly rankings, trend classes, category and era summaries)
and annotator-agreement statistics."""

from .agreement import agreement_report, cohens_kappa, merge_annotations, missing_rate
from .corpus import Document, Sentence, load_corpus, segment_sentences, yearly_counts
from .dictionary import (
    AlgorithmDictionary,
    AlgorithmEntry,
    build_dictionary,
    load_dictionary,
    make_entry,
    validate_dictionary,
)
from .extract import DisambiguationPolicy, MentionRecord, extract_corpus_mentions, resolve_abbreviation
from .influence import (
    InfluenceSeries,
    MentionMatrix,
    all_influence_series,
    category_summary,
    classify_trend,
    era_group_counts,
    influence_score,
    mention_counts,
    rising_span,
    yearly_rankings,
)
from .matcher import MatchConfig, Matcher, RawMention, build_matcher, find_mentions, oracle_scan

__version__ = "0.1.0"
