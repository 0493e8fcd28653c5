"""Batch analytics for topic shift between publications and online audiences.

The package splits into small, composable pieces: `corpus` ingests and links
publication and event records by DOI, `termext` pulls candidate topics out
of text (noun-phrase terms and tweet hashtags), `topicsets` normalizes
labels and builds top-N topic sets, `compare` measures similarity and
provenance between sets, `netmap` clusters and lays out co-occurrence term
maps, and `linkage` ties author keywords to the audience terms used in the
events that mention them. `cli` wires everything into a batch pipeline.
"""
from .corpus import (
    AltmetricEvent,
    CoverageReport,
    LinkedCorpus,
    LoadReport,
    Publication,
    canonical_doi,
    coverage_report,
    link_corpus,
    load_events,
    load_publications,
)
from .termext import (
    CandidateTerm,
    Hashtag,
    TaggedToken,
    Tagger,
    build_candidates,
    count_hashtags,
    count_occurrences,
    extract_candidate_phrases,
    extract_hashtags,
    first_sentence,
    phrase_label,
    relevance_score,
    tokenize,
)
from .topicsets import (
    PluralRules,
    TopicLabel,
    TopicSet,
    build_topic_set,
    fixture_frequency_tables,
    fixture_topic_sets,
    load_topic_fixture,
    merge_labels,
    normalize_label,
    share_statistics,
)
from .compare import (
    RankShift,
    SimilarityMatrix,
    classify_topics,
    cosine_similarity,
    pairwise_matrix,
    ranking_shift,
    venn_partition,
)
from .netmap import (
    ClusterParams,
    OverlayScore,
    TermGraph,
    association_strength,
    cluster,
    cluster_quality,
    cooccurrence_graph,
    layout,
    overlay_scores,
)
from .linkage import (
    LinkageNetwork,
    build_linkage,
    mention_rate,
    topk_linked,
)

__version__ = "0.1.0"
