"""Bipartite keyword-to-audience-term networks through shared mentions.

An edge (k, t) counts the distinct events that mention at least one
publication carrying author keyword k and whose own text contains audience
term t. `keyword_mentions` counts, per keyword, the distinct events
mentioning any publication with that keyword, which makes the mention rate
weight / mentions a fraction of events.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Collection, Mapping

from .corpus import LinkedCorpus


@dataclass(frozen=True)
class LinkageNetwork:
    """Weighted bipartite graph: author keywords vs audience terms."""

    left: tuple[str, ...]
    right: tuple[str, ...]
    edges: Mapping[tuple[str, str], int]
    keyword_mentions: Mapping[str, int]

    def weight(self, keyword: str, term: str) -> int:
        return self.edges.get((keyword, term), 0)


def build_linkage(
    corpus: LinkedCorpus,
    keywords_by_doi: Mapping[str, Collection[str]],
    terms_by_event: Mapping[str, Collection[str]],
    platforms: Collection[str] | None = None,
    keyword_filter: Collection[str] | None = None,
    term_filter: Collection[str] | None = None,
) -> LinkageNetwork:
    """Aggregate keyword/term co-mentions over events.

    Events are restricted to `platforms` when given; the optional filters
    restrict both sides to selected label sets (e.g. top-100 topic sets).
    Counting is per distinct event: an event mentioning two publications
    that both carry a keyword still contributes one.
    """
    platform_set = frozenset(platforms) if platforms is not None else None
    kw_allowed = frozenset(getattr(keyword_filter, "labels", keyword_filter)) \
        if keyword_filter is not None else None
    term_allowed = frozenset(getattr(term_filter, "labels", term_filter)) \
        if term_filter is not None else None

    edges: dict[tuple[str, str], int] = {}
    mentions: dict[str, int] = {}
    for event in corpus.events:
        if platform_set is not None and event.platform not in platform_set:
            continue
        keywords: set[str] = set()
        for doi in event.dois:
            if doi in corpus.publications:
                keywords.update(keywords_by_doi.get(doi, ()))
        if kw_allowed is not None:
            keywords &= kw_allowed
        if not keywords:
            continue
        terms = set(terms_by_event.get(event.event_id, ()))
        if term_allowed is not None:
            terms &= term_allowed
        for keyword in keywords:
            mentions[keyword] = mentions.get(keyword, 0) + 1
            for term in terms:
                key = (keyword, term)
                edges[key] = edges.get(key, 0) + 1

    left = tuple(sorted(mentions))
    right = tuple(sorted({term for _, term in edges}))
    return LinkageNetwork(
        left=left,
        right=right,
        edges=dict(sorted(edges.items())),
        keyword_mentions=dict(sorted(mentions.items())),
    )


def topk_linked(network: LinkageNetwork, k_keywords: int = 5, k_terms: int = 5) -> LinkageNetwork:
    """Top keywords by mentions, then each keyword's top terms by weight.

    Ties break toward the lexicographically smaller label. The result is
    the subnetwork induced by the selected keywords and terms, so a term
    keeps every edge to any selected keyword, mirroring hub terms that
    link most of the keywords.
    """
    if k_keywords < 1 or k_terms < 1:
        raise ValueError("top-k cutoffs must be >= 1")
    keywords = sorted(
        network.keyword_mentions,
        key=lambda k: (-network.keyword_mentions[k], k),
    )[:k_keywords]
    selected_terms: set[str] = set()
    for keyword in keywords:
        linked = [(term, weight) for (k, term), weight in network.edges.items()
                  if k == keyword]
        linked.sort(key=lambda item: (-item[1], item[0]))
        selected_terms.update(term for term, _ in linked[:k_terms])
    keyword_set = set(keywords)
    edges = {
        (k, t): weight for (k, t), weight in network.edges.items()
        if k in keyword_set and t in selected_terms
    }
    return LinkageNetwork(
        left=tuple(sorted(keywords)),
        right=tuple(sorted(selected_terms)),
        edges=dict(sorted(edges.items())),
        keyword_mentions={k: network.keyword_mentions[k] for k in sorted(keywords)},
    )


def mention_rate(network: LinkageNetwork, keyword: str, term: str) -> float:
    """Percentage of a keyword's mentioning events whose text carries `term`.

    Raises ValueError when the keyword has no mentions.
    """
    total = network.keyword_mentions.get(keyword, 0)
    if total <= 0:
        raise ValueError(f"keyword {keyword!r} has no mentioning events")
    return network.weight(keyword, term) * 100.0 / total


def to_json_dict(network: LinkageNetwork) -> dict:
    return {
        "left": list(network.left),
        "right": list(network.right),
        "edges": [
            {"k": keyword, "t": term, "w": weight}
            for (keyword, term), weight in sorted(network.edges.items())
        ],
        "keyword_mentions": dict(network.keyword_mentions),
    }


def to_dot(network: LinkageNetwork) -> str:
    """Graphviz DOT text for quick rendering of the bipartite network."""
    lines = ["graph linkage {", "  rankdir=LR;"]
    for keyword in network.left:
        lines.append(f'  "K:{keyword}" [shape=box];')
    for term in network.right:
        lines.append(f'  "T:{term}" [shape=ellipse];')
    for (keyword, term), weight in sorted(network.edges.items()):
        lines.append(f'  "K:{keyword}" -- "T:{term}" [label={weight}];')
    lines.append("}")
    return "\n".join(lines) + "\n"
