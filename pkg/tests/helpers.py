"""Shared builders for synthetic corpora used across test modules."""
from __future__ import annotations

from topicshift.corpus import AltmetricEvent, LinkedCorpus, Publication, link_corpus


def make_publication(doi: str, keywords: tuple[str, ...] = ()) -> Publication:
    return Publication(doi=doi, title=f"About {doi}", abstract="",
                       author_keywords=keywords, year=2016, doc_type="article")


def make_event(event_id: str, platform: str, dois, text: str = "",
               language: str = "en") -> AltmetricEvent:
    return AltmetricEvent(event_id=event_id, platform=platform,
                          dois=tuple(dois), text=text or f"event {event_id}",
                          language=language)


def large_mention_corpus() -> LinkedCorpus:
    """A corpus with realistic mention-coverage proportions.

    8,626 publications; 3,493 mentioned on twitter, 697 on the four
    event-text platforms combined (news 367, policy 85, blog 412,
    wikipedia 125) with 627 mentioned by both audiences, giving a grand
    total of 3,563 distinct mentioned publications.
    """
    def doi(i: int) -> str:
        return f"10.5555/p{i:04d}"

    publications = [make_publication(doi(i)) for i in range(8626)]
    group1 = list(range(2866, 3563))  # 697 DOIs, 627 of them also tweeted
    platform_targets = {
        "twitter": list(range(0, 3493)),
        "blog": group1[:412],
        "news": group1[250:617],
        "policy": group1[560:645],
        "wikipedia": group1[572:697],
    }
    events = []
    counter = 0
    for platform, indices in platform_targets.items():
        for i in indices:
            counter += 1
            events.append(make_event(f"{platform}-{counter}", platform, [doi(i)]))
    return link_corpus(publications, events)
