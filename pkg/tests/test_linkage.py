"""Bipartite keyword-to-term networks and mention rates."""
from __future__ import annotations

import random

import pytest

from topicshift.linkage import (
    build_linkage,
    mention_rate,
    to_dot,
    to_json_dict,
    topk_linked,
)
from topicshift.corpus import link_corpus
from helpers import make_event, make_publication


def small_corpus(n_pubs, events):
    pubs = [make_publication(f"10.1/p{i}", keywords=(f"kw{i % 3}",))
            for i in range(n_pubs)]
    return link_corpus(pubs, events), {p.doi: set(p.author_keywords) for p in pubs}


def brute_force(corpus, keywords_by_doi, terms_by_event, platforms=None):
    """Triple loop over events, publications, and terms."""
    weights: dict[tuple[str, str], int] = {}
    mentions: dict[str, int] = {}
    for event in corpus.events:
        if platforms is not None and event.platform not in platforms:
            continue
        event_keywords = set()
        for doi in event.dois:
            if doi in corpus.publications:
                for keyword in keywords_by_doi.get(doi, ()):
                    event_keywords.add(keyword)
        for keyword in event_keywords:
            mentions[keyword] = mentions.get(keyword, 0) + 1
            for term in set(terms_by_event.get(event.event_id, ())):
                weights[(keyword, term)] = weights.get((keyword, term), 0) + 1
    return weights, mentions


class TestBuildLinkage:
    def test_single_event_two_terms(self):
        pubs = [make_publication("10.1/a", keywords=("k",))]
        event = make_event("e1", "news", ["10.1/a"])
        corpus = link_corpus(pubs, [event])
        network = build_linkage(corpus, {"10.1/a": {"k"}}, {"e1": {"t1", "t2"}})
        assert network.weight("k", "t1") == 1
        assert network.weight("k", "t2") == 1
        assert network.keyword_mentions["k"] == 1

    def test_event_mentioning_two_publications_counts_once(self):
        pubs = [make_publication("10.1/a", keywords=("k",)),
                make_publication("10.1/b", keywords=("k",))]
        event = make_event("e1", "blog", ["10.1/a", "10.1/b"])
        corpus = link_corpus(pubs, [event])
        network = build_linkage(corpus, {"10.1/a": {"k"}, "10.1/b": {"k"}},
                                {"e1": {"t"}})
        assert network.keyword_mentions["k"] == 1
        assert network.weight("k", "t") == 1

    def test_matches_triple_loop_on_fixture(self):
        rng = random.Random(70)
        events = [make_event(f"e{i}", rng.choice(("news", "blog")),
                             [f"10.1/p{rng.randint(0, 5)}"
                              for _ in range(rng.randint(1, 2))])
                  for i in range(10)]
        corpus, keywords_by_doi = small_corpus(6, events)
        terms_by_event = {f"e{i}": {f"t{rng.randint(0, 4)}"
                                    for _ in range(rng.randint(0, 3))}
                          for i in range(10)}
        network = build_linkage(corpus, keywords_by_doi, terms_by_event)
        want_weights, want_mentions = brute_force(corpus, keywords_by_doi,
                                                  terms_by_event)
        assert dict(network.edges) == want_weights
        assert dict(network.keyword_mentions) == want_mentions

    def test_matches_triple_loop_on_fifty_event_fixtures(self):
        for case in range(5):
            rng = random.Random(100 + case)
            events = [make_event(f"e{i}", rng.choice(("news", "blog", "policy")),
                                 [f"10.1/p{rng.randint(0, 11)}"
                                  for _ in range(rng.randint(1, 3))])
                      for i in range(50)]
            corpus, keywords_by_doi = small_corpus(12, events)
            terms_by_event = {f"e{i}": {f"t{rng.randint(0, 7)}"
                                        for _ in range(rng.randint(0, 4))}
                              for i in range(50)}
            platforms = ("news", "blog")
            network = build_linkage(corpus, keywords_by_doi, terms_by_event,
                                    platforms=platforms)
            want_weights, want_mentions = brute_force(corpus, keywords_by_doi,
                                                      terms_by_event, platforms)
            assert dict(network.edges) == want_weights
            assert dict(network.keyword_mentions) == want_mentions
            for (keyword, _), weight in network.edges.items():
                assert weight <= network.keyword_mentions[keyword]

    def test_invariant_under_event_order(self):
        rng = random.Random(71)
        events = [make_event(f"e{i}", "news", [f"10.1/p{rng.randint(0, 5)}"])
                  for i in range(20)]
        corpus, keywords_by_doi = small_corpus(6, events)
        terms = {f"e{i}": {f"t{rng.randint(0, 3)}"} for i in range(20)}
        base = build_linkage(corpus, keywords_by_doi, terms)
        shuffled_corpus = link_corpus(list(corpus.publications.values()),
                                      list(reversed(corpus.events)))
        again = build_linkage(shuffled_corpus, keywords_by_doi, terms)
        assert dict(base.edges) == dict(again.edges)
        assert dict(base.keyword_mentions) == dict(again.keyword_mentions)


class TestTopK:
    def make_network(self):
        pubs = [make_publication(f"10.1/p{i}", keywords=(f"kw{i}",)) for i in range(8)]
        events = []
        terms = {}
        counter = 0
        # kw0 gets the most mentions, kw1 next, and so on
        for i in range(8):
            for _ in range(8 - i):
                counter += 1
                event_id = f"e{counter}"
                events.append(make_event(event_id, "news", [f"10.1/p{i}"]))
                terms[event_id] = {f"t{counter % 3}"}
        corpus = link_corpus(pubs, events)
        return build_linkage(corpus, {p.doi: set(p.author_keywords) for p in pubs},
                             terms)

    def test_selects_expected_keywords(self):
        top = topk_linked(self.make_network(), k_keywords=5, k_terms=5)
        assert top.left == ("kw0", "kw1", "kw2", "kw3", "kw4")

    def test_fewer_than_k_returns_all(self):
        top = topk_linked(self.make_network(), k_keywords=50, k_terms=50)
        assert len(top.left) == 8

    def test_term_tie_prefers_lexicographic(self):
        network = self.make_network()
        # kw7 has one event; craft a tie between two candidate terms elsewhere
        pubs = [make_publication("10.1/x", keywords=("kw",))]
        events = [make_event("e1", "news", ["10.1/x"]),
                  make_event("e2", "news", ["10.1/x"])]
        corpus = link_corpus(pubs, events)
        tied = build_linkage(corpus, {"10.1/x": {"kw"}},
                             {"e1": {"zeta"}, "e2": {"alpha"}})
        top = topk_linked(tied, k_keywords=1, k_terms=1)
        assert top.right == ("alpha",)

    def test_recomputation_is_identical(self):
        network = self.make_network()
        first = topk_linked(network, 5, 5)
        second = topk_linked(network, 5, 5)
        assert first == second

    def test_bad_cutoff(self):
        with pytest.raises(ValueError):
            topk_linked(self.make_network(), 0, 5)


class TestMentionRate:
    def test_arithmetic(self):
        pubs = [make_publication("10.1/a", keywords=("social media",))]
        events = []
        terms = {}
        for i in range(100):
            event_id = f"e{i}"
            events.append(make_event(event_id, "news", ["10.1/a"]))
            terms[event_id] = {"facebook"} if i < 14 else {"other"}
        corpus = link_corpus(pubs, events)
        network = build_linkage(corpus, {"10.1/a": {"social media"}}, terms)
        assert mention_rate(network, "social media", "facebook") == 14.0

    def test_never_cooccurring_term_is_zero(self):
        pubs = [make_publication("10.1/a", keywords=("k",))]
        corpus = link_corpus(pubs, [make_event("e1", "news", ["10.1/a"])])
        network = build_linkage(corpus, {"10.1/a": {"k"}}, {"e1": {"t"}})
        assert mention_rate(network, "k", "unseen") == 0.0

    def test_zero_mentions_is_an_error(self):
        pubs = [make_publication("10.1/a", keywords=("k",))]
        corpus = link_corpus(pubs, [make_event("e1", "news", ["10.1/a"])])
        network = build_linkage(corpus, {"10.1/a": {"k"}}, {"e1": {"t"}})
        with pytest.raises(ValueError):
            mention_rate(network, "ghost", "t")


class TestExports:
    def test_json_and_dot_shapes(self):
        pubs = [make_publication("10.1/a", keywords=("k",))]
        corpus = link_corpus(pubs, [make_event("e1", "news", ["10.1/a"])])
        network = build_linkage(corpus, {"10.1/a": {"k"}}, {"e1": {"t"}})
        payload = to_json_dict(network)
        assert payload["edges"] == [{"k": "k", "t": "t", "w": 1}]
        dot = to_dot(network)
        assert dot.startswith("graph linkage {")
        assert '"K:k" -- "T:t" [label=1];' in dot
