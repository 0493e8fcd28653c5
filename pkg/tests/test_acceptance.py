"""Acceptance suite: every release criterion at its stated tolerance.

Each test prints one PASS line on success (run with -s to see them inline);
a failure reads as the criterion number plus the violated assertion.
"""
from __future__ import annotations

import filecmp
import itertools
import math
import random
import string
import time
from pathlib import Path

import numpy as np
import pytest

import topicshift as ts
from topicshift.cli import main as cli_main
from topicshift.netmap import TermGraph, cluster_quality
from helpers import large_mention_corpus

REPO = Path(__file__).resolve().parent.parent
DEMO_PUBS = REPO / "data" / "demo" / "publications.jsonl"
DEMO_EVENTS = REPO / "data" / "demo" / "events.jsonl"


def _ok(number: int, message: str) -> None:
    print(f"ACCEPTANCE {number:2d} PASS: {message}")


def test_01_fixture_venn_partition():
    started = time.perf_counter()
    sets = ts.fixture_topic_sets()
    regions = ts.venn_partition(sets["K"], sets["T_all"], sets["H"])
    elapsed = time.perf_counter() - started
    assert regions == {"KTH": 11, "K": 60, "KH": 27, "KT": 2,
                       "H": 48, "T": 73, "TH": 14}
    assert sum(regions.values()) == 235
    assert elapsed < 1.0
    _ok(1, f"venn regions exact, union 235, {elapsed * 1000:.0f} ms")


def test_02_fixture_similarity_matrix():
    sets = ts.fixture_topic_sets()
    order = ["K", "H", "T_all", "T_blog", "T_news", "T_policy", "T_wikipedia"]
    matrix = ts.pairwise_matrix([sets[g] for g in order])
    expected_values = {
        ("K", "T_all"): 0.13, ("K", "H"): 0.38, ("T_all", "H"): 0.25,
        ("T_blog", "T_news"): 0.9587, ("T_blog", "T_wikipedia"): 0.7703,
        ("T_blog", "T_policy"): 0.5151, ("T_policy", "T_news"): 0.5128,
        ("T_policy", "T_wikipedia"): 0.4629, ("T_news", "T_wikipedia"): 0.7385,
    }
    expected_intersections = {
        ("K", "T_all"): 13, ("K", "H"): 38, ("T_all", "H"): 25,
        ("T_blog", "T_news"): 91, ("T_blog", "T_wikipedia"): 54,
        ("T_blog", "T_policy"): 26, ("T_policy", "T_news"): 27,
        ("T_policy", "T_wikipedia"): 18, ("T_news", "T_wikipedia"): 54,
    }
    for pair, value in expected_values.items():
        assert abs(matrix.value(*pair) - value) <= 1e-4, pair
    for pair, count in expected_intersections.items():
        assert matrix.intersection(*pair) == count, pair
    _ok(2, "all nine published cosines within 1e-4, intersections exact")


def test_03_fixture_rank_shifts():
    tables = ts.fixture_frequency_tables()
    sets = ts.fixture_topic_sets()
    types = ts.classify_topics(sets["K"], sets["T_all"], sets["H"])
    common = sorted(label for label, kind in types.items() if kind == "KTH")
    shifts = ts.ranking_shift(common, tables["K"], tables["H"], tables["T_all"])
    expected = {  # topic: (keyword rank, hashtag rank, term rank)
        "big data": (1, 1, 2),
        "machine learning": (3, 3, 63),
        "data mining": (4, 32, 90),
        "social media": (6, 14, 59),
        "privacy": (10, 17, 44),
        "twitter": (13, 11, 37),
        "health care": (31, 10, 79),
        "artificial intelligence": (32, 4, 75),
        "data": (45, 7, 3),
        "technology": (75, 42, 26),
        "climate change": (95, 49, 71),
    }
    assert len(shifts) == 11
    by_topic = {s.topic: s for s in shifts}
    for topic, (rank_k, rank_h, rank_t) in expected.items():
        shift = by_topic[topic]
        assert shift.rank_in == {"K": rank_k, "H": rank_h, "T": rank_t}, topic
    assert by_topic["climate change"].direction["H"] == "up"
    assert by_topic["data mining"].direction["H"] == "down"
    _ok(3, "all 11 common-topic rank rows reproduced, arrows included")


def test_04_share_arithmetic():
    keyword_set = ts.TopicSet("K", {"big data": 2960}, 100)
    share_pct, share_docs = ts.share_statistics(keyword_set, 36362, 6689)["big data"]
    assert abs(share_pct - 8.14) <= 0.005
    assert abs(share_docs - 44.25) <= 0.005
    hashtag_set = ts.TopicSet("H", {"big data": 4088}, 100)
    _, tweet_share = ts.share_statistics(hashtag_set, 41414, 42341)["big data"]
    assert abs(tweet_share - 9.65) <= 0.005
    _ok(4, "occurrence and document shares within 0.005 pp")


def test_05_coverage_arithmetic():
    report = ts.coverage_report(large_mention_corpus())
    by_platform = {row.platform: row for row in report.platforms}
    assert abs(by_platform["twitter"].share_pct - 40.5) <= 0.05
    assert abs(report.group1_share_pct - 8.1) <= 0.05
    assert abs(report.grand_share_pct - 41.3) <= 0.05
    _ok(5, "platform, group, and grand-total shares within 0.05 pp")


def test_06_cosine_property_suite():
    rng = random.Random(606)
    universe = [f"t{i}" for i in range(80)]
    for _ in range(1000):
        a = set(rng.sample(universe, rng.randint(1, 60)))
        b = set(rng.sample(universe, rng.randint(1, 60)))
        value = ts.cosine_similarity(a, b)
        assert abs(value - len(a & b) / math.sqrt(len(a) * len(b))) <= 1e-12
        assert value == ts.cosine_similarity(b, a)
        assert ts.cosine_similarity(a, a) == 1.0
    assert ts.cosine_similarity({"x"}, {"y"}) == 0.0
    _ok(6, "1,000 random pairs match the closed form to 1e-12")


def test_07_extraction_property_suite():
    rng = random.Random(707)
    pos_pool = (ts.termext.NOUN, ts.termext.ADJECTIVE, ts.termext.OTHER)
    for _ in range(500):
        sentence = [ts.TaggedToken(f"w{i}", f"w{i}", rng.choice(pos_pool))
                    for i in range(rng.randint(1, 12))]
        spans = ts.extract_candidate_phrases([sentence], noun_stoplist=())
        occupied: list[tuple[int, int]] = []
        cursor = 0
        lemmas = [t.lemma for t in sentence]
        for span in spans:
            assert all(t.pos in (ts.termext.NOUN, ts.termext.ADJECTIVE) for t in span)
            assert span[-1].pos == ts.termext.NOUN
            needle = [t.lemma for t in span]
            for start in range(cursor, len(lemmas) - len(needle) + 1):
                if lemmas[start:start + len(needle)] == needle:
                    occupied.append((start, start + len(needle)))
                    cursor = start
                    break
        for (a0, a1), (b0, b1) in itertools.permutations(occupied, 2):
            assert not (b0 <= a0 and a1 <= b1 and (a0, a1) != (b0, b1))

    alphabet = string.ascii_letters + string.digits + "#_ .,!?-@é  "
    for _ in range(1000):
        tweet = "".join(rng.choice(alphabet) for _ in range(rng.randint(0, 60)))
        got = [tag.canonical for tag in ts.extract_hashtags(tweet)]
        want: list[str] = []
        for token in tweet.split():
            if token.startswith("#"):
                run = "".join(itertools.takewhile(
                    lambda ch: ch.isascii() and (ch.isalnum() or ch == "_"),
                    token[1:]))
                if run and run.casefold() not in want:
                    want.append(run.casefold())
        assert got == want, tweet
    _ok(7, "phrase grammar, span maximality, and hashtag oracle all hold")


def _all_partitions(items):
    if not items:
        yield []
        return
    head, rest = items[0], items[1:]
    for part in _all_partitions(rest):
        for i in range(len(part)):
            yield part[:i] + [part[i] + [head]] + part[i + 1:]
        yield part + [[head]]


def test_08_clustering_oracle():
    started = time.perf_counter()
    hits = 0
    for case in range(100):
        rng = random.Random(8000 + case)
        n = rng.randint(2, 8)
        labels = [f"v{i}" for i in range(n)]
        edges = {}
        for i, a in enumerate(labels):
            for b in labels[i + 1:]:
                if rng.random() < 0.55:
                    edges[(a, b)] = rng.randint(1, 9)
        graph = ts.association_strength(TermGraph(nodes=[(l, 1) for l in labels],
                                                  edges=edges))
        gamma = rng.choice([0.3, 0.5, 0.8, 1.0])
        ts.cluster(graph, ts.ClusterParams(resolution=gamma, random_seed=case))
        best = -math.inf
        for part in _all_partitions(labels):
            assignment = {}
            for cluster_id, block in enumerate(part):
                for label in block:
                    assignment[label] = cluster_id
            best = max(best, cluster_quality(graph, assignment, gamma))
        if abs(cluster_quality(graph, graph.clusters, gamma) - best) <= 1e-9:
            hits += 1
    elapsed = time.perf_counter() - started
    assert hits >= 95, hits
    assert elapsed < 30.0

    docs = [{"x", "y", "z"}] * 3 + [{"u", "v", "w"}] * 3
    triangles = ts.association_strength(ts.cooccurrence_graph(docs))
    ts.cluster(triangles, ts.ClusterParams(resolution=0.2, random_seed=1))
    assert len(set(triangles.clusters.values())) == 2
    gamma = max(triangles.normalized.values()) * 1.01
    ts.cluster(triangles, ts.ClusterParams(resolution=gamma, random_seed=1))
    assert len(set(triangles.clusters.values())) == 6
    _ok(8, f"{hits}/100 runs hit the exhaustive optimum in {elapsed:.1f} s")


def test_09_layout_checks():
    for seed in range(20):
        rng = random.Random(900 + seed)
        n = rng.randint(3, 10)
        labels = [f"v{i}" for i in range(n)]
        edges = {}
        for i, a in enumerate(labels):
            for b in labels[i + 1:]:
                if rng.random() < 0.6:
                    edges[(a, b)] = rng.randint(1, 6)
        if not edges:
            continue
        graph = ts.association_strength(TermGraph(nodes=[(l, 1) for l in labels],
                                                  edges=edges))
        trace: list[float] = []
        ts.layout(graph, iterations=500, seed=seed, objective_trace=trace)
        assert all(trace[i + 1] <= trace[i] + 1e-15 for i in range(len(trace) - 1))
        points = np.array([graph.positions[l] for l in labels])
        deltas = points[:, None, :] - points[None, :, :]
        distances = np.sqrt((deltas ** 2).sum(axis=-1))
        mean = distances[np.triu_indices(n, k=1)].mean()
        assert abs(mean - 1.0) <= 1e-6

    pair = ts.association_strength(ts.cooccurrence_graph([{"a", "b"}]))
    ts.layout(pair)
    assert math.dist(pair.positions["a"], pair.positions["b"]) == pytest.approx(
        1.0, abs=1e-6)

    triangle = ts.association_strength(TermGraph(
        nodes=[(l, 1) for l in "abc"],
        edges={("a", "b"): 1, ("a", "c"): 1, ("b", "c"): 1}))
    ts.layout(triangle, iterations=5000, seed=3, tol=0.0)
    p = triangle.positions
    distances = [math.dist(p["a"], p["b"]), math.dist(p["a"], p["c"]),
                 math.dist(p["b"], p["c"])]
    assert max(distances) - min(distances) <= 1e-6
    _ok(9, "monotone traces, unit mean distance, symmetric cases exact")


def test_10_overlay_property():
    rng = random.Random(1010)
    sources = [f"s{i}" for i in range(4)]
    for _ in range(50):
        tables = {s: {f"t{i}": rng.randint(0, 9) for i in range(20)}
                  for s in sources}
        labels = [f"t{i}" for i in range(20)
                  if any(tables[s][f"t{i}"] for s in sources)]
        for score in ts.overlay_scores(tables, labels):
            mean = sum(score.normalized.values()) / len(sources)
            assert abs(mean - 1.0) <= 1e-12
    _ok(10, "normalized overlay scores average to 1 within 1e-12")


def test_11_linkage_oracle():
    from topicshift.corpus import link_corpus
    from helpers import make_event, make_publication
    for case in range(5):
        rng = random.Random(1100 + case)
        dois = [f"10.1/p{i}" for i in range(10)]
        pubs = [make_publication(d, keywords=(f"kw{i % 4}", f"kw{(i + 1) % 4}"))
                for i, d in enumerate(dois)]
        events = [make_event(f"e{i}", rng.choice(("news", "blog", "policy")),
                             rng.sample(dois, rng.randint(1, 3)))
                  for i in range(50)]
        terms_by_event = {f"e{i}": {f"t{rng.randint(0, 6)}"
                                    for _ in range(rng.randint(0, 3))}
                          for i in range(50)}
        corpus = link_corpus(pubs, events)
        keywords_by_doi = {p.doi: set(p.author_keywords) for p in pubs}
        network = ts.build_linkage(corpus, keywords_by_doi, terms_by_event)

        weights: dict[tuple[str, str], int] = {}
        mentions: dict[str, int] = {}
        for event in events:
            event_keywords = set()
            for doi in event.dois:
                if doi in corpus.publications:
                    event_keywords |= keywords_by_doi[doi]
            for keyword in event_keywords:
                mentions[keyword] = mentions.get(keyword, 0) + 1
                for term in terms_by_event[event.event_id]:
                    weights[(keyword, term)] = weights.get((keyword, term), 0) + 1
        assert dict(network.edges) == weights
        assert dict(network.keyword_mentions) == mentions
        for (keyword, term), weight in weights.items():
            assert ts.mention_rate(network, keyword, term) == weight * 100.0 / mentions[keyword]
    _ok(11, "distinct-event weights equal the triple loop; rates exact")


def test_12_end_to_end_determinism(tmp_path):
    started = time.perf_counter()
    out_a, out_b = tmp_path / "run_a", tmp_path / "run_b"
    for out in (out_a, out_b):
        code = cli_main(["all", "--publications", str(DEMO_PUBS),
                         "--events", str(DEMO_EVENTS),
                         "--output-dir", str(out), "--seed", "42"])
        assert code == 0
    elapsed = time.perf_counter() - started
    names = sorted(p.name for p in out_a.iterdir())
    assert names == sorted(p.name for p in out_b.iterdir())
    match, mismatch, errors = filecmp.cmpfiles(out_a, out_b, names, shallow=False)
    assert mismatch == [] and errors == []
    assert elapsed < 60.0
    _ok(12, f"two full runs byte-identical across {len(names)} artifacts "
            f"in {elapsed:.1f} s")
