"""Build the small synthetic demo corpus shipped under data/demo/.

Fifty publications about data-intensive research plus a few hundred online
events that mention them: tweets with hashtags, blog/news/policy titles,
and wikipedia summaries. The corpus is deterministic (fixed seed), small
enough that the whole pipeline runs in seconds, and rigged so the topic
sets of the three groups genuinely overlap -- keywords, hashtags, and
extracted terms share some topics and disagree on others, which keeps the
downstream comparisons interesting.

Run from the repository root:

    python demos/00_make_demo_corpus.py
"""
from __future__ import annotations

import json
import random
from pathlib import Path

OUT_DIR = Path(__file__).resolve().parent.parent / "data" / "demo"

KEYWORD_POOL = [
    # (keyword, sampling weight)
    ("Big data", 30),
    ("Machine learning", 14),
    ("Data mining", 12),
    ("Cloud computing", 10),
    ("Mapreduce", 8),
    ("Social media", 8),
    ("Privacy", 7),
    ("Health care", 6),
    ("Deep learning", 6),
    ("Artificial intelligence", 6),
    ("Data science", 5),
    ("Internet of things", 5),
    ("Hadoop", 4),
    ("Bioinformatics", 4),
    ("Smart city", 4),
    ("Climate change", 3),
    ("Open data", 3),
    ("Precision medicine", 3),
    ("Sentiment analysis", 2),
    ("Supply chain management", 2),
    ("Neural-networks", 2),
    ("Text mining", 2),
]

TITLE_TEMPLATES = [
    "A survey of {kw} methods for large data sets",
    "{kw} approaches in modern analytics platforms",
    "Scalable {kw} for scientific workloads",
    "Evaluating {kw} in production systems",
    "{kw} and its applications in industry",
]

BLOG_NEWS_TITLES = [
    "How big data analytics is changing health care",
    "New study shows machine learning predicts heart disease",
    "Researchers use deep learning for cancer diagnosis",
    "Privacy concerns grow as social media data expands",
    "Smart city projects bring big data to urban planning",
    "What the facebook experiment tells us about human emotion",
    "Open data and the future of scientific research",
    "Artificial intelligence in medicine shows early promise",
    "Climate change research gets a big data boost",
    "Data mining reveals new patterns in public health",
    "Machine learning helps doctors spot mental health risks",
    "Big data study links social media use and depression",
    "The researchers behind the largest genome study yet",
    "Health care costs drop when hospitals embrace analytics",
    "Deep learning model reads brain scans in seconds",
    "Social media data offers clues about climate change views",
    "New machine learning tools for cancer research",
    "Why privacy matters in the age of big data",
    "Big data and machine learning reshape drug discovery",
    "Scientists mine social media for public health signals",
    "Artificial intelligence tackles hospital readmissions",
    "Data mining study tracks emotion in millions of tweets",
    "Cloud computing brings big data to small labs",
    "Mental health apps lean on machine learning",
    "Big data helps cities plan for climate change",
]

POLICY_TITLES = [
    "Data protection and privacy in big data research",
    "Big data for official statistics and public policy",
    "Health care data sharing under new privacy regulation",
    "Open data policy for publicly funded research",
    "Climate change indicators from big data sources",
    "Artificial intelligence and data mining in government services",
]

WIKI_SUMMARIES = [
    "Big data is a field that treats ways to analyze very large data sets. "
    "The term has been in use since the 1990s.",
    "Machine learning is the study of computer algorithms that improve through "
    "experience. It is seen as a part of artificial intelligence.",
    "Data mining is a process of extracting patterns from large data sets. "
    "It involves methods from statistics and database systems.",
    "Social media are interactive technologies for sharing content online. "
    "Users create profiles and communities.",
    "Health care is the maintenance of health via prevention and treatment. "
    "Delivery depends on health professionals.",
    "Privacy is the ability of a person to seclude information about themselves. "
    "The boundaries of privacy differ among cultures.",
]

HASHTAG_POOL = [
    ("#BigData", 40),
    ("#MachineLearning", 16),
    ("#DataScience", 14),
    ("#AI", 12),
    ("#Analytics", 8),
    ("#HealthCare", 8),
    ("#Privacy", 7),
    ("#DeepLearning", 6),
    ("#DataMining", 6),
    ("#SocialMedia", 5),
    ("#Facebook", 5),
    ("#IoT", 4),
    ("#CloudComputing", 4),
    ("#OpenData", 3),
    ("#ClimateChange", 3),
    ("#Genomics", 3),
    ("#MentalHealth", 2),
    ("#SmartCity", 2),
]

TWEET_TEMPLATES = [
    "New paper out on {topic} {tags} ",
    "Really interesting read about {topic} {tags}",
    "This study on {topic} is worth your time {tags}",
    "Great results applying {topic} to real problems {tags}",
    "Thread: what {topic} means for research {tags}",
]

TWEET_TOPICS = [
    "machine learning in hospitals",
    "big data for climate science",
    "privacy and social networks",
    "deep learning for genomics",
    "data mining at scale",
    "smart cities and sensors",
    "artificial intelligence in medicine",
    "open data in science",
]


def _weighted_sample(rng, pool, k):
    labels = [label for label, weight in pool for _ in range(weight)]
    chosen = []
    while len(chosen) < k:
        pick = rng.choice(labels)
        if pick not in chosen:
            chosen.append(pick)
    return chosen


def build_publications(rng):
    publications = []
    for index in range(1, 51):
        n_keywords = rng.choice([2, 3, 3, 4, 4, 5])
        keywords = _weighted_sample(rng, KEYWORD_POOL, n_keywords)
        title = rng.choice(TITLE_TEMPLATES).format(kw=keywords[0])
        publications.append({
            "doi": f"10.5555/demo.{index:04d}",
            "title": title,
            "abstract": f"We study {keywords[0].lower()} using {keywords[1].lower()}.",
            "author_keywords": keywords,
            "year": rng.choice([2014, 2015, 2016, 2017]),
            "doc_type": rng.choice(["article"] * 8 + ["review", "letter"]),
        })
    return publications


def build_events(rng, publications):
    dois = [p["doi"] for p in publications]
    events = []
    counter = 0

    def next_id(platform):
        nonlocal counter
        counter += 1
        return f"{platform[:2]}-{counter:05d}"

    # tweets: 100 unique plus 20 literal retweet duplicates
    tweets = []
    for _ in range(100):
        topic = rng.choice(TWEET_TOPICS)
        tags = " ".join(_weighted_sample(rng, HASHTAG_POOL, rng.choice([1, 2, 2, 3])))
        text = rng.choice(TWEET_TEMPLATES).format(topic=topic, tags=tags).strip()
        mentioned = rng.sample(dois, rng.choice([1, 1, 1, 2]))
        tweets.append((text, mentioned))
        events.append({
            "event_id": next_id("twitter"), "platform": "twitter",
            "dois": mentioned, "text": text, "language": "en",
            "timestamp": f"2017-0{rng.randint(1, 9)}-1{rng.randint(0, 9)}T12:00:00Z",
        })
    for text, mentioned in rng.sample(tweets, 20):
        events.append({
            "event_id": next_id("twitter"), "platform": "twitter",
            "dois": mentioned, "text": text, "language": "en",
            "timestamp": "2017-10-01T08:30:00Z",
        })

    # blog and news posts share a few identical headlines, like real wire copy
    for platform, count in (("blog", 22), ("news", 27)):
        titles = [rng.choice(BLOG_NEWS_TITLES) for _ in range(count)]
        for title in titles:
            events.append({
                "event_id": next_id(platform), "platform": platform,
                "dois": rng.sample(dois, rng.choice([1, 1, 2])),
                "text": title, "language": "en",
                "timestamp": f"2017-0{rng.randint(1, 9)}-0{rng.randint(1, 9)}T09:00:00Z",
            })

    for title in POLICY_TITLES:
        events.append({
            "event_id": next_id("policy"), "platform": "policy",
            "dois": rng.sample(dois, 2), "text": title,
            "language": "en", "timestamp": "2017-06-15T00:00:00Z",
        })

    for summary in WIKI_SUMMARIES:
        events.append({
            "event_id": next_id("wikipedia"), "platform": "wikipedia",
            "dois": rng.sample(dois, rng.choice([1, 2])), "text": summary,
            "language": "en", "timestamp": "2017-07-20T00:00:00Z",
        })

    # a few non-English events; the default pipeline filters these out
    for text, language in (("Große Datenmengen in der Medizin", "de"),
                           ("Les mégadonnées et la santé", "fr"),
                           ("Analyse de données massives", "fr")):
        events.append({
            "event_id": next_id("news"), "platform": "news",
            "dois": [rng.choice(dois)], "text": text,
            "language": language, "timestamp": "2017-05-05T00:00:00Z",
        })
    return events


def main():
    rng = random.Random(20170101)
    OUT_DIR.mkdir(parents=True, exist_ok=True)
    publications = build_publications(rng)
    events = build_events(rng, publications)
    with open(OUT_DIR / "publications.jsonl", "w", encoding="utf-8") as handle:
        for record in publications:
            handle.write(json.dumps(record, sort_keys=True) + "\n")
    with open(OUT_DIR / "events.jsonl", "w", encoding="utf-8") as handle:
        for record in events:
            handle.write(json.dumps(record, sort_keys=True) + "\n")
    print(f"wrote {len(publications)} publications and {len(events)} events to {OUT_DIR}")


if __name__ == "__main__":
    main()
