"""Extract candidate topics from event text.
=============================================

Two extractors: a linguistic filter that keeps maximal adjective/noun
phrases ending in a noun (for blog, news, policy titles and wikipedia
first sentences), and a hashtag counter for tweets. Candidate phrases are
then ranked by how far their co-occurrence profile diverges from the
corpus average; distinctive phrases survive, generic ones drop out.
"""
from pathlib import Path

from topicshift import (
    build_candidates,
    count_hashtags,
    extract_candidate_phrases,
    extract_hashtags,
    first_sentence,
    load_events,
    phrase_label,
    relevance_score,
    tokenize,
)

DATA = Path(__file__).resolve().parent.parent / "data" / "demo"

# --- the linguistic filter on a single title ------------------------------
title = "New study shows machine learning predicts heart disease"
sentences = tokenize(title)
print("tagged tokens:")
for token in sentences[0]:
    print(f"  {token.surface:<12}{token.pos}")
print("phrases:", [phrase_label(s) for s in extract_candidate_phrases(sentences)])

# Wikipedia summaries are cut at the first terminal mark outside brackets.
summary = "Big data is a field that treats ways to analyze very large data sets. " \
          "The term has been in use since the 1990s."
print("\nwikipedia first sentence:", first_sentence(summary))

# --- relevance scoring over the demo corpus -------------------------------
events = load_events(DATA / "events.jsonl", language_filter="en")
titles = [e.text for e in events if e.platform in ("blog", "news", "policy")]
documents = [
    {phrase_label(s) for s in extract_candidate_phrases(tokenize(text))}
    for text in titles
]
candidates = build_candidates(documents)
retained = relevance_score(candidates, relevance_fraction=0.6, min_occurrences=2)
print(f"\n{len(candidates)} candidates, {len(retained)} retained; most distinctive:")
for candidate in sorted(retained, key=lambda c: -c.relevance)[:8]:
    print(f"  {candidate.label:<28} docs={candidate.doc_frequency:<3} "
          f"relevance={candidate.relevance:.4f}")

# --- hashtags --------------------------------------------------------------
tweets = [e.text for e in events if e.platform == "twitter"]
print("\nexample tweet tags:", [t.canonical for t in extract_hashtags(tweets[0])])
counted = count_hashtags(tweets)
print("top hashtags:")
for tag in list(counted.values())[:8]:
    print(f"  #{tag.display:<readjust20} {tag.frequency}")
