"""Ingest the demo corpus and measure mention coverage per platform.
=====================================================================

Publications and online events arrive as JSON-lines files. Loading
validates each record, canonicalizes DOIs, filters events to English, and
collapses exact duplicate posts; linking then joins events to publications
on DOI. The coverage report answers: how many events does each platform
contribute, and what share of the publication corpus got mentioned?
"""
from pathlib import Path

from topicshift import LoadReport, coverage_report, link_corpus, load_events, load_publications

DATA = Path(__file__).resolve().parent.parent / "data" / "demo"

# Load both record streams, keeping diagnostics so we can inspect what was
# dropped along the way.
pub_report, event_report = LoadReport(), LoadReport()
publications = load_publications(DATA / "publications.jsonl", report=pub_report)
events = load_events(DATA / "events.jsonl", language_filter="en", report=event_report)

print(f"publications kept:   {pub_report.kept}")
print(f"events kept:         {event_report.kept}")
print(f"non-English dropped: {event_report.dropped_language}")
print(f"duplicates folded:   {sum(event_report.all_events.values()) - sum(event_report.unique_events.values())}")

# Link on DOI. Events that mention unknown DOIs stay in the corpus but
# produce no links.
corpus = link_corpus(publications, events, event_totals=dict(event_report.all_events))
report = coverage_report(corpus)

print()
print(f"{'platform':<12}{'all':>6}{'unique':>8}{'papers':>8}{'share %':>9}")
for row in report.platforms:
    print(f"{row.platform:<12}{row.all_events:>6}{row.unique_events:>8}"
          f"{row.mentioned_papers:>8}{row.share_pct:>9.2f}")
print(f"{'group 1':<12}{'':>6}{'':>8}{report.group1_mentioned:>8}"
      f"{report.group1_share_pct:>9.2f}")
print(f"{'group 2':<12}{'':>6}{'':>8}{report.group2_mentioned:>8}"
      f"{report.group2_share_pct:>9.2f}")
print(f"{'total':<12}{'':>6}{'':>8}{report.grand_total_mentioned:>8}"
      f"{report.grand_share_pct:>9.2f}")
