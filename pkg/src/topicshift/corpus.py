"""Ingestion and linking of publication and online-event records.

Publications and events arrive as JSON-lines streams, are validated and
deduplicated, and are joined on canonical DOI into a :class:`LinkedCorpus`.
A :class:`CoverageReport` then summarises, per platform and per audience
group, how many events exist and what share of the publication corpus was
mentioned at least once.

Platform groups: group 1 covers the event-text sources (news, policy, blog,
wikipedia); group 2 is twitter. DOI is the only join key; events that link
no known DOI are retained but produce no links.
"""
from __future__ import annotations

import csv
import io
import json
import logging
from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property
from pathlib import Path
from typing import Any, Iterable, Iterator, Mapping, Sequence

from ._util import round_half_away

log = logging.getLogger(__name__)

PLATFORMS = ("twitter", "blog", "news", "policy", "wikipedia")
GROUP_ONE = ("news", "policy", "blog", "wikipedia")
GROUP_TWO = ("twitter",)
DOC_TYPES = ("article", "review", "letter")

_DOI_PREFIXES = (
    "https://doi.org/",
    "http://doi.org/",
    "https://dx.doi.org/",
    "http://dx.doi.org/",
    "doi.org/",
    "doi:",
)


def canonical_doi(raw: str) -> str:
    """Lowercase, trim, and strip URL/`doi:` prefixes from a DOI string."""
    doi = raw.strip().lower()
    changed = True
    while changed:
        changed = False
        for prefix in _DOI_PREFIXES:
            if doi.startswith(prefix):
                doi = doi[len(prefix):].strip()
                changed = True
    return doi


@dataclass(frozen=True)
class Publication:
    """One scholarly record; `doi` is already canonical."""

    doi: str
    title: str = ""
    abstract: str = ""
    author_keywords: tuple[str, ...] = ()
    year: int | None = None
    doc_type: str = "article"

    def __post_init__(self) -> None:
        if not self.doi:
            raise ValueError("publication requires a nonempty DOI")
        if self.doc_type not in DOC_TYPES:
            raise ValueError(f"doc_type must be one of {DOC_TYPES}, got {self.doc_type!r}")


@dataclass(frozen=True)
class AltmetricEvent:
    """One online mention: a post on one platform linking one or more DOIs."""

    event_id: str
    platform: str
    dois: tuple[str, ...]
    text: str = ""
    language: str = "en"
    timestamp: str | None = None

    def __post_init__(self) -> None:
        if not self.event_id:
            raise ValueError("event requires a nonempty event_id")
        if self.platform not in PLATFORMS:
            raise ValueError(f"platform must be one of {PLATFORMS}, got {self.platform!r}")
        if not self.dois:
            raise ValueError("event requires at least one DOI")


@dataclass
class LoadReport:
    """Per-load diagnostics: what was kept, dropped, and why."""

    kept: int = 0
    malformed: int = 0
    dropped_missing_doi: int = 0
    duplicate_doi: int = 0
    dropped_language: int = 0
    dropped_unknown_platform: int = 0
    all_events: Counter = field(default_factory=Counter)
    unique_events: Counter = field(default_factory=Counter)
    diagnostics: list[str] = field(default_factory=list)

    def diagnose(self, message: str) -> None:
        self.diagnostics.append(message)
        log.warning("%s", message)


def _iter_records(source: Any) -> Iterator[tuple[int, Any]]:
    """Yield (line_number, record) pairs from a path, file object, or iterable.

    Iterable elements may be JSON text lines or already-parsed dicts.
    """
    if isinstance(source, (str, Path)):
        with open(source, "r", encoding="utf-8") as handle:
            yield from _iter_records(handle)
        return
    for lineno, item in enumerate(source, start=1):
        if isinstance(item, (bytes, bytearray)):
            item = item.decode("utf-8")
        if isinstance(item, str):
            if not item.strip():
                continue
            yield lineno, item
        else:
            yield lineno, item


def _parse_record(lineno: int, item: Any, report: LoadReport) -> dict | None:
    if isinstance(item, dict):
        return item
    try:
        record = json.loads(item)
    except json.JSONDecodeError as exc:
        report.malformed += 1
        report.diagnose(f"line {lineno}: invalid JSON ({exc.msg})")
        return None
    if not isinstance(record, dict):
        report.malformed += 1
        report.diagnose(f"line {lineno}: record is not an object")
        return None
    return record


def load_publications(source: Any, report: LoadReport | None = None) -> list[Publication]:
    """Read publication records, canonicalize DOIs, drop DOI-less records.

    Duplicate DOIs keep the first record seen and are counted in the report.
    """
    report = report if report is not None else LoadReport()
    seen: set[str] = set()
    publications: list[Publication] = []
    for lineno, item in _iter_records(source):
        record = _parse_record(lineno, item, report)
        if record is None:
            continue
        doi = canonical_doi(str(record.get("doi", "") or ""))
        if not doi:
            report.dropped_missing_doi += 1
            continue
        if doi in seen:
            report.duplicate_doi += 1
            report.diagnose(f"line {lineno}: duplicate DOI {doi!r}, keeping first")
            continue
        doc_type = record.get("doc_type", "article")
        try:
            publication = Publication(
                doi=doi,
                title=str(record.get("title", "") or ""),
                abstract=str(record.get("abstract", "") or ""),
                author_keywords=tuple(str(k) for k in record.get("author_keywords", []) or []),
                year=int(record["year"]) if record.get("year") is not None else None,
                doc_type=str(doc_type),
            )
        except (ValueError, TypeError) as exc:
            report.malformed += 1
            report.diagnose(f"line {lineno}: {exc}")
            continue
        seen.add(doi)
        publications.append(publication)
        report.kept += 1
    return publications


def _collapse_text(text: str) -> str:
    return " ".join(text.casefold().split())


def _language_matches(tag: str, wanted: str) -> bool:
    tag = tag.strip().lower()
    wanted = wanted.strip().lower()
    return tag == wanted or tag.startswith(wanted + "-")


def load_events(
    source: Any,
    language_filter: str | None = None,
    report: LoadReport | None = None,
) -> list[AltmetricEvent]:
    """Read event records, filter by language, and collapse exact duplicates.

    Two events are duplicates when they share the platform, the DOI set, and
    the text after whitespace collapse and case folding. `report.all_events`
    counts events per platform before deduplication, `report.unique_events`
    after; both are taken after validation and language filtering.
    """
    report = report if report is not None else LoadReport()
    seen: set[tuple[str, frozenset[str], str]] = set()
    events: list[AltmetricEvent] = []
    for lineno, item in _iter_records(source):
        record = _parse_record(lineno, item, report)
        if record is None:
            continue
        platform = str(record.get("platform", "") or "")
        if platform not in PLATFORMS:
            report.dropped_unknown_platform += 1
            report.diagnose(f"line {lineno}: unknown platform {platform!r}, record dropped")
            continue
        language = str(record.get("language", "en") or "en")
        if language_filter is not None and not _language_matches(language, language_filter):
            report.dropped_language += 1
            continue
        dois = tuple(
            doi for doi in (canonical_doi(str(d)) for d in record.get("dois", []) or []) if doi
        )
        if not dois:
            report.malformed += 1
            report.diagnose(f"line {lineno}: event lists no usable DOI, record dropped")
            continue
        try:
            event = AltmetricEvent(
                event_id=str(record.get("event_id", "") or ""),
                platform=platform,
                dois=dois,
                text=str(record.get("text", "") or ""),
                language=language,
                timestamp=record.get("timestamp"),
            )
        except ValueError as exc:
            report.malformed += 1
            report.diagnose(f"line {lineno}: {exc}")
            continue
        report.all_events[platform] += 1
        identity = (event.platform, frozenset(event.dois), _collapse_text(event.text))
        if identity in seen:
            continue
        seen.add(identity)
        report.unique_events[platform] += 1
        events.append(event)
        report.kept += 1
    return events


@dataclass(frozen=True)
class LinkedCorpus:
    """Publications and events joined on DOI; immutable after construction.

    `links` maps each mentioned DOI to the event ids that list it.
    `event_totals` carries the per-platform pre-deduplication event counts
    so coverage reporting can emit both "all" and "unique" columns.
    """

    publications: Mapping[str, Publication]
    events: tuple[AltmetricEvent, ...]
    links: Mapping[str, tuple[str, ...]]
    event_totals: Mapping[str, int] = field(default_factory=dict)

    @cached_property
    def events_by_id(self) -> dict[str, AltmetricEvent]:
        return {event.event_id: event for event in self.events}

    def validate(self) -> None:
        """Check the structural invariants; raises ValueError on violation."""
        by_id = self.events_by_id
        for doi, event_ids in self.links.items():
            if doi not in self.publications:
                raise ValueError(f"link source {doi!r} is not a known publication")
            for event_id in event_ids:
                event = by_id.get(event_id)
                if event is None:
                    raise ValueError(f"link target {event_id!r} is not a known event")
                if doi not in event.dois:
                    raise ValueError(f"event {event_id!r} linked under DOI it does not list")


def link_corpus(
    publications: Sequence[Publication],
    events: Sequence[AltmetricEvent],
    event_totals: Mapping[str, int] | None = None,
) -> LinkedCorpus:
    """Join events to publications on DOI.

    Produces one link per (doi, event) pair where the event lists a known
    DOI. Unlinkable events are kept in `events` but get no link entries.
    """
    pubs: dict[str, Publication] = {}
    for publication in publications:
        pubs.setdefault(publication.doi, publication)
    links: dict[str, list[str]] = {}
    for event in events:
        for doi in event.dois:
            if doi in pubs:
                links.setdefault(doi, []).append(event.event_id)
    totals = dict(event_totals) if event_totals is not None else dict(
        Counter(event.platform for event in events)
    )
    return LinkedCorpus(
        publications=pubs,
        events=tuple(events),
        links={doi: tuple(ids) for doi, ids in links.items()},
        event_totals=totals,
    )


@dataclass(frozen=True)
class PlatformCoverage:
    platform: str
    all_events: int
    unique_events: int
    mentioned_papers: int
    share_pct: float


@dataclass(frozen=True)
class CoverageReport:
    """Per-platform and per-group mention coverage of the publication corpus.

    Shares are percentages of `total_publications` and are kept at full
    precision here; emission rounds to two decimals.
    """

    platforms: tuple[PlatformCoverage, ...]
    group1_mentioned: int
    group1_share_pct: float
    group2_mentioned: int
    group2_share_pct: float
    grand_total_mentioned: int
    grand_share_pct: float
    total_publications: int

    def to_json_dict(self) -> dict:
        return {
            "total_publications": self.total_publications,
            "platforms": [
                {
                    "platform": row.platform,
                    "all_events": row.all_events,
                    "unique_events": row.unique_events,
                    "mentioned_papers": row.mentioned_papers,
                    "share_pct": round_half_away(row.share_pct, 2),
                }
                for row in self.platforms
            ],
            "group1": {
                "platforms": list(GROUP_ONE),
                "mentioned_papers": self.group1_mentioned,
                "share_pct": round_half_away(self.group1_share_pct, 2),
            },
            "group2": {
                "platforms": list(GROUP_TWO),
                "mentioned_papers": self.group2_mentioned,
                "share_pct": round_half_away(self.group2_share_pct, 2),
            },
            "grand_total": {
                "mentioned_papers": self.grand_total_mentioned,
                "share_pct": round_half_away(self.grand_share_pct, 2),
            },
        }

    def to_csv_text(self) -> str:
        """CSV with one row per platform plus group and grand-total rows."""
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(["platform", "all_events", "unique_events", "mentioned_papers", "share_pct"])
        for row in self.platforms:
            writer.writerow([
                row.platform,
                row.all_events,
                row.unique_events,
                row.mentioned_papers,
                f"{round_half_away(row.share_pct, 2):.2f}",
            ])
        writer.writerow(["group1", "", "", self.group1_mentioned,
                         f"{round_half_away(self.group1_share_pct, 2):.2f}"])
        writer.writerow(["group2", "", "", self.group2_mentioned,
                         f"{round_half_away(self.group2_share_pct, 2):.2f}"])
        writer.writerow(["grand_total", "", "", self.grand_total_mentioned,
                         f"{round_half_away(self.grand_share_pct, 2):.2f}"])
        return buffer.getvalue()


def coverage_report(corpus: LinkedCorpus) -> CoverageReport:
    """Count, per platform and group, distinct mentioned DOIs and their share.

    Raises ValueError when the corpus holds no publications (shares would be
    undefined).
    """
    total = len(corpus.publications)
    if total == 0:
        raise ValueError("coverage is undefined for an empty publication corpus")

    by_id = corpus.events_by_id
    mentioned: dict[str, set[str]] = {platform: set() for platform in PLATFORMS}
    for doi, event_ids in corpus.links.items():
        for event_id in event_ids:
            mentioned[by_id[event_id].platform].add(doi)

    unique_counts = Counter(event.platform for event in corpus.events)

    def share(count: int) -> float:
        return count / total * 100.0

    rows = tuple(
        PlatformCoverage(
            platform=platform,
            all_events=int(corpus.event_totals.get(platform, unique_counts[platform])),
            unique_events=unique_counts[platform],
            mentioned_papers=len(mentioned[platform]),
            share_pct=share(len(mentioned[platform])),
        )
        for platform in PLATFORMS
    )
    group1: set[str] = set().union(*(mentioned[p] for p in GROUP_ONE))
    group2: set[str] = set().union(*(mentioned[p] for p in GROUP_TWO))
    grand = group1 | group2
    return CoverageReport(
        platforms=rows,
        group1_mentioned=len(group1),
        group1_share_pct=share(len(group1)),
        group2_mentioned=len(group2),
        group2_share_pct=share(len(group2)),
        grand_total_mentioned=len(grand),
        grand_share_pct=share(len(grand)),
        total_publications=total,
    )
