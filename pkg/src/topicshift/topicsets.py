"""Label normalization, variant merging, and top-N topic-set construction.

A topic set is one audience group's most frequent normalized labels. Groups
are author keywords (K), tweet hashtags (H), event-text terms overall
(T_all), and the per-platform term subsets. The normalized labels double as
binary membership vectors for the similarity measures in `compare`.

The bundled reference fixture (`data/table8_topics.csv`) lists 235 topics
with their per-group frequencies and per-platform term counts; loading it
yields ready-made topic sets and frequency tables for the comparison suite.
"""
from __future__ import annotations

import csv
import io
import unicodedata
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from pathlib import Path
from typing import Iterable, Mapping

from ._util import round_half_away

GROUPS = ("K", "H", "T_all", "T_blog", "T_news", "T_policy", "T_wikipedia")
TERM_PLATFORM_GROUPS = ("T_blog", "T_news", "T_policy", "T_wikipedia")

# Irregular plural endings restored to their singular (-ses -> -sis class).
DEFAULT_SES_MAP = {
    "analyses": "analysis",
    "theses": "thesis",
    "hypotheses": "hypothesis",
    "diagnoses": "diagnosis",
    "prognoses": "prognosis",
    "syntheses": "synthesis",
    "emphases": "emphasis",
    "parentheses": "parenthesis",
    "crises": "crisis",
    "bases": "basis",
    "axes": "axis",
}


def _read_entries(path: str | Path | None, default_name: str) -> list[str]:
    if path is None:
        text = resources.files("topicshift.data").joinpath(default_name).read_text("utf-8")
    else:
        text = Path(path).read_text("utf-8")
    return [line.strip() for line in text.splitlines()
            if line.strip() and not line.strip().startswith("#")]


def load_abbreviations(path: str | Path | None = None) -> dict[str, str]:
    """Load a whole-label "abbreviation<TAB>expansion" lexicon."""
    lexicon = {}
    for entry in _read_entries(path, "abbreviations.txt"):
        short, _, full = entry.partition("\t")
        lexicon[short.strip().casefold()] = " ".join(full.split()).casefold()
    return lexicon


@lru_cache(maxsize=None)
def default_abbreviations() -> Mapping[str, str]:
    return load_abbreviations(None)


@dataclass(frozen=True)
class PluralRules:
    """Final-token singularization rules: a keep-list plus irregular endings."""

    keep: frozenset[str]
    irregular: Mapping[str, str]

    @classmethod
    def default(cls) -> "PluralRules":
        return _default_plural_rules()


@lru_cache(maxsize=None)
def _default_plural_rules() -> PluralRules:
    return PluralRules(
        keep=frozenset(_read_entries(None, "plural_keep.txt")),
        irregular=dict(DEFAULT_SES_MAP),
    )


def _singularize(token: str, rules: PluralRules) -> str:
    if token in rules.keep:
        return token
    if token in rules.irregular:
        return rules.irregular[token]
    if token.endswith("ies") and len(token) >= 5:
        return token[:-3] + "y"
    if token.endswith("s") and len(token) >= 4 and not token.endswith(("ss", "us", "is")):
        return token[:-1]
    return token


def normalize_label(
    raw: str,
    abbreviations: Mapping[str, str] | None = None,
    plural_rules: PluralRules | None = None,
) -> str:
    """Canonicalize a topic label; idempotent on its own output.

    Steps: case-fold, NFC-normalize, replace hyphens with spaces, collapse
    whitespace, expand whole-label abbreviations, singularize the final
    token. Raises ValueError on empty input.
    """
    if not raw or not raw.strip():
        raise ValueError("cannot normalize an empty label")
    abbreviations = abbreviations if abbreviations is not None else default_abbreviations()
    plural_rules = plural_rules if plural_rules is not None else PluralRules.default()
    label = unicodedata.normalize("NFC", raw.casefold())
    label = label.replace("-", " ").replace("–", " ").replace("—", " ")
    label = " ".join(label.split())
    label = abbreviations.get(label, label)
    tokens = label.split()
    tokens[-1] = _singularize(tokens[-1], plural_rules)
    return " ".join(tokens)


@dataclass(frozen=True)
class TopicLabel:
    """A canonical label together with the raw variants merged into it."""

    canonical: str
    variants: frozenset[str]


def merge_labels(
    raw_frequencies: Mapping[str, int],
    abbreviations: Mapping[str, str] | None = None,
    plural_rules: PluralRules | None = None,
) -> tuple[dict[str, int], dict[str, TopicLabel]]:
    """Normalize raw labels and sum frequencies of variants that collide."""
    frequencies: dict[str, int] = {}
    variants: dict[str, set[str]] = {}
    for raw, count in raw_frequencies.items():
        canonical = normalize_label(raw, abbreviations, plural_rules)
        frequencies[canonical] = frequencies.get(canonical, 0) + count
        variants.setdefault(canonical, set()).add(raw)
    labels = {
        canonical: TopicLabel(canonical=canonical, variants=frozenset(forms))
        for canonical, forms in variants.items()
    }
    return frequencies, labels


@dataclass(frozen=True)
class TopicSet:
    """One group's top-N labels with frequencies; membership is binary."""

    group_id: str
    members: Mapping[str, int]
    n_selected: int

    @property
    def labels(self) -> frozenset[str]:
        return frozenset(self.members)

    def __contains__(self, label: str) -> bool:
        return label in self.members

    def __len__(self) -> int:
        return len(self.members)


def build_topic_set(group_id: str, frequencies: Mapping[str, int], n: int = 100) -> TopicSet:
    """Keep the n most frequent labels; cutoff ties break lexicographically.

    Raises ValueError for n < 1 or nonpositive frequencies.
    """
    if n < 1:
        raise ValueError("top-N cutoff must be >= 1")
    for label, count in frequencies.items():
        if count < 1:
            raise ValueError(f"frequency for {label!r} must be >= 1, got {count}")
    ranked = sorted(frequencies.items(), key=lambda item: (-item[1], item[0]))
    return TopicSet(group_id=group_id, members=dict(ranked[:n]), n_selected=n)


def share_statistics(
    topic_set: TopicSet,
    total_occurrences: int,
    total_documents: int,
) -> dict[str, tuple[float, float]]:
    """Per-label (share of all occurrences, share of documents), in percent.

    Occurrence counting is binary per document, so a label's frequency works
    for both ratios. Values are full precision; exporters round to two
    decimals. Raises ValueError on nonpositive totals.
    """
    if total_occurrences <= 0 or total_documents <= 0:
        raise ValueError("share statistics need positive totals")
    return {
        label: (count / total_occurrences * 100.0, count / total_documents * 100.0)
        for label, count in topic_set.members.items()
    }


def export_topic_sets_csv(
    sets: Mapping[str, TopicSet],
    totals: Mapping[str, tuple[int, int]] | None = None,
) -> str:
    """CSV of all sets: group, canonical, frequency, share_pct, share_docs_pct.

    `totals` maps group id to (total occurrences, total documents); share
    columns stay blank for groups without totals.
    """
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(["group", "canonical", "frequency", "share_pct", "share_docs_pct"])
    for group_id, topic_set in sets.items():
        shares = {}
        if totals and group_id in totals:
            occ_total, doc_total = totals[group_id]
            shares = share_statistics(topic_set, occ_total, doc_total)
        for label, count in topic_set.members.items():
            if label in shares:
                share_pct, share_docs = shares[label]
                writer.writerow([group_id, label, count,
                                 f"{round_half_away(share_pct, 2):.2f}",
                                 f"{round_half_away(share_docs, 2):.2f}"])
            else:
                writer.writerow([group_id, label, count, "", ""])
    return buffer.getvalue()


# ---------------------------------------------------------------------------
# Reference topic fixture
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class FixtureRow:
    """One topic of the bundled fixture; zero means absent from a column."""

    topic: str
    canonical: str
    topic_type: str
    term_total: int
    term_blog: int
    term_news: int
    term_policy: int
    term_wikipedia: int
    keywords: int
    hashtags: int
    total: int


def load_topic_fixture(path: str | Path | None = None) -> list[FixtureRow]:
    """Read the topic fixture CSV; None loads the bundled 235-topic table.

    Blank cells mean the topic does not occur in that column and load as
    zero. Labels are canonicalized on load.
    """
    if path is None:
        text = resources.files("topicshift.data").joinpath("table8_topics.csv").read_text("utf-8")
    else:
        text = Path(path).read_text("utf-8")
    rows: list[FixtureRow] = []
    for record in csv.DictReader(io.StringIO(text)):
        def cell(name: str) -> int:
            value = (record.get(name) or "").strip()
            return int(value) if value else 0

        topic = record["topic"].strip()
        rows.append(FixtureRow(
            topic=topic,
            canonical=normalize_label(topic),
            topic_type=record["type"].strip(),
            term_total=cell("term_total"),
            term_blog=cell("term_blog"),
            term_news=cell("term_news"),
            term_policy=cell("term_policy"),
            term_wikipedia=cell("term_wikipedia"),
            keywords=cell("keywords"),
            hashtags=cell("hashtags"),
            total=cell("total"),
        ))
    return rows


_FIXTURE_COLUMNS = {
    "K": "keywords",
    "H": "hashtags",
    "T_all": "term_total",
    "T_blog": "term_blog",
    "T_news": "term_news",
    "T_policy": "term_policy",
    "T_wikipedia": "term_wikipedia",
}


def fixture_frequency_tables(rows: Iterable[FixtureRow] | None = None) -> dict[str, dict[str, int]]:
    """Per-group canonical-label frequency tables from fixture rows."""
    rows = list(rows) if rows is not None else load_topic_fixture()
    tables: dict[str, dict[str, int]] = {group: {} for group in GROUPS}
    for row in rows:
        for group, column in _FIXTURE_COLUMNS.items():
            count = getattr(row, column)
            if count > 0:
                tables[group][row.canonical] = count
    return tables


def fixture_topic_sets(rows: Iterable[FixtureRow] | None = None, n: int = 100) -> dict[str, TopicSet]:
    """Top-N topic sets for every group of the fixture."""
    tables = fixture_frequency_tables(rows)
    return {group: build_topic_set(group, table, n) for group, table in tables.items()}
