"""Command-line pipeline: ingest, extract, topics, compare, map, linkage,
report, and the full chain (`all`).

Configuration comes from defaults, then an optional JSON config file
(`--config` or the TOPICSHIFT_CONFIG environment variable), then explicit
flags; later sources win. Every command recomputes its inputs from the raw
record files, so runs are stateless and byte-identical given the same
inputs, config, and seed.

Exit codes: 0 success, 2 missing input file, 3 config or record-schema
violation (offending records are listed).
"""
from __future__ import annotations

import argparse
import json
import math
import os
import sys
from dataclasses import dataclass, field, fields, replace
from pathlib import Path
from typing import Collection, Mapping, Sequence

from . import compare, linkage, netmap, termext, topicsets
from ._util import ordered_map, round_half_away
from .corpus import (
    GROUP_ONE,
    PLATFORMS,
    LinkedCorpus,
    LoadReport,
    coverage_report,
    link_corpus,
    load_events,
    load_publications,
)

COMMANDS = ("ingest", "extract", "topics", "compare", "map", "linkage", "report", "all")

EXIT_OK = 0
EXIT_MISSING_INPUT = 2
EXIT_INVALID = 3

ENV_CONFIG = "TOPICSHIFT_CONFIG"

# fixed 12-color map palette for cluster ids (presentation constant)
PALETTE = (
    "#d62728", "#2ca02c", "#1f77b4", "#ff7f0e", "#9467bd", "#8c564b",
    "#e377c2", "#7f7f7f", "#bcbd22", "#17becf", "#aec7e8", "#ffbb78",
)


class ConfigError(Exception):
    """Invalid configuration value; maps to exit code 3."""


class MissingInputError(Exception):
    """Required input file absent; maps to exit code 2."""


@dataclass
class PipelineConfig:
    """All pipeline knobs; flags override config-file values."""

    publications: str | None = None
    events: str | None = None
    fixture: str | None = None
    output_dir: str = "out"
    platforms: tuple[str, ...] = PLATFORMS
    language: str | None = "en"
    top_n: int = 100
    relevance_fraction: float = 0.6
    min_occurrences: int = 2
    resolution: float = 0.5
    min_cluster_size: int = 1
    merge_small: bool = True
    seed: int = 0
    layout_iterations: int = 1000
    threads: int = 1
    top_k: int = 5
    abbreviations: str | None = None
    noun_stoplist: str | None = None
    tagger_lexicon: str | None = None

    def validate(self, need_corpus: bool, need_fixture: bool = False) -> None:
        if self.top_n < 1:
            raise ConfigError("top_n must be >= 1")
        if not 0 < self.relevance_fraction <= 1:
            raise ConfigError("relevance_fraction must be in (0, 1]")
        if self.min_occurrences < 1:
            raise ConfigError("min_occurrences must be >= 1")
        if self.resolution <= 0:
            raise ConfigError("resolution must be > 0")
        if self.min_cluster_size < 1:
            raise ConfigError("min_cluster_size must be >= 1")
        if self.threads < 1:
            raise ConfigError("threads must be >= 1")
        if self.layout_iterations < 1:
            raise ConfigError("layout_iterations must be >= 1")
        if self.top_k < 1:
            raise ConfigError("top_k must be >= 1")
        unknown = [p for p in self.platforms if p not in PLATFORMS]
        if unknown:
            raise ConfigError(f"unknown platforms: {', '.join(unknown)}")
        if need_corpus:
            if not self.publications or not self.events:
                raise MissingInputError(
                    "this command needs --publications and --events (or a fixture)")
        if need_fixture and not self.fixture:
            raise MissingInputError("this command needs --fixture")
        for name in ("publications", "events", "fixture",
                     "abbreviations", "noun_stoplist", "tagger_lexicon"):
            value = getattr(self, name)
            if value is not None and not Path(value).exists():
                raise MissingInputError(f"{name} file not found: {value}")


def _config_from_file(path: str) -> dict:
    if not Path(path).exists():
        raise MissingInputError(f"config file not found: {path}")
    try:
        data = json.loads(Path(path).read_text("utf-8"))
    except json.JSONDecodeError as exc:
        raise ConfigError(f"config file {path} is not valid JSON: {exc.msg}")
    if not isinstance(data, dict):
        raise ConfigError(f"config file {path} must hold a JSON object")
    return data


def build_config(args: argparse.Namespace) -> PipelineConfig:
    """Merge defaults, config file, then explicit flags (later wins)."""
    config = PipelineConfig()
    config_path = args.config or os.environ.get(ENV_CONFIG)
    if config_path:
        file_values = _config_from_file(config_path)
        known = {f.name for f in fields(PipelineConfig)}
        unknown = sorted(set(file_values) - known)
        if unknown:
            raise ConfigError(f"unknown config keys: {', '.join(unknown)}")
        if "platforms" in file_values:
            file_values["platforms"] = tuple(file_values["platforms"])
        config = replace(config, **file_values)
    overrides = {}
    for f in fields(PipelineConfig):
        value = getattr(args, f.name, None)
        if value is not None:
            overrides[f.name] = value
    if "platforms" in overrides:
        overrides["platforms"] = tuple(
            p.strip() for p in str(overrides["platforms"]).split(",") if p.strip())
    return replace(config, **overrides)


# ---------------------------------------------------------------------------
# Pipeline stages
# ---------------------------------------------------------------------------

@dataclass
class PipelineState:
    """Everything derived from the raw inputs, computed once per run."""

    corpus: LinkedCorpus
    frequency_tables: dict[str, dict[str, int]]
    totals: dict[str, tuple[int, int]]
    topic_sets: dict[str, topicsets.TopicSet]
    keywords_by_doi: dict[str, set[str]]
    terms_by_event: dict[str, set[str]]
    hashtags_by_event: dict[str, set[str]]


def _load_corpus(config: PipelineConfig) -> LinkedCorpus:
    pub_report, event_report = LoadReport(), LoadReport()
    publications = load_publications(config.publications, report=pub_report)
    events = load_events(config.events, language_filter=config.language,
                         report=event_report)
    schema_issues = (pub_report.malformed + event_report.malformed
                     + event_report.dropped_unknown_platform)
    if schema_issues:
        lines = pub_report.diagnostics + event_report.diagnostics
        raise ConfigError("input records violate the schema:\n  " + "\n  ".join(lines))
    return link_corpus(publications, events, event_totals=dict(event_report.all_events))


def _event_document_text(event) -> str:
    if event.platform == "wikipedia":
        return termext.first_sentence(event.text)
    return event.text


def _build_state(config: PipelineConfig) -> PipelineState:
    corpus = _load_corpus(config)
    abbreviations = (topicsets.load_abbreviations(config.abbreviations)
                     if config.abbreviations else None)
    stoplist = (termext.load_noun_stoplist(config.noun_stoplist)
                if config.noun_stoplist else None)
    tagger = (termext.Tagger.from_file(config.tagger_lexicon)
              if config.tagger_lexicon else None)

    def normalize(label: str) -> str:
        return topicsets.normalize_label(label, abbreviations=abbreviations)

    # --- author keywords (K) ---
    raw_keywords: dict[str, int] = {}
    keyword_docs = 0
    keywords_by_doi: dict[str, set[str]] = {}
    for doi, publication in corpus.publications.items():
        if publication.author_keywords:
            keyword_docs += 1
        canon = {normalize(k) for k in publication.author_keywords if k.strip()}
        keywords_by_doi[doi] = canon
        for label in canon:
            raw_keywords[label] = raw_keywords.get(label, 0) + 1
    k_table = raw_keywords

    # --- hashtags (H) ---
    tweets = [event for event in corpus.events if event.platform == "twitter"]
    tag_counts = termext.count_hashtags(event.text for event in tweets)
    h_raw = {tag.canonical: tag.frequency for tag in tag_counts.values()}
    h_table, _ = topicsets.merge_labels(h_raw, abbreviations=abbreviations) \
        if h_raw else ({}, {})
    hashtags_by_event = {
        event.event_id: {normalize(tag.canonical)
                         for tag in termext.extract_hashtags(event.text)}
        for event in tweets
    }

    # --- event-text terms (T) ---
    text_events = [event for event in corpus.events
                   if event.platform in GROUP_ONE and event.platform in config.platforms]

    def extract(event) -> set[str]:
        sentences = termext.tokenize(_event_document_text(event), tagger=tagger)
        spans = termext.extract_candidate_phrases(sentences, noun_stoplist=stoplist)
        return {normalize(termext.phrase_label(span)) for span in spans}

    per_event_labels = ordered_map(extract, text_events, threads=config.threads)
    terms_by_event = {event.event_id: labels
                      for event, labels in zip(text_events, per_event_labels)}
    candidates = termext.build_candidates(per_event_labels)
    retained = termext.relevance_score(
        candidates,
        relevance_fraction=config.relevance_fraction,
        min_occurrences=config.min_occurrences,
    )
    pool = {candidate.label for candidate in retained}
    t_table = {c.label: c.doc_frequency for c in retained}
    platform_tables: dict[str, dict[str, int]] = {}
    for platform in GROUP_ONE:
        docs = [labels & pool for event, labels in zip(text_events, per_event_labels)
                if event.platform == platform]
        platform_tables[f"T_{platform}"] = termext.count_occurrences(docs)

    frequency_tables = {
        "K": k_table,
        "H": h_table,
        "T_all": t_table,
        **platform_tables,
    }
    totals = {
        "K": (sum(k_table.values()), max(keyword_docs, 1)),
        "H": (sum(h_table.values()), max(len(tweets), 1)),
        "T_all": (sum(t_table.values()), max(len(text_events), 1)),
    }
    for platform in GROUP_ONE:
        group = f"T_{platform}"
        docs = sum(1 for event in text_events if event.platform == platform)
        totals[group] = (sum(frequency_tables[group].values()) or 1, max(docs, 1))

    topic_sets = {
        group: topicsets.build_topic_set(group, table, config.top_n)
        for group, table in frequency_tables.items() if table
    }
    return PipelineState(
        corpus=corpus,
        frequency_tables=frequency_tables,
        totals=totals,
        topic_sets=topic_sets,
        keywords_by_doi=keywords_by_doi,
        terms_by_event=terms_by_event,
        hashtags_by_event=hashtags_by_event,
    )


def _fixture_state(config: PipelineConfig) -> tuple[dict[str, dict[str, int]], dict[str, topicsets.TopicSet]]:
    rows = topicsets.load_topic_fixture(config.fixture)
    tables = topicsets.fixture_frequency_tables(rows)
    sets = {group: topicsets.build_topic_set(group, table, config.top_n)
            for group, table in tables.items() if table}
    return tables, sets


# ---------------------------------------------------------------------------
# Artifact writers
# ---------------------------------------------------------------------------

def _write_text(path: Path, text: str) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text, encoding="utf-8", newline="\n")


def _write_json(path: Path, payload) -> None:
    _write_text(path, json.dumps(payload, indent=2, sort_keys=True) + "\n")


def _comparison_payload(tables: Mapping[str, dict[str, int]],
                        sets: Mapping[str, topicsets.TopicSet]) -> dict:
    ordered = [sets[g] for g in topicsets.GROUPS if g in sets]
    matrix = compare.pairwise_matrix(ordered)
    k = sets.get("K", topicsets.TopicSet("K", {}, 1))
    t = sets.get("T_all", topicsets.TopicSet("T_all", {}, 1))
    h = sets.get("H", topicsets.TopicSet("H", {}, 1))
    venn = compare.venn_partition(k, t, h)
    types = compare.classify_topics(k, t, h)
    common = sorted(label for label, kind in types.items() if kind == "KTH")
    shifts = compare.ranking_shift(
        common,
        tables.get("K", {}), tables.get("H", {}), tables.get("T_all", {}),
    )
    return {
        "matrix": matrix,
        "venn": venn,
        "types": types,
        "shifts": shifts,
    }


def _shift_rows(shifts: Sequence[compare.RankShift]) -> list[dict]:
    return [
        {
            "topic": shift.topic,
            "rank_keywords": shift.rank_in.get("K"),
            "rank_hashtags": shift.rank_in.get("H"),
            "rank_terms": shift.rank_in.get("T"),
            "direction_hashtags": shift.direction.get("H"),
            "direction_terms": shift.direction.get("T"),
        }
        for shift in shifts
    ]


def _write_comparison(out: Path, payload: dict) -> None:
    matrix: compare.SimilarityMatrix = payload["matrix"]
    _write_text(out / "similarity.csv", matrix.to_csv_text())
    _write_json(out / "similarity.json", matrix.to_json_dict())
    _write_json(out / "venn.json", payload["venn"])
    lines = ["label,type"]
    lines += [f"{label},{kind}" for label, kind in sorted(payload["types"].items())]
    _write_text(out / "topic_types.csv", "\n".join(lines) + "\n")
    _write_json(out / "rank_shifts.json", _shift_rows(payload["shifts"]))


def _keyword_graph(state: PipelineState, config: PipelineConfig) -> netmap.TermGraph:
    top_k = state.topic_sets.get("K")
    documents = [keywords for keywords in state.keywords_by_doi.values() if keywords]
    graph = netmap.cooccurrence_graph(documents, selected=top_k)
    netmap.association_strength(graph)
    netmap.cluster(graph, netmap.ClusterParams(
        resolution=config.resolution,
        min_cluster_size=config.min_cluster_size,
        merge_small=config.merge_small,
        random_seed=config.seed,
    ))
    netmap.layout(graph, iterations=config.layout_iterations, seed=config.seed)
    return graph


def _term_overlays(state: PipelineState) -> list[netmap.OverlayScore]:
    tables = {platform: state.frequency_tables.get(f"T_{platform}", {})
              for platform in GROUP_ONE}
    labels = sorted({label for table in tables.values() for label in table})
    if not labels:
        return []
    return netmap.overlay_scores(tables, labels)


def _render_svg(graph: netmap.TermGraph, width: int = 800, height: int = 600) -> str:
    """Static SVG term map: area tracks frequency, color tracks cluster."""
    margin = 60.0
    positions = graph.positions or {}
    if not positions:
        return (f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" '
                f'height="{height}"/>\n')
    xs = [xy[0] for xy in positions.values()]
    ys = [xy[1] for xy in positions.values()]
    span_x = max(max(xs) - min(xs), 1e-9)
    span_y = max(max(ys) - min(ys), 1e-9)
    scale = min((width - 2 * margin) / span_x, (height - 2 * margin) / span_y)
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        '<rect width="100%" height="100%" fill="white"/>',
    ]
    totals = dict(graph.nodes)
    for label in sorted(positions):
        x = (positions[label][0] - min(xs)) * scale + margin
        y = (positions[label][1] - min(ys)) * scale + margin
        radius = 3.0 + 2.0 * math.sqrt(totals.get(label, 1))
        color = PALETTE[(graph.clusters.get(label, 1) - 1) % len(PALETTE)]
        parts.append(f'<circle cx="{x:.2f}" cy="{y:.2f}" r="{radius:.2f}" '
                     f'fill="{color}" fill-opacity="0.8"/>')
        parts.append(f'<text x="{x:.2f}" y="{y - radius - 3:.2f}" font-size="10" '
                     f'text-anchor="middle" font-family="sans-serif">{_svg_escape(label)}</text>')
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def _svg_escape(text: str) -> str:
    return text.replace("&", "&amp;").replace("<", "&lt;").replace(">", "&gt;")


def _wordcloud_payload(tables: Mapping[str, dict[str, int]],
                       types: Mapping[str, str]) -> dict:
    weights: dict[str, dict[str, int]] = {region: {} for region in compare.VENN_REGIONS}
    for label, kind in types.items():
        total = sum(tables.get(group, {}).get(label, 0)
                    for group in ("K", "H", "T_all"))
        weights[kind][label] = total
    return weights


def _build_linkages(state: PipelineState, config: PipelineConfig):
    top_k = state.topic_sets.get("K")
    top_t = state.topic_sets.get("T_all")
    top_h = state.topic_sets.get("H")
    text_platforms = tuple(p for p in GROUP_ONE if p in config.platforms)
    term_net = linkage.build_linkage(
        state.corpus, state.keywords_by_doi, state.terms_by_event,
        platforms=text_platforms, keyword_filter=top_k, term_filter=top_t,
    )
    tag_net = linkage.build_linkage(
        state.corpus, state.keywords_by_doi, state.hashtags_by_event,
        platforms=("twitter",), keyword_filter=top_k, term_filter=top_h,
    )
    return term_net, tag_net


# ---------------------------------------------------------------------------
# Commands
# ---------------------------------------------------------------------------

def _cmd_ingest(config: PipelineConfig, out: Path) -> None:
    corpus = _load_corpus(config)
    report = coverage_report(corpus)
    _write_json(out / "coverage.json", report.to_json_dict())
    _write_text(out / "coverage.csv", report.to_csv_text())
    print(f"ingest: {len(corpus.publications)} publications, "
          f"{len(corpus.events)} unique events, "
          f"{report.grand_total_mentioned} mentioned "
          f"({round_half_away(report.grand_share_pct, 2):.2f}%)")


def _cmd_extract(config: PipelineConfig, out: Path, state: PipelineState | None = None) -> PipelineState:
    state = state or _build_state(config)
    payload = {group: dict(sorted(table.items()))
               for group, table in state.frequency_tables.items()}
    _write_json(out / "frequencies.json", payload)
    print("extract: " + ", ".join(
        f"{group}={len(table)}" for group, table in state.frequency_tables.items()))
    return state


def _cmd_topics(config: PipelineConfig, out: Path, state: PipelineState | None = None) -> PipelineState:
    state = state or _build_state(config)
    _write_text(out / "topic_sets.csv",
                topicsets.export_topic_sets_csv(state.topic_sets, state.totals))
    _write_json(out / "topic_sets.json", {
        group: dict(topic_set.members)
        for group, topic_set in state.topic_sets.items()
    })
    print("topics: " + ", ".join(
        f"{group}:{len(topic_set)}" for group, topic_set in state.topic_sets.items()))
    return state


def _cmd_compare(config: PipelineConfig, out: Path, state: PipelineState | None = None) -> None:
    if config.fixture:
        tables, sets = _fixture_state(config)
    else:
        state = state or _build_state(config)
        tables, sets = state.frequency_tables, state.topic_sets
    payload = _comparison_payload(tables, sets)
    _write_comparison(out, payload)
    venn = payload["venn"]
    print("compare: venn " + " ".join(f"{k}={venn[k]}" for k in compare.VENN_REGIONS))


def _cmd_map(config: PipelineConfig, out: Path, state: PipelineState | None = None) -> PipelineState:
    state = state or _build_state(config)
    graph = _keyword_graph(state, config)
    overlays = _term_overlays(state)
    _write_json(out / "graph.json", netmap.graph_to_json_dict(graph))
    _write_text(out / "edges.csv", netmap.edge_list_csv(graph))
    _write_text(out / "term_map.svg", _render_svg(graph))
    _write_json(out / "overlay.json", [
        {
            "label": score.label,
            "raw": dict(score.raw),
            "normalized": {s: round_half_away(v, 6) for s, v in score.normalized.items()},
            "present": dict(score.present),
        }
        for score in overlays
    ])
    clusters = max(graph.clusters.values(), default=0)
    print(f"map: {len(graph.nodes)} nodes, {len(graph.edges)} edges, {clusters} clusters")
    return state


def _cmd_linkage(config: PipelineConfig, out: Path, state: PipelineState | None = None) -> PipelineState:
    state = state or _build_state(config)
    term_net, tag_net = _build_linkages(state, config)
    for name, network in (("linkage_terms", term_net), ("linkage_hashtags", tag_net)):
        _write_json(out / f"{name}.json", linkage.to_json_dict(network))
        _write_text(out / f"{name}.dot", linkage.to_dot(network))
        if network.keyword_mentions:
            top = linkage.topk_linked(network, config.top_k, config.top_k)
            _write_json(out / f"{name}_top{config.top_k}.json", linkage.to_json_dict(top))
    print(f"linkage: terms {len(term_net.edges)} edges, "
          f"hashtags {len(tag_net.edges)} edges")
    return state


def _cmd_report(config: PipelineConfig, out: Path, state: PipelineState | None = None) -> PipelineState:
    state = state or _build_state(config)
    report = coverage_report(state.corpus)
    payload = _comparison_payload(state.frequency_tables, state.topic_sets)
    graph = _keyword_graph(state, config)
    summary = {
        "coverage": report.to_json_dict(),
        "similarity": payload["matrix"].to_json_dict(),
        "venn": payload["venn"],
        "topic_type_counts": {
            region: sum(1 for kind in payload["types"].values() if kind == region)
            for region in compare.VENN_REGIONS
        },
        "rank_shifts": _shift_rows(payload["shifts"]),
    }
    _write_json(out / "report.json", summary)
    _write_text(out / "term_map.svg", _render_svg(graph))
    _write_json(out / "wordclouds.json",
                _wordcloud_payload(state.frequency_tables, payload["types"]))
    print("report: written report.json, term_map.svg, wordclouds.json")
    return state


def run(command: str, config: PipelineConfig) -> int:
    """Execute one pipeline command; returns a process exit status."""
    if command not in COMMANDS:
        raise ConfigError(f"unknown command {command!r}")
    fixture_only = command == "compare" and bool(config.fixture)
    need_corpus = not fixture_only
    config.validate(need_corpus=need_corpus)
    out = Path(config.output_dir)
    out.mkdir(parents=True, exist_ok=True)
    if command == "ingest":
        _cmd_ingest(config, out)
    elif command == "extract":
        _cmd_extract(config, out)
    elif command == "topics":
        _cmd_topics(config, out)
    elif command == "compare":
        _cmd_compare(config, out)
    elif command == "map":
        _cmd_map(config, out)
    elif command == "linkage":
        _cmd_linkage(config, out)
    elif command == "report":
        _cmd_report(config, out)
    else:  # all
        state = _build_state(config)
        _cmd_ingest(config, out)
        _cmd_extract(config, out, state)
        _cmd_topics(config, out, state)
        _cmd_compare(config, out, state)
        _cmd_map(config, out, state)
        _cmd_linkage(config, out, state)
        _cmd_report(config, out, state)
    return EXIT_OK


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="topicshift",
        description="Quantify how academic topics shift between publications "
                    "and the online communities mentioning them.",
        formatter_class=argparse.ArgumentDefaultsHelpFormatter,
    )
    parser.add_argument("command", choices=COMMANDS, help="pipeline stage to run")
    parser.add_argument("--config", default=None,
                        help=f"JSON config file (or set ${ENV_CONFIG}); flags override it")
    parser.add_argument("--publications", default=None,
                        help="publications JSONL file [default: none]")
    parser.add_argument("--events", default=None,
                        help="events JSONL file [default: none]")
    parser.add_argument("--fixture", default=None,
                        help="topic fixture CSV for fixture-based comparison [default: none]")
    parser.add_argument("--output-dir", dest="output_dir", default=None,
                        help="artifact directory [default: out]")
    parser.add_argument("--platforms", default=None,
                        help="comma-separated platform subset [default: all five]")
    parser.add_argument("--language", default=None,
                        help="BCP-47 language filter for events [default: en]")
    parser.add_argument("--top-n", dest="top_n", type=int, default=None,
                        help="topic-set cutoff [default: 100]")
    parser.add_argument("--relevance-fraction", dest="relevance_fraction", type=float,
                        default=None, help="fraction of candidates kept [default: 0.6]")
    parser.add_argument("--min-occurrences", dest="min_occurrences", type=int, default=None,
                        help="minimum candidate document frequency [default: 2]")
    parser.add_argument("--resolution", type=float, default=None,
                        help="clustering resolution [default: 0.5]")
    parser.add_argument("--min-cluster-size", dest="min_cluster_size", type=int, default=None,
                        help="smallest allowed cluster [default: 1]")
    parser.add_argument("--no-merge-small", dest="merge_small", action="store_const",
                        const=False, default=None,
                        help="keep clusters below the size threshold [default: merge them]")
    parser.add_argument("--seed", type=int, default=None,
                        help="random seed for clustering and layout [default: 0]")
    parser.add_argument("--layout-iterations", dest="layout_iterations", type=int,
                        default=None, help="layout iteration cap [default: 1000]")
    parser.add_argument("--threads", type=int, default=None,
                        help="worker-parallelism cap for per-record stages [default: 1]")
    parser.add_argument("--top-k", dest="top_k", type=int, default=None,
                        help="top keywords/terms in linkage subnetworks [default: 5]")
    parser.add_argument("--abbreviations", default=None,
                        help="abbreviation lexicon path [default: bundled]")
    parser.add_argument("--noun-stoplist", dest="noun_stoplist", default=None,
                        help="noun stoplist path [default: bundled]")
    parser.add_argument("--tagger-lexicon", dest="tagger_lexicon", default=None,
                        help="tagger lexicon path [default: bundled]")
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        config = build_config(args)
        return run(args.command, config)
    except MissingInputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MISSING_INPUT
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
