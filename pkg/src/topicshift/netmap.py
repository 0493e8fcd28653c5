"""Term co-occurrence networks: normalization, clustering, overlay, layout.

The graph counts, per unordered label pair, the documents containing both
labels. Counts are normalized to association strengths
s_ij = 2m * c_ij / (k_i * k_j), which equal 1 under statistical independence
and are invariant to uniform scaling of the counts.

Clustering maximizes V(partition) = sum over same-cluster pairs of
(s_ij - resolution) by iterated local moving from a singleton start; every
pair without an edge contributes -resolution, so larger resolutions produce
more, smaller clusters. The layout minimizes sum of s_ij * d_ij^2 subject
to a unit mean pairwise distance, by projected gradient descent with
backtracking, so the objective never increases across accepted steps.
"""
from __future__ import annotations

import csv
import io
import math
import random
from collections import Counter
from dataclasses import dataclass, field
from typing import Collection, Iterable, Mapping, Sequence

import numpy as np

from ._util import round_half_away

_LOCAL_MOVING_RESTARTS = 8
_LAYOUT_RESTARTS = 4
_GAIN_EPS = 1e-12


def _pair(a: str, b: str) -> tuple[str, str]:
    return (a, b) if a <= b else (b, a)


@dataclass
class TermGraph:
    """Weighted co-occurrence graph over selected terms.

    `edges` holds raw co-occurrence counts keyed by sorted label pair;
    `normalized` holds association strengths for the same pairs. After
    clustering, `clusters` maps every label to a cluster id, contiguous
    from 1 and ordered by descending cluster size.
    """

    nodes: list[tuple[str, int]]
    edges: dict[tuple[str, str], int]
    normalized: dict[tuple[str, str], float] = field(default_factory=dict)
    clusters: dict[str, int] = field(default_factory=dict)
    positions: dict[str, tuple[float, float]] | None = None

    @property
    def labels(self) -> list[str]:
        return [label for label, _ in self.nodes]

    def neighbors(self, label: str) -> dict[str, float]:
        """Association-strength row for one node."""
        row = {}
        for (a, b), strength in self.normalized.items():
            if a == label:
                row[b] = strength
            elif b == label:
                row[a] = strength
        return row


def cooccurrence_graph(
    documents: Iterable[Collection[str]],
    selected: Collection[str] | None = None,
) -> TermGraph:
    """Build the graph from per-document label sets, binary per document.

    `selected` restricts the vocabulary (e.g. to a top-N topic set); node
    totals are document frequencies.
    """
    allowed = None
    if selected is not None:
        allowed = frozenset(getattr(selected, "labels", selected))
    totals: Counter[str] = Counter()
    edges: Counter[tuple[str, str]] = Counter()
    for document in documents:
        labels = sorted(set(document))
        if allowed is not None:
            labels = [label for label in labels if label in allowed]
        totals.update(labels)
        for i, a in enumerate(labels):
            for b in labels[i + 1:]:
                edges[_pair(a, b)] += 1
    nodes = sorted(totals.items(), key=lambda item: (-item[1], item[0]))
    return TermGraph(nodes=nodes, edges=dict(edges))


def association_strength(graph: TermGraph) -> TermGraph:
    """Fill `graph.normalized` with s_ij = 2m * c_ij / (k_i * k_j).

    k_i is a node's total co-occurrence count and m the sum over all edges;
    isolated nodes simply get no entries.
    """
    degree: Counter[str] = Counter()
    total = 0
    for (a, b), count in graph.edges.items():
        degree[a] += count
        degree[b] += count
        total += count
    graph.normalized = {
        pair: 2.0 * total * count / (degree[pair[0]] * degree[pair[1]])
        for pair, count in graph.edges.items()
    }
    return graph


@dataclass(frozen=True)
class ClusterParams:
    resolution: float = 0.5
    min_cluster_size: int = 1
    merge_small: bool = True
    random_seed: int = 0

    def __post_init__(self) -> None:
        if self.resolution <= 0:
            raise ValueError("resolution must be positive")
        if self.min_cluster_size < 1:
            raise ValueError("min_cluster_size must be >= 1")


def cluster_quality(
    graph: TermGraph,
    clusters: Mapping[str, int] | None = None,
    resolution: float = 0.5,
) -> float:
    """V(partition): within-cluster strengths minus resolution per pair."""
    assignment = clusters if clusters is not None else graph.clusters
    value = 0.0
    for (a, b), strength in graph.normalized.items():
        if assignment[a] == assignment[b]:
            value += strength
    sizes = Counter(assignment.values())
    value -= resolution * sum(n * (n - 1) / 2 for n in sizes.values())
    return value


def _local_moving(
    items: Sequence[str],
    rows: Mapping[str, Mapping[str, float]],
    weights: Mapping[str, int],
    resolution: float,
    rng: random.Random,
    start: Mapping[str, int] | None = None,
) -> dict[str, int]:
    """Local moving over (possibly aggregated) nodes with a seeded visit order.

    `weights` carries how many original nodes each item stands for, so the
    resolution penalty counts original-node pairs. Repeats passes until a
    full pass moves nothing, which leaves the partition 1-move-optimal at
    this granularity.
    """
    if start is None:
        assignment = {item: i for i, item in enumerate(items)}
    else:
        assignment = dict(start)
    cluster_weight: Counter[int] = Counter()
    for item in items:
        cluster_weight[assignment[item]] += weights[item]
    order = list(items)
    free_id = max(cluster_weight, default=0) + 1
    moved = True
    while moved:
        moved = False
        rng.shuffle(order)
        for item in order:
            current = assignment[item]
            weight = weights[item]
            links: dict[int, float] = {}
            for other, strength in rows[item].items():
                cluster_id = assignment[other]
                links[cluster_id] = links.get(cluster_id, 0.0) + strength
            stay = links.get(current, 0.0) \
                - resolution * weight * (cluster_weight[current] - weight)
            best_gain = 0.0
            best_cluster = current
            for cluster_id in sorted(links):
                if cluster_id == current:
                    continue
                gain = links[cluster_id] \
                    - resolution * weight * cluster_weight[cluster_id] - stay
                if gain > best_gain + _GAIN_EPS:
                    best_gain = gain
                    best_cluster = cluster_id
            if -stay > best_gain + _GAIN_EPS:  # moving out into a fresh singleton
                best_gain = -stay
                best_cluster = free_id
            if best_cluster != current:
                if best_cluster == free_id:
                    free_id += 1
                cluster_weight[current] -= weight
                if cluster_weight[current] == 0:
                    del cluster_weight[current]
                cluster_weight[best_cluster] += weight
                assignment[item] = best_cluster
                moved = True
    return assignment


def _contract(
    assignment: Mapping[str, int],
    rows: Mapping[str, Mapping[str, float]],
    weights: Mapping[str, int],
) -> tuple[list[str], dict[str, dict[str, float]], dict[str, int], dict[str, str]]:
    """Aggregate clusters into super-nodes; within-cluster strength drops out."""
    super_of = {item: f"c{cluster_id}" for item, cluster_id in assignment.items()}
    super_weights: Counter[str] = Counter()
    for item, super_id in super_of.items():
        super_weights[super_id] += weights[item]
    super_rows: dict[str, dict[str, float]] = {sid: {} for sid in super_weights}
    for item, row in rows.items():
        a = super_of[item]
        for other, strength in row.items():
            b = super_of[other]
            if a != b:
                super_rows[a][b] = super_rows[a].get(b, 0.0) + strength
    return sorted(super_weights), super_rows, dict(super_weights), super_of


def _multilevel_moving(
    labels: Sequence[str],
    rows: Mapping[str, Mapping[str, float]],
    resolution: float,
    rng: random.Random,
) -> dict[str, int]:
    """Local moving with aggregation rounds until the quality stops improving.

    Single-node moves cannot merge two grown clusters, so after each node
    pass the clusters are contracted and moved as wholes; the final pass
    runs at node level again, keeping the result 1-move-optimal there.
    """
    weights = {label: 1 for label in labels}
    assignment = _local_moving(labels, rows, weights, resolution, rng)
    while True:
        items, super_rows, super_weights, super_of = _contract(assignment, rows, weights)
        if len(items) <= 1:
            break
        merged = _local_moving(items, super_rows, super_weights, resolution, rng)
        if len({merged[item] for item in items}) == len(items):
            break  # no super-node merge found: converged
        lifted = {label: merged[super_of[label]] for label in labels}
        assignment = _local_moving(labels, rows, weights, resolution, rng, start=lifted)
    return assignment


def _merge_small_clusters(
    assignment: dict[str, int],
    rows: Mapping[str, Mapping[str, float]],
    min_size: int,
) -> dict[str, int]:
    """Attach clusters below `min_size` where their connecting strength is largest."""
    while True:
        members: dict[int, list[str]] = {}
        for label, cluster_id in assignment.items():
            members.setdefault(cluster_id, []).append(label)
        if len(members) <= 1:
            return assignment
        small = sorted(
            (cid for cid, labs in members.items() if len(labs) < min_size),
            key=lambda cid: (len(members[cid]), min(members[cid])),
        )
        if not small:
            return assignment
        source = small[0]
        connection: dict[int, float] = {}
        for label in members[source]:
            for other, strength in rows[label].items():
                target = assignment[other]
                if target != source:
                    connection[target] = connection.get(target, 0.0) + strength
        if connection:
            target = max(sorted(connection), key=lambda cid: connection[cid])
        else:
            # no links out: fold into the largest remaining cluster
            target = max(
                (cid for cid in members if cid != source),
                key=lambda cid: (len(members[cid]), -cid),
            )
        for label in members[source]:
            assignment[label] = target


def _relabel(assignment: Mapping[str, int]) -> dict[str, int]:
    """Contiguous ids from 1, ordered by descending size then member label."""
    members: dict[int, list[str]] = {}
    for label, cluster_id in assignment.items():
        members.setdefault(cluster_id, []).append(label)
    ordered = sorted(members.items(), key=lambda item: (-len(item[1]), min(item[1])))
    mapping = {old: new for new, (old, _) in enumerate(ordered, start=1)}
    return {label: mapping[cluster_id] for label, cluster_id in assignment.items()}


def cluster(graph: TermGraph, params: ClusterParams | None = None) -> TermGraph:
    """Cluster nodes by iterated local moving; deterministic given the seed.

    Runs a handful of seeded restarts and keeps the best-quality partition;
    each run ends 1-move-optimal (no single relocation can improve V).
    Clusters below `min_cluster_size` are then merged away if requested.
    """
    params = params if params is not None else ClusterParams()
    labels = graph.labels
    if not labels:
        graph.clusters = {}
        return graph
    rows = {label: graph.neighbors(label) for label in labels}
    rng = random.Random(params.random_seed)
    best: dict[str, int] | None = None
    best_quality = -math.inf
    for _ in range(_LOCAL_MOVING_RESTARTS):
        assignment = _multilevel_moving(labels, rows, params.resolution, rng)
        quality = cluster_quality(graph, assignment, params.resolution)
        if quality > best_quality + _GAIN_EPS:
            best, best_quality = assignment, quality
    assert best is not None
    if params.merge_small and params.min_cluster_size > 1:
        best = _merge_small_clusters(best, rows, params.min_cluster_size)
    graph.clusters = _relabel(best)
    return graph


@dataclass(frozen=True)
class OverlayScore:
    """Per-source frequencies normalized by their mean across sources.

    For any label with a nonzero total, the normalized scores average to
    exactly 1, which makes sources comparable; a source where the label
    never appears has `present` False (rendered gray downstream).
    """

    label: str
    raw: Mapping[str, int]
    normalized: Mapping[str, float]
    present: Mapping[str, bool]


def overlay_scores(
    tables: Mapping[str, Mapping[str, int]],
    labels: Collection[str] | None = None,
) -> list[OverlayScore]:
    """Score labels across >= 2 per-source frequency tables.

    Raises ValueError with fewer than two sources, or when an explicitly
    requested label appears in no source (its mean would be zero).
    """
    sources = list(tables)
    if len(sources) < 2:
        raise ValueError("overlay scores need at least two sources")
    if labels is None:
        labels = sorted({label for table in tables.values() for label in table})
    scores = []
    for label in labels:
        raw = {source: int(tables[source].get(label, 0)) for source in sources}
        mean = sum(raw.values()) / len(sources)
        if mean == 0:
            raise ValueError(f"label {label!r} appears in no source")
        scores.append(OverlayScore(
            label=label,
            raw=raw,
            normalized={source: count / mean for source, count in raw.items()},
            present={source: count > 0 for source, count in raw.items()},
        ))
    return scores


def _pairwise_distances(positions: np.ndarray) -> np.ndarray:
    deltas = positions[:, None, :] - positions[None, :, :]
    return np.sqrt((deltas ** 2).sum(axis=-1))


def _normalize_positions(positions: np.ndarray) -> np.ndarray:
    """Center and rescale so the mean pairwise distance is exactly 1."""
    centered = positions - positions.mean(axis=0)
    distances = _pairwise_distances(centered)
    n = len(centered)
    mean = distances[np.triu_indices(n, k=1)].mean()
    if mean <= 0:
        # coincident points: nudge apart deterministically along x
        centered = centered + np.column_stack([np.arange(n, dtype=float),
                                               np.zeros(n)])
        centered -= centered.mean(axis=0)
        mean = _pairwise_distances(centered)[np.triu_indices(n, k=1)].mean()
    return centered / mean


def layout(
    graph: TermGraph,
    iterations: int = 1000,
    seed: int = 0,
    tol: float = 1e-6,
    objective_trace: list[float] | None = None,
) -> TermGraph:
    """Place nodes by minimizing sum s_ij * d_ij^2 at unit mean distance.

    Projected gradient descent with backtracking: a step is only accepted
    if the (re-normalized) objective does not increase, so the recorded
    trace is non-increasing. Stops on relative improvement below `tol`
    (set 0 to always run `iterations` steps) or the iteration cap.
    """
    labels = graph.labels
    n = len(labels)
    if n == 0:
        graph.positions = {}
        return graph
    if n == 1:
        graph.positions = {labels[0]: (0.0, 0.0)}
        return graph
    if n == 2:
        graph.positions = {labels[0]: (-0.5, 0.0), labels[1]: (0.5, 0.0)}
        return graph

    index = {label: i for i, label in enumerate(labels)}
    edge_i = np.array([index[a] for (a, b) in graph.normalized], dtype=int)
    edge_j = np.array([index[b] for (a, b) in graph.normalized], dtype=int)
    strengths = np.array(list(graph.normalized.values()), dtype=float)

    def objective(positions: np.ndarray) -> float:
        if len(strengths) == 0:
            return 0.0
        deltas = positions[edge_i] - positions[edge_j]
        return float((strengths * (deltas ** 2).sum(axis=1)).sum())

    def gradient(positions: np.ndarray) -> np.ndarray:
        grad = np.zeros_like(positions)
        if len(strengths) == 0:
            return grad
        deltas = positions[edge_i] - positions[edge_j]
        weighted = 2.0 * strengths[:, None] * deltas
        np.add.at(grad, edge_i, weighted)
        np.add.at(grad, edge_j, -weighted)
        return grad

    def descend(start: np.ndarray) -> tuple[np.ndarray, float, list[float]]:
        positions = _normalize_positions(start)
        current = objective(positions)
        trace = [current]
        step = 1.0 / ((1.0 + float(strengths.max())) if len(strengths) else 1.0)
        for _ in range(iterations):
            grad = gradient(positions)
            if float(np.abs(grad).max()) == 0.0:
                break
            accepted = False
            for _attempt in range(60):
                candidate = _normalize_positions(positions - step * grad)
                value = objective(candidate)
                if value <= current + 1e-15:
                    accepted = True
                    break
                step *= 0.5
            if not accepted:
                break
            improvement = current - value
            positions, current = candidate, value
            trace.append(current)
            step *= 1.2
            if tol > 0 and improvement <= tol * max(abs(current), 1e-12):
                break
        return positions, current, trace

    # start from a circle (a symmetric, non-degenerate configuration), then a
    # few seeded random starts; descent can stall in constrained stationary
    # points, so the best final objective wins
    rng = np.random.default_rng(seed)
    angles = 2.0 * np.pi * np.arange(n) / n
    starts = [np.column_stack([np.cos(angles), np.sin(angles)])]
    starts += [rng.standard_normal((n, 2)) for _ in range(_LAYOUT_RESTARTS - 1)]
    best_positions, best_value, best_trace = None, math.inf, []
    for start in starts:
        positions, value, trace = descend(start)
        if value < best_value - 1e-15:
            best_positions, best_value, best_trace = positions, value, trace
    assert best_positions is not None
    if objective_trace is not None:
        objective_trace.extend(best_trace)

    graph.positions = {label: (float(best_positions[i, 0]), float(best_positions[i, 1]))
                       for label, i in index.items()}
    return graph


def graph_to_json_dict(
    graph: TermGraph,
    overlays: Sequence[OverlayScore] | None = None,
) -> dict:
    """JSON export: nodes with cluster/position/overlay, edges with c and s."""
    overlay_by_label = {score.label: score for score in overlays or ()}
    nodes = []
    for label, total in graph.nodes:
        node: dict = {"label": label, "total": total}
        if graph.clusters:
            node["cluster"] = graph.clusters.get(label)
        if graph.positions is not None and label in graph.positions:
            x, y = graph.positions[label]
            node["position"] = [round_half_away(x, 6), round_half_away(y, 6)]
        score = overlay_by_label.get(label)
        if score is not None:
            node["overlay"] = {
                source: round_half_away(value, 6)
                for source, value in score.normalized.items()
            }
            node["present"] = dict(score.present)
        nodes.append(node)
    edges = [
        {"source": a, "target": b, "count": count,
         "strength": round_half_away(graph.normalized.get((a, b), 0.0), 6)}
        for (a, b), count in sorted(graph.edges.items())
    ]
    return {"nodes": nodes, "edges": edges}


def edge_list_csv(graph: TermGraph) -> str:
    """Generic edge-list CSV: source, target, count, strength."""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(["source", "target", "count", "strength"])
    for (a, b), count in sorted(graph.edges.items()):
        strength = graph.normalized.get((a, b))
        writer.writerow([a, b, count, "" if strength is None else f"{strength:.6f}"])
    return buffer.getvalue()
