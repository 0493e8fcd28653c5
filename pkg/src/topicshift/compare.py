"""Topic-set comparison: cosine similarity, Venn regions, provenance types,
and frequency-rank shifts between groups.

Sets are compared as binary indicator vectors over the union of their
labels, under which the cosine reduces to |A∩B| / sqrt(|A|·|B|). A
frequency-weighted variant is available behind a flag. Each label's
provenance type records which of the keyword (K), term (T), and hashtag (H)
groups contain it; the seven exclusive types partition the label union.
"""
from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass
from typing import Collection, Mapping, Sequence

from ._util import round_half_away
from .topicsets import TopicSet

VENN_REGIONS = ("KTH", "KT", "KH", "TH", "K", "T", "H")


def _labels(topic_set: TopicSet | Collection[str]) -> frozenset[str]:
    if isinstance(topic_set, TopicSet):
        return topic_set.labels
    return frozenset(topic_set)


def _frequencies(topic_set: TopicSet | Mapping[str, int]) -> Mapping[str, int]:
    if isinstance(topic_set, TopicSet):
        return topic_set.members
    return topic_set


def cosine_similarity(
    a: TopicSet | Collection[str],
    b: TopicSet | Collection[str],
    weighted: bool = False,
) -> float:
    """Cosine of two topic sets; 0.0 when either set is empty.

    Binary mode (default): |a∩b| / sqrt(|a|·|b|). Weighted mode uses the
    frequency vectors instead and requires frequency-bearing inputs.
    """
    if weighted:
        fa, fb = _frequencies(a), _frequencies(b)
        if not fa or not fb:
            return 0.0
        dot = sum(count * fb.get(label, 0) for label, count in fa.items())
        norm = math.sqrt(sum(v * v for v in fa.values())) * math.sqrt(
            sum(v * v for v in fb.values()))
        return dot / norm if norm else 0.0
    la, lb = _labels(a), _labels(b)
    if not la or not lb:
        return 0.0
    return len(la & lb) / math.sqrt(len(la) * len(lb))


@dataclass(frozen=True)
class SimilarityMatrix:
    """Symmetric pairwise cosines plus the raw intersection counts."""

    group_ids: tuple[str, ...]
    values: tuple[tuple[float, ...], ...]
    intersections: tuple[tuple[int, ...], ...]

    def value(self, a: str, b: str) -> float:
        i, j = self.group_ids.index(a), self.group_ids.index(b)
        return self.values[i][j]

    def intersection(self, a: str, b: str) -> int:
        i, j = self.group_ids.index(a), self.group_ids.index(b)
        return self.intersections[i][j]

    def to_csv_text(self, ndigits: int = 4) -> str:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(["group", *self.group_ids])
        for group_id, row in zip(self.group_ids, self.values):
            writer.writerow([group_id, *(f"{round_half_away(v, ndigits):.{ndigits}f}" for v in row)])
        return buffer.getvalue()

    def to_json_dict(self, ndigits: int = 4) -> dict:
        return {
            "group_ids": list(self.group_ids),
            "values": [[round_half_away(v, ndigits) for v in row] for row in self.values],
            "intersections": [list(row) for row in self.intersections],
        }


def pairwise_matrix(sets: Sequence[TopicSet], weighted: bool = False) -> SimilarityMatrix:
    """All pairwise similarities and intersection counts for >= 2 sets.

    Raises ValueError on fewer than two sets or duplicate group ids. The
    diagonal is 1 for nonempty sets.
    """
    if len(sets) < 2:
        raise ValueError("pairwise similarity needs at least two topic sets")
    ids = [s.group_id for s in sets]
    if len(set(ids)) != len(ids):
        raise ValueError(f"duplicate group ids in {ids}")
    values = []
    intersections = []
    for a in sets:
        row_v = []
        row_i = []
        for b in sets:
            row_i.append(len(a.labels & b.labels))
            row_v.append(cosine_similarity(a, b, weighted=weighted))
        values.append(tuple(row_v))
        intersections.append(tuple(row_i))
    return SimilarityMatrix(group_ids=tuple(ids), values=tuple(values),
                            intersections=tuple(intersections))


def classify_topics(
    k: TopicSet | Collection[str],
    t: TopicSet | Collection[str],
    h: TopicSet | Collection[str],
) -> dict[str, str]:
    """Assign each label of the union its membership pattern (KTH...H)."""
    ks, ts, hs = _labels(k), _labels(t), _labels(h)
    classified = {}
    for label in sorted(ks | ts | hs):
        pattern = "".join(code for code, group in (("K", ks), ("T", ts), ("H", hs))
                          if label in group)
        classified[label] = pattern
    return classified


def venn_partition(
    k: TopicSet | Collection[str],
    t: TopicSet | Collection[str],
    h: TopicSet | Collection[str],
) -> dict[str, int]:
    """Sizes of the seven exclusive regions of the three-set diagram.

    All seven region keys are always present; the counts sum to the size of
    the union.
    """
    counts = {region: 0 for region in VENN_REGIONS}
    for pattern in classify_topics(k, t, h).values():
        counts[pattern] += 1
    return counts


def competition_ranks(frequencies: Mapping[str, int]) -> dict[str, int]:
    """1-based ranks by descending frequency; ties share the smallest rank."""
    ordered = sorted(frequencies.values(), reverse=True)
    return {
        label: 1 + _count_greater(ordered, count)
        for label, count in frequencies.items()
    }


def _count_greater(descending: Sequence[int], value: int) -> int:
    # binary search for the first element <= value in a descending list
    lo, hi = 0, len(descending)
    while lo < hi:
        mid = (lo + hi) // 2
        if descending[mid] > value:
            lo = mid + 1
        else:
            hi = mid
    return lo


@dataclass(frozen=True)
class RankShift:
    """One common topic's per-group ranks and direction versus baseline K.

    Directions are per non-baseline group: "up" when the rank number
    strictly decreases relative to K, "down" when it increases,
    "unchanged" on equality, "absent" when the topic is missing from the
    group (or from K itself).
    """

    topic: str
    rank_in: Mapping[str, int | None]
    direction: Mapping[str, str]


def ranking_shift(
    common_topics: Collection[str],
    keyword_frequencies: Mapping[str, int],
    hashtag_frequencies: Mapping[str, int],
    term_frequencies: Mapping[str, int],
) -> list[RankShift]:
    """Rank each common topic inside the full per-group frequency tables.

    The tables should be the complete (pre-top-N) frequency tables so ranks
    reflect each group's whole vocabulary. Output is ordered by the
    baseline keyword rank.
    """
    groups = {"K": keyword_frequencies, "H": hashtag_frequencies, "T": term_frequencies}
    ranks = {name: competition_ranks(table) for name, table in groups.items()}
    shifts = []
    for topic in common_topics:
        rank_in = {name: ranks[name].get(topic) for name in groups}
        baseline = rank_in["K"]
        direction = {}
        for name in ("H", "T"):
            rank = rank_in[name]
            if rank is None or baseline is None:
                direction[name] = "absent"
            elif rank < baseline:
                direction[name] = "up"
            elif rank > baseline:
                direction[name] = "down"
            else:
                direction[name] = "unchanged"
        shifts.append(RankShift(topic=topic, rank_in=rank_in, direction=direction))
    shifts.sort(key=lambda s: (s.rank_in["K"] if s.rank_in["K"] is not None else math.inf,
                               s.topic))
    return shifts
