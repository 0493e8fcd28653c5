"""Candidate-topic extraction from event text.

Two extractors live here. Noun-phrase terms come from a linguistic filter:
text is split into sentences and tokens, each token gets a part of speech
from a bundled deterministic tagger (lexicon lookup, then suffix heuristics,
default noun), and every maximal in-sentence span of adjectives/nouns that
ends with a noun becomes a candidate phrase. Candidates are then scored by
how far their second-order co-occurrence distribution diverges from the
corpus-wide distribution, and only the most distinctive fraction is kept.

Hashtags are the Twitter counterpart: '#'-initial tokens, case-folded, and
counted once per tweet.
"""
from __future__ import annotations

import math
import re
import unicodedata
from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources
from pathlib import Path
from typing import Collection, Iterable, Mapping, Sequence

NOUN = "noun"
ADJECTIVE = "adjective"
OTHER = "other"

_SENTENCE_SPLIT = re.compile(r"(?<=[.!?])[\"'”’)\]]*\s+")
_TOKEN = re.compile(r"[A-Za-z0-9]+(?:'[A-Za-z0-9]+)*")
_HASHTAG = re.compile(r"(?:^|(?<=\s))#([A-Za-z0-9_]+)")

_ADJECTIVE_SUFFIXES = ("al", "ive", "ous")


def _read_wordlist(path: str | Path | None, default_name: str) -> list[str]:
    if path is None:
        text = resources.files("topicshift.data").joinpath(default_name).read_text("utf-8")
    else:
        text = Path(path).read_text("utf-8")
    entries = []
    for line in text.splitlines():
        line = line.strip()
        if line and not line.startswith("#"):
            entries.append(line)
    return entries


@lru_cache(maxsize=None)
def default_noun_stoplist() -> frozenset[str]:
    return frozenset(_read_wordlist(None, "noun_stoplist.txt"))


def load_noun_stoplist(path: str | Path) -> frozenset[str]:
    return frozenset(_read_wordlist(path, "noun_stoplist.txt"))


@dataclass(frozen=True)
class TaggedToken:
    surface: str
    lemma: str
    pos: str


class Tagger:
    """Deterministic POS tagger: lexicon lookup, then suffix heuristics.

    Heuristics for unknown tokens: '-ing' is a noun only after a noun
    (gerund-noun compounds like "data mining"), '-al'/'-ive'/'-ous' are
    adjectives, '-ly' is neither, tokens containing digits act as nouns,
    anything else defaults to noun.
    """

    def __init__(self, lexicon: Mapping[str, str]):
        self.lexicon = dict(lexicon)

    @classmethod
    def from_file(cls, path: str | Path | None = None) -> "Tagger":
        """Load a "word<TAB>pos" lexicon; None loads the bundled one."""
        lexicon = {}
        for line in _read_wordlist(path, "tagger_lexicon.txt"):
            word, _, pos = line.partition("\t")
            if pos not in (NOUN, ADJECTIVE, OTHER):
                raise ValueError(f"bad POS {pos!r} for lexicon word {word!r}")
            lexicon[word.strip().casefold()] = pos
        return cls(lexicon)

    def tag_word(self, lemma: str, previous_pos: str | None = None) -> str:
        pos = self.lexicon.get(lemma)
        if pos is not None:
            return pos
        if any(ch.isdigit() for ch in lemma):
            return NOUN
        if lemma.endswith("ing"):
            return NOUN if previous_pos == NOUN else OTHER
        if lemma.endswith(_ADJECTIVE_SUFFIXES):
            return ADJECTIVE
        if lemma.endswith("ly"):
            return OTHER
        return NOUN


@lru_cache(maxsize=None)
def default_tagger() -> Tagger:
    return Tagger.from_file(None)


def tokenize(text: str, tagger: Tagger | None = None) -> list[list[TaggedToken]]:
    """Split text into sentences of tagged tokens.

    Sentences split after terminal punctuation followed by whitespace, so
    dotted tokens like version numbers stay intact. Text is NFC-normalized
    first; lemmas are case-folded surfaces.
    """
    if not text or not text.strip():
        return []
    tagger = tagger if tagger is not None else default_tagger()
    text = unicodedata.normalize("NFC", text).replace("’", "'")
    sentences: list[list[TaggedToken]] = []
    for chunk in _SENTENCE_SPLIT.split(text):
        words = _TOKEN.findall(chunk)
        if not words:
            continue
        tokens: list[TaggedToken] = []
        previous: str | None = None
        for word in words:
            lemma = word.casefold()
            pos = tagger.tag_word(lemma, previous)
            tokens.append(TaggedToken(surface=word, lemma=lemma, pos=pos))
            previous = pos
        sentences.append(tokens)
    return sentences


def first_sentence(text: str) -> str:
    """Cut a summary at the first terminal mark outside parentheses/quotes.

    Returns the input unchanged when no such mark exists (already-truncated
    summaries pass through).
    """
    depth = 0
    in_quote = False
    for index, char in enumerate(text):
        if char in "([{":
            depth += 1
        elif char in ")]}":
            depth = max(0, depth - 1)
        elif char == '"':
            in_quote = not in_quote
        elif char in ".!?" and depth == 0 and not in_quote:
            return text[: index + 1]
    return text


def extract_candidate_phrases(
    sentences: Sequence[Sequence[TaggedToken]],
    noun_stoplist: Collection[str] | None = None,
) -> list[tuple[TaggedToken, ...]]:
    """Return maximal adjective/noun spans that end with a noun.

    Spans never cross sentence boundaries. A single-token span whose lemma
    sits on the noun stoplist is discarded; multi-word phrases are kept as
    wholes, never re-counted as sub-spans.
    """
    stoplist = default_noun_stoplist() if noun_stoplist is None else noun_stoplist
    phrases: list[tuple[TaggedToken, ...]] = []
    for sentence in sentences:
        run: list[TaggedToken] = []
        for token in list(sentence) + [TaggedToken("", "", OTHER)]:  # sentinel flush
            if token.pos in (NOUN, ADJECTIVE):
                run.append(token)
                continue
            if run:
                last_noun = max(
                    (i for i, t in enumerate(run) if t.pos == NOUN), default=-1
                )
                if last_noun >= 0:
                    span = tuple(run[: last_noun + 1])
                    if not (len(span) == 1 and span[0].lemma in stoplist):
                        phrases.append(span)
                run = []
    return phrases


def phrase_label(span: Sequence[TaggedToken]) -> str:
    return " ".join(token.lemma for token in span)


def count_occurrences(phrases_per_document: Iterable[Iterable[str]]) -> dict[str, int]:
    """Count, per label, the number of distinct documents containing it.

    Counting is binary per document: three occurrences inside one title
    still count once. This is the convention under which occurrence counts
    divided by document totals give per-document shares.
    """
    counts: Counter[str] = Counter()
    for labels in phrases_per_document:
        counts.update(set(labels))
    return dict(counts)


@dataclass
class CandidateTerm:
    """A candidate topic with its second-order co-occurrence profile."""

    label: str
    doc_frequency: int
    cooccurrence_row: dict[str, int] = field(default_factory=dict)
    relevance: float = 0.0


def build_candidates(documents: Iterable[Collection[str]]) -> list[CandidateTerm]:
    """Build candidates with document frequencies and second-order rows.

    Direct co-occurrence counts the documents containing both labels; the
    second-order count between t and u sums direct counts over shared
    neighbours, which smooths sparsity before relevance scoring.
    """
    doc_sets = [sorted(set(doc)) for doc in documents]
    doc_freq: Counter[str] = Counter()
    direct: dict[str, Counter[str]] = {}
    for doc in doc_sets:
        doc_freq.update(doc)
        for i, a in enumerate(doc):
            for b in doc[i + 1:]:
                direct.setdefault(a, Counter())[b] += 1
                direct.setdefault(b, Counter())[a] += 1
    vocabulary = sorted(doc_freq)
    candidates = []
    for label in vocabulary:
        row: dict[str, int] = {}
        neighbours = direct.get(label, Counter())
        for other in vocabulary:
            if other == label:
                continue
            second = 0
            other_neighbours = direct.get(other, Counter())
            for via, count in neighbours.items():
                second += count * other_neighbours.get(via, 0)
            if second:
                row[other] = second
        candidates.append(CandidateTerm(label=label, doc_frequency=doc_freq[label],
                                        cooccurrence_row=row))
    return candidates


def _smoothed(distribution: Mapping[str, float], vocabulary: Sequence[str]) -> dict[str, float]:
    """Add-one smoothing applied to the normalized distribution.

    Smoothing after normalization keeps relevance values invariant under
    uniform scaling of all co-occurrence counts.
    """
    total = sum(distribution.values())
    size = len(vocabulary)
    if total <= 0:
        return {term: 1.0 / size for term in vocabulary}
    return {
        term: (distribution.get(term, 0.0) / total + 1.0) / (size + 1.0)
        for term in vocabulary
    }


def relevance_score(
    candidates: Sequence[CandidateTerm],
    relevance_fraction: float = 0.6,
    min_occurrences: int = 2,
) -> list[CandidateTerm]:
    """Fill relevance on every candidate and return the retained subset.

    Relevance is the Kullback-Leibler divergence from a term's smoothed
    second-order co-occurrence distribution to the corpus-wide one; generic
    terms that co-occur like the corpus average score near zero. Of the
    candidates meeting `min_occurrences`, the top `relevance_fraction`
    (rounded up, at least one) survive; ties break lexicographically.
    """
    if not candidates:
        return []
    vocabulary = sorted(c.label for c in candidates)
    if len(vocabulary) == 1:
        for candidate in candidates:
            candidate.relevance = 0.0
        return [c for c in candidates if c.doc_frequency >= min_occurrences] or list(candidates)

    corpus_counts: Counter[str] = Counter()
    for candidate in candidates:
        corpus_counts.update(candidate.cooccurrence_row)
    corpus_dist = _smoothed(corpus_counts, vocabulary)

    for candidate in candidates:
        term_dist = _smoothed(candidate.cooccurrence_row, vocabulary)
        candidate.relevance = sum(
            p * math.log(p / corpus_dist[term])
            for term, p in term_dist.items()
        )

    eligible = [c for c in candidates if c.doc_frequency >= min_occurrences]
    if not eligible:
        return []
    keep = max(1, math.ceil(relevance_fraction * len(eligible)))
    return sorted(eligible, key=lambda c: (-c.relevance, c.label))[:keep]


@dataclass(frozen=True)
class Hashtag:
    """A case-folded tag with its preferred display casing and frequency."""

    canonical: str
    display: str
    frequency: int


def extract_hashtags(text: str) -> list[Hashtag]:
    """Pull '#'-initial tokens from one tweet, once per canonical tag.

    A tag is a token-initial '#' followed by at least one alphanumeric or
    underscore character; the canonical form is case-folded. Repeats of the
    same canonical tag within the tweet collapse to the first occurrence.
    """
    seen: dict[str, str] = {}
    for match in _HASHTAG.finditer(text):
        surface = match.group(1)
        canonical = surface.casefold()
        seen.setdefault(canonical, surface)
    return [Hashtag(canonical=c, display=s, frequency=1) for c, s in seen.items()]


def count_hashtags(tweets: Iterable[str]) -> dict[str, Hashtag]:
    """Aggregate hashtags across tweets, counting once per tweet per tag.

    The display form is the most frequent original casing, ties broken by
    the lexicographically smallest. Returned in descending frequency order.
    """
    frequency: Counter[str] = Counter()
    casings: dict[str, Counter[str]] = {}
    for tweet in tweets:
        for tag in extract_hashtags(tweet):
            frequency[tag.canonical] += 1
            casings.setdefault(tag.canonical, Counter())[tag.display] += 1
    result: dict[str, Hashtag] = {}
    for canonical in sorted(frequency, key=lambda c: (-frequency[c], c)):
        forms = casings[canonical]
        display = min(forms, key=lambda form: (-forms[form], form))
        result[canonical] = Hashtag(canonical=canonical, display=display,
                                    frequency=frequency[canonical])
    return result
