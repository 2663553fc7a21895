"""Inverted index with BM25 ranking over token-set document vectors.

One index is built per repository (data sources; visualizations). Retrieval
returns token-overlap candidates; ranking sorts them by BM25 with scores
normalized against the best hit. Query-side unigrams match fuzzily (normalized
edit distance <= 0.2) to absorb typos; higher-order n-grams match exactly.

A built index is immutable: readers never see partial state, and a rebuild
swaps in a whole new object.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable

from .analysis import AnalyzerSettings, TokenSet, encode
from .errors import IndexBuildError, MissingIndexError
from .similarity import within_distance

FORMAT_VERSION = 1
FUZZY_MAX_DISTANCE = 0.2

__all__ = [
    "Bm25Params", "SearchIndex", "RankedEntry", "RankedResults",
    "build_index", "idf", "bm25_score", "retrieve", "rank",
    "save_index", "load_index", "FUZZY_MAX_DISTANCE",
]


@dataclass(frozen=True)
class Bm25Params:
    k1: float = 1.2
    b: float = 0.75

    def __post_init__(self):
        if not 1.2 <= self.k1 <= 2.0:
            raise ValueError(f"k1 must be in [1.2, 2.0], got {self.k1}")
        if not 0.0 <= self.b <= 1.0:
            raise ValueError(f"b must be in [0, 1], got {self.b}")

    def to_dict(self) -> dict:
        return {"k1": self.k1, "b": self.b}


@dataclass(frozen=True)
class RankedEntry:
    doc_id: str
    raw_score: float
    norm_score: float


@dataclass
class RankedResults:
    entries: list[RankedEntry] = field(default_factory=list)

    def ids(self) -> list[str]:
        return [e.doc_id for e in self.entries]

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)


class SearchIndex:
    def __init__(self, params: Bm25Params, settings: AnalyzerSettings):
        self.params = params
        self.settings = settings
        self.docs: dict[str, TokenSet] = {}
        self.stored: dict[str, dict] = {}
        self.postings: dict[str, list[tuple[str, int]]] = {}
        self.doc_len: dict[str, int] = {}
        self.avgdl: float = 0.0
        self.doc_cnt: int = 0
        self._vocab_by_len: dict[int, list[str]] = {}
        self._fuzzy_cache: dict[str, tuple[str, ...]] = {}

    def _finalize(self) -> None:
        self.doc_cnt = len(self.docs)
        total = sum(self.doc_len.values())
        self.avgdl = total / self.doc_cnt if self.doc_cnt else 0.0
        self.postings = {}
        for doc_id in sorted(self.docs):
            for token, count in self.docs[doc_id].counts.items():
                self.postings.setdefault(token, []).append((doc_id, count))
        self._vocab_by_len = {}
        for term in sorted(t for t in self.postings if " " not in t):
            self._vocab_by_len.setdefault(len(term), []).append(term)
        self._fuzzy_cache = {}

    def fuzzy_terms(self, token: str) -> tuple[str, ...]:
        """Indexed unigrams within the fuzzy distance of ``token`` (exact
        included). Only length buckets that can satisfy the normalized
        distance bound are scanned."""
        cached = self._fuzzy_cache.get(token)
        if cached is None:
            n = len(token)
            low = max(1, int(n * (1.0 - FUZZY_MAX_DISTANCE)))
            high = int(n / (1.0 - FUZZY_MAX_DISTANCE)) + 1
            found = []
            for length in range(low, high + 1):
                for term in self._vocab_by_len.get(length, ()):
                    if within_distance(token, term, FUZZY_MAX_DISTANCE):
                        found.append(term)
            cached = tuple(sorted(found))
            self._fuzzy_cache[token] = cached
        return cached

    def matched_terms(self, token: str) -> tuple[str, ...]:
        """Index terms a query token matches: fuzzy for unigrams, exact for phrases."""
        if " " in token:
            return (token,) if token in self.postings else ()
        return self.fuzzy_terms(token)


def build_index(documents: Iterable[tuple[str, dict[str, str]]],
                params: Bm25Params | None = None,
                settings: AnalyzerSettings | None = None,
                synonyms: dict[str, list[str]] | None = None) -> SearchIndex:
    """Index (id, {field: text}) documents.

    Fields are encoded separately so n-grams never cross field boundaries;
    the original field texts stay retrievable via ``index.stored``.
    """
    params = params or Bm25Params()
    settings = settings or AnalyzerSettings()
    idx = SearchIndex(params, settings)
    for doc_id, fields in documents:
        if doc_id in idx.docs:
            raise IndexBuildError(f"duplicate document id {doc_id!r}")
        tokens = TokenSet()
        for _, text in sorted(fields.items()):
            tokens.merge(encode(text, settings, synonyms))
        idx.docs[doc_id] = tokens
        idx.stored[doc_id] = dict(fields)
        idx.doc_len[doc_id] = tokens.length
    idx._finalize()
    return idx


def idf(doc_cnt: int, df: int) -> float:
    """Inverse document frequency: ln(1 + (doc_cnt - df + 0.5) / (df + 0.5))."""
    if df < 0 or df > doc_cnt:
        raise ValueError(f"df must be in [0, doc_cnt]; got df={df}, doc_cnt={doc_cnt}")
    return math.log(1.0 + (doc_cnt - df + 0.5) / (df + 0.5))


def _as_tokens(query_tokens: TokenSet | Iterable[str]) -> list[str]:
    if isinstance(query_tokens, TokenSet):
        return query_tokens.distinct()
    return sorted(set(query_tokens))


def _prepare(index: SearchIndex, query_tokens: TokenSet | Iterable[str]):
    """Per distinct query token (sorted for reproducible float summation):
    document frequencies over the matched term set and the resulting IDF."""
    prepared = []
    for token in _as_tokens(query_tokens):
        terms = index.matched_terms(token)
        if not terms:
            continue
        freq: dict[str, int] = {}
        for term in terms:
            for doc_id, count in index.postings[term]:
                freq[doc_id] = freq.get(doc_id, 0) + count
        prepared.append((token, idf(index.doc_cnt, len(freq)), freq))
    return prepared


def _score(index: SearchIndex, prepared, doc_id: str) -> float:
    k1, b = index.params.k1, index.params.b
    dl = index.doc_len[doc_id]
    score = 0.0
    for _, token_idf, freq in prepared:
        f = freq.get(doc_id, 0)
        if f == 0:
            continue
        score += token_idf * (f * (k1 + 1.0)) / (f + k1 * (1.0 - b + b * dl / index.avgdl))
    return score


def bm25_score(index: SearchIndex, query_tokens: TokenSet | Iterable[str],
               doc_id: str) -> float:
    """BM25 score of one document; sums over distinct query tokens."""
    if doc_id not in index.docs:
        raise LookupError(f"unknown document id {doc_id!r}")
    return _score(index, _prepare(index, query_tokens), doc_id)


def retrieve(index: SearchIndex, query_tokens: TokenSet | Iterable[str],
             r: int) -> list[str]:
    """Up to ``r`` candidate ids with nonzero token overlap, best overlap first.

    Overlap counts distinct query tokens matched (fuzzy unigram matches count);
    ties break toward ascending doc id.
    """
    if r <= 0:
        raise ValueError("r must be a positive integer")
    overlap: dict[str, int] = {}
    for token in _as_tokens(query_tokens):
        matched_docs = set()
        for term in index.matched_terms(token):
            matched_docs.update(doc_id for doc_id, _ in index.postings[term])
        for doc_id in matched_docs:
            overlap[doc_id] = overlap.get(doc_id, 0) + 1
    ordered = sorted(overlap.items(), key=lambda kv: (-kv[1], kv[0]))
    return [doc_id for doc_id, _ in ordered[:r]]


def rank(index: SearchIndex, query_tokens: TokenSet | Iterable[str],
         candidates: Iterable[str]) -> RankedResults:
    """Sort candidates by descending BM25 (ties ascending id) and normalize
    scores against the best hit."""
    prepared = _prepare(index, query_tokens)
    scored = [(doc_id, _score(index, prepared, doc_id)) for doc_id in candidates]
    scored.sort(key=lambda kv: (-kv[1], kv[0]))
    top = scored[0][1] if scored else 0.0
    entries = [RankedEntry(doc_id, raw, raw / top if top > 0 else 0.0)
               for doc_id, raw in scored]
    return RankedResults(entries=entries)


def search(index: SearchIndex, query_tokens: TokenSet | Iterable[str],
           r: int | None = None) -> RankedResults:
    """retrieve + rank in one step; r defaults to the full corpus."""
    if index.doc_cnt == 0:
        return RankedResults()
    return rank(index, query_tokens,
                retrieve(index, query_tokens, r or index.doc_cnt))


def save_index(index: SearchIndex, path: str | Path) -> None:
    """Persist as deterministic JSON (postings are rebuilt on load, which keeps
    them consistent with the stored token sets by construction)."""
    payload = {
        "format_version": FORMAT_VERSION,
        "params": index.params.to_dict(),
        "settings": index.settings.to_dict(),
        "docs": {
            doc_id: {
                "tokens": dict(sorted(tokens.counts.items())),
                "length": tokens.length,
                "stored": index.stored[doc_id],
            }
            for doc_id, tokens in sorted(index.docs.items())
        },
    }
    Path(path).write_text(json.dumps(payload, sort_keys=True, separators=(",", ":")))


def load_index(path: str | Path) -> SearchIndex:
    path = Path(path)
    if not path.exists():
        raise MissingIndexError(
            f"index file {path} not found; run the 'index' command first")
    payload = json.loads(path.read_text())
    version = payload.get("format_version")
    if version != FORMAT_VERSION:
        raise MissingIndexError(
            f"index file {path} has format_version {version!r}, expected {FORMAT_VERSION}")
    idx = SearchIndex(Bm25Params(**payload["params"]),
                      AnalyzerSettings.from_dict(payload["settings"]))
    from collections import Counter
    for doc_id, record in payload["docs"].items():
        idx.docs[doc_id] = TokenSet(counts=Counter(record["tokens"]),
                                    length=int(record["length"]))
        idx.stored[doc_id] = record["stored"]
        idx.doc_len[doc_id] = int(record["length"])
    idx._finalize()
    return idx
