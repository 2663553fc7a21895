"""General search over pre-authored visualizations: keyword (exploratory)
retrieval, design search keyed on chart-type mentions, and the facet
summaries/filters behind the scented widgets."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from datetime import date
from importlib import resources
from pathlib import Path

from .analysis import TokenSet, encode, word_tokens
from .corpus import VizDocument
from .errors import SchemaError
from .index import (FUZZY_MAX_DISTANCE, RankedEntry, RankedResults, SearchIndex,
                    rank, retrieve)
from .similarity import within_distance

DEFAULT_LIMIT = 50
REQUIRED_CHART_TYPES = {"bar", "line", "scatterplot", "map", "treemap", "heatmap", "pie"}


class ChartTypeLexicon:
    """Chart-type vocabulary: id -> trigger concepts (synonyms, phrasings, and
    analytical terms that allude to the type)."""

    def __init__(self, entries: dict[str, dict]):
        missing = REQUIRED_CHART_TYPES - set(entries)
        if missing:
            raise SchemaError(f"chart-type lexicon missing required ids: {sorted(missing)}")
        self.entries: dict[str, dict] = {}
        for type_id, entry in entries.items():
            concepts = [c.lower() for c in entry.get("concepts", ())]
            if not concepts:
                raise SchemaError(f"chart type {type_id!r} has no concepts")
            self.entries[type_id] = {"label": entry.get("label", type_id.title()),
                                     "concepts": concepts}

    def ids(self) -> set[str]:
        return set(self.entries)

    def concepts(self, type_id: str) -> list[str]:
        return self.entries[type_id]["concepts"]

    def all_concepts(self) -> set[str]:
        out = set()
        for entry in self.entries.values():
            out.update(entry["concepts"])
        return out


def load_chart_lexicon(path: str | Path | None = None) -> ChartTypeLexicon:
    if path is not None:
        return ChartTypeLexicon(json.loads(Path(path).read_text()))
    raw = resources.files("hybridsearch.data").joinpath("chart_types.json").read_text()
    return ChartTypeLexicon(json.loads(raw))


@dataclass
class FacetSummary:
    author_counts: dict[str, int] = field(default_factory=dict)
    chart_type_counts: dict[str, int] = field(default_factory=dict)
    date_histogram: dict[str, int] = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {"authorCounts": dict(sorted(self.author_counts.items())),
                "chartTypeCounts": dict(sorted(self.chart_type_counts.items())),
                "dateHistogram": dict(sorted(self.date_histogram.items()))}


@dataclass
class FacetState:
    selected_authors: set[str] = field(default_factory=set)
    selected_chart_types: set[str] = field(default_factory=set)
    date_range: tuple[date | None, date | None] | None = None

    def is_empty(self) -> bool:
        return (not self.selected_authors and not self.selected_chart_types
                and self.date_range is None)


def exploratory_search(query: str, viz_index: SearchIndex,
                       limit: int = DEFAULT_LIMIT) -> RankedResults:
    """encode -> retrieve -> rank over the visualization index, truncated."""
    tokens = encode(query, viz_index.settings)
    if viz_index.doc_cnt == 0 or not tokens.counts:
        return RankedResults()
    candidates = retrieve(viz_index, tokens, viz_index.doc_cnt)
    ranked = rank(viz_index, tokens, candidates)
    return RankedResults(entries=ranked.entries[:limit])


def detect_chart_types(tokens: TokenSet, lexicon: ChartTypeLexicon) -> set[str]:
    """Chart types whose concept terms match any query n-gram (exact or fuzzy)."""
    detected = set()
    ngrams = list(tokens.counts)
    for type_id, entry in lexicon.entries.items():
        for concept in entry["concepts"]:
            for g in ngrams:
                if g == concept or within_distance(g, concept, FUZZY_MAX_DISTANCE):
                    detected.add(type_id)
                    break
            if type_id in detected:
                break
    return detected


def _trigger_spans(words: list[str], lexicon: ChartTypeLexicon,
                   detected: set[str]) -> set[int]:
    """Word positions covered by a chart-type trigger (to subtract from the
    content tokens)."""
    triggers = set()
    for type_id in detected:
        triggers.update(lexicon.concepts(type_id))
    covered: set[int] = set()
    n = len(words)
    for i in range(n):
        for j in range(i + 1, min(n, i + 3) + 1):
            text = " ".join(words[i:j])
            if any(text == t or within_distance(text, t, FUZZY_MAX_DISTANCE)
                   for t in triggers):
                covered.update(range(i, j))
    return covered


def design_search(query: str, viz_index: SearchIndex, lexicon: ChartTypeLexicon,
                  limit: int = DEFAULT_LIMIT, strict: bool = False) -> RankedResults:
    """Exploratory search biased toward the chart types the query names.

    Docs whose chartTypes intersect the detected set are boosted above every
    non-matching doc (a constant added on top of the content score keeps raw
    scores non-increasing); the remaining tokens drive content relevance.
    With ``strict`` only matching docs are returned. An empty detected set
    degrades to plain exploratory search.
    """
    tokens = encode(query, viz_index.settings)
    detected = detect_chart_types(tokens, lexicon)
    if not detected:
        return exploratory_search(query, viz_index, limit)

    words = word_tokens(query)
    covered = _trigger_spans(words, lexicon, detected)
    content_words = [w for i, w in enumerate(words) if i not in covered]
    content_tokens = encode(" ".join(content_words), viz_index.settings)

    def doc_chart_types(doc_id: str) -> set[str]:
        stored = viz_index.stored.get(doc_id, {})
        return set(str(stored.get("chart_types", "")).split())

    candidates = set()
    if tokens.counts:
        candidates.update(retrieve(viz_index, tokens, viz_index.doc_cnt))
    type_matched = {doc_id for doc_id in viz_index.docs
                    if doc_chart_types(doc_id) & detected}
    candidates.update(type_matched)
    if strict:
        candidates &= type_matched
    if not candidates:
        return RankedResults()

    content_ranked = {e.doc_id: e.raw_score
                      for e in rank(viz_index, content_tokens, sorted(candidates))}
    boost = max(content_ranked.values(), default=0.0) + 1.0
    scored = [(doc_id,
               content_ranked.get(doc_id, 0.0) + (boost if doc_id in type_matched else 0.0))
              for doc_id in sorted(candidates)]
    scored.sort(key=lambda kv: (-kv[1], kv[0]))
    scored = scored[:limit]
    top = scored[0][1] if scored else 0.0
    return RankedResults(entries=[
        RankedEntry(doc_id, raw, raw / top if top > 0 else 0.0)
        for doc_id, raw in scored])


def month_bucket(d: date) -> str:
    return f"{d.year}-{d.month:02d}"


def compute_facets(results: list[VizDocument]) -> FacetSummary:
    """Counts over exactly the given results. Author and month are single
    valued per doc (counts sum to the result size); chart types are
    multi-valued."""
    summary = FacetSummary()
    for doc in results:
        summary.author_counts[doc.author_name] = \
            summary.author_counts.get(doc.author_name, 0) + 1
        summary.date_histogram[month_bucket(doc.created_date)] = \
            summary.date_histogram.get(month_bucket(doc.created_date), 0) + 1
        for chart_type in doc.chart_types:
            summary.chart_type_counts[chart_type] = \
                summary.chart_type_counts.get(chart_type, 0) + 1
    return summary


def apply_facets(results: RankedResults, docs_by_id: dict[str, VizDocument],
                 state: FacetState) -> RankedResults:
    """Conjunction across facet kinds, disjunction within one; preserves the
    incoming order and scores. Unknown ids are dropped."""
    if state.is_empty():
        return RankedResults(entries=[e for e in results.entries if e.doc_id in docs_by_id])
    kept = []
    for entry in results.entries:
        doc = docs_by_id.get(entry.doc_id)
        if doc is None:
            continue
        if state.selected_authors and doc.author_name not in state.selected_authors:
            continue
        if state.selected_chart_types and not (
                set(doc.chart_types) & state.selected_chart_types):
            continue
        if state.date_range is not None:
            start, end = state.date_range
            if start is not None and doc.created_date < start:
                continue
            if end is not None and doc.created_date > end:
                continue
        kept.append(entry)
    return RankedResults(entries=kept)
