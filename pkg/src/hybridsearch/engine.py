"""End-to-end orchestration: corpora in, hybrid results out.

One engine instance owns the loaded corpora, both search indices, and the
lexicons. Indices are immutable once built; every request works against that
snapshot, so concurrent reads need no locking.
"""

from __future__ import annotations

import hashlib
import json
import logging
import time
from dataclasses import dataclass, field
from pathlib import Path

from . import classifier, parser, qa, vizsearch
from .analysis import AnalyzerSettings
from .classifier import SearchPlan, build_datasource_index
from .config import EngineConfig
from .corpus import (DataSource, VizDocument, enrich_source, load_data_source,
                     load_gazetteer, load_lexicon, load_viz_corpus)
from .errors import EncodingError, ExecutionError, IngestionError, SpecUnresolvable
from .index import SearchIndex, build_index, load_index, save_index
from .qa import ChartSpec, HttpSummaryClient, SummaryResult
from .vizsearch import FacetState, FacetSummary

logger = logging.getLogger(__name__)

SUGGESTIONS_PER_SOURCE = 5

DS_INDEX_FILE = "ds_index.json"
VIZ_INDEX_FILE = "viz_index.json"
MANIFEST_FILE = "manifest.json"


@dataclass
class QaResult:
    source_id: str
    source_name: str
    chart: ChartSpec | None = None
    summary: SummaryResult | None = None
    suggestions: list[str] | None = None
    source_ranking: list[dict] = field(default_factory=list)
    error: str | None = None

    def to_dict(self) -> dict:
        out: dict = {
            "sourceId": self.source_id,
            "sourceName": self.source_name,
            "sourceRanking": self.source_ranking,
        }
        if self.chart is not None:
            out["chartSpec"] = self.chart.to_dict()
        if self.summary is not None:
            out["summaryText"] = self.summary.text
            if self.summary.warning:
                out["summaryWarning"] = self.summary.warning
        if self.suggestions is not None:
            out["suggestions"] = self.suggestions
        if self.error:
            out["error"] = self.error
        return out


@dataclass
class GeneralResult:
    hits: list[dict] = field(default_factory=list)
    facets: FacetSummary = field(default_factory=FacetSummary)

    def to_dict(self) -> dict:
        return {"results": self.hits, "facets": self.facets.to_dict()}


@dataclass
class HybridResult:
    plan: SearchPlan
    general: GeneralResult
    qa: QaResult | None = None
    timings: dict[str, float] = field(default_factory=dict)

    def to_dict(self) -> dict:
        out = {
            "plan": self.plan.to_dict(),
            "general": self.general.to_dict(),
            "timings": {k: round(v, 3) for k, v in self.timings.items()},
        }
        if self.qa is not None:
            out["qa"] = self.qa.to_dict()
        return out


def _sha256(path: Path) -> str:
    return hashlib.sha256(path.read_bytes()).hexdigest()


def viz_index_document(doc: VizDocument) -> tuple[str, dict[str, str]]:
    return doc.id, {
        "title": doc.title,
        "caption": doc.caption,
        "tags": ", ".join(doc.tags),
        "description": doc.description,
        "author": doc.author_name,
        "chart_types": " ".join(doc.chart_types),
        "mark_types": " ".join(doc.mark_types),
    }


class SearchEngine:
    def __init__(self, config: EngineConfig, sources: list[DataSource],
                 ds_index: SearchIndex, viz_docs: list[VizDocument],
                 viz_index: SearchIndex):
        self.config = config
        self.sources = sources
        self.sources_by_id = {s.id: s for s in sources}
        self.ds_index = ds_index
        self.viz_docs = viz_docs
        self.viz_by_id = {d.id: d for d in viz_docs}
        self.viz_index = viz_index
        self.lexicon = load_lexicon()
        self.gazetteer = load_gazetteer()
        self.grammar = parser.load_grammar()
        self.chart_lexicon = vizsearch.load_chart_lexicon()
        self.summary_client = None
        if config.summary.enabled and config.summary.endpoint:
            self.summary_client = HttpSummaryClient(
                config.summary.endpoint, config.summary.api_key(),
                config.summary.timeout)

    # -- construction -------------------------------------------------------

    @staticmethod
    def _load_corpora(config: EngineConfig):
        lexicon = load_lexicon()
        gazetteer = load_gazetteer()
        chart_lexicon = vizsearch.load_chart_lexicon()
        sources_dir = config.sources_dir
        if not sources_dir.is_dir():
            raise IngestionError(f"sources directory not found: {sources_dir}")
        sources = []
        for csv_path in sorted(sources_dir.glob("*.csv")):
            meta_path = csv_path.with_suffix(".json")
            if not meta_path.exists():
                raise IngestionError(f"missing metadata file for {csv_path}")
            source = load_data_source(csv_path, meta_path, gazetteer)
            sources.append(enrich_source(source, lexicon))
        if not config.viz_corpus.exists():
            raise IngestionError(f"viz corpus not found: {config.viz_corpus}")
        viz_docs = load_viz_corpus(config.viz_corpus, chart_lexicon.ids())
        return sources, viz_docs

    @classmethod
    def build(cls, config: EngineConfig) -> "SearchEngine":
        """Load corpora and build both indices in memory."""
        sources, viz_docs = cls._load_corpora(config)
        lexicon = load_lexicon()
        ds_index = build_datasource_index(sources, config.bm25, lexicon)
        settings = AnalyzerSettings(max_ngram=config.max_ngram, expand_synonyms=True)
        viz_index = build_index([viz_index_document(d) for d in viz_docs],
                                config.bm25, settings, lexicon.synonyms)
        return cls(config, sources, ds_index, viz_docs, viz_index)

    def save_indices(self, index_dir: Path | None = None) -> Path:
        index_dir = Path(index_dir or self.config.index_dir)
        index_dir.mkdir(parents=True, exist_ok=True)
        save_index(self.ds_index, index_dir / DS_INDEX_FILE)
        save_index(self.viz_index, index_dir / VIZ_INDEX_FILE)
        manifest = {
            "format_version": 1,
            "docCounts": {"datasources": self.ds_index.doc_cnt,
                          "visualizations": self.viz_index.doc_cnt},
            "checksums": {DS_INDEX_FILE: _sha256(index_dir / DS_INDEX_FILE),
                          VIZ_INDEX_FILE: _sha256(index_dir / VIZ_INDEX_FILE)},
            "configHash": self.config.behavior_hash(),
        }
        (index_dir / MANIFEST_FILE).write_text(
            json.dumps(manifest, sort_keys=True, indent=2) + "\n")
        return index_dir

    @classmethod
    def load(cls, config: EngineConfig) -> "SearchEngine":
        """Load corpora plus previously persisted indices."""
        sources, viz_docs = cls._load_corpora(config)
        ds_index = load_index(config.index_dir / DS_INDEX_FILE)
        viz_index = load_index(config.index_dir / VIZ_INDEX_FILE)
        return cls(config, sources, ds_index, viz_docs, viz_index)

    # -- search pipeline ----------------------------------------------------

    def search(self, query: str, facet_state: FacetState | None = None,
               limit: int | None = None, source_id: str | None = None,
               use_summary_client: bool = True) -> HybridResult:
        limit = limit or self.config.result_limit
        facet_state = facet_state or FacetState()
        timings: dict[str, float] = {}

        start = time.perf_counter()
        parsed = parser.parse(query, self.sources, self.grammar, self.lexicon,
                              self.gazetteer, self.chart_lexicon.all_concepts())
        timings["parse_ms"] = (time.perf_counter() - start) * 1000

        start = time.perf_counter()
        plan = classifier.classify(query, parsed, self.ds_index,
                                   self.config.thresholds)
        timings["classify_ms"] = (time.perf_counter() - start) * 1000

        start = time.perf_counter()
        qa_result = self._run_qa(parsed, plan, source_id, use_summary_client)
        timings["execute_ms"] = (time.perf_counter() - start) * 1000

        start = time.perf_counter()
        ranked = vizsearch.design_search(query, self.viz_index, self.chart_lexicon,
                                         limit=self.viz_index.doc_cnt or 1)
        timings["retrieve_ms"] = (time.perf_counter() - start) * 1000

        start = time.perf_counter()
        filtered = vizsearch.apply_facets(ranked, self.viz_by_id, facet_state)
        page = filtered.entries[:limit]
        docs = [self.viz_by_id[e.doc_id] for e in page]
        facets = vizsearch.compute_facets(docs)
        hits = []
        for entry, doc in zip(page, docs):
            hit = doc.to_dict()
            hit["score"] = round(entry.raw_score, 6)
            hit["normScore"] = round(entry.norm_score, 6)
            hits.append(hit)
        timings["rank_ms"] = (time.perf_counter() - start) * 1000

        return HybridResult(plan=plan, qa=qa_result,
                            general=GeneralResult(hits=hits, facets=facets),
                            timings=timings)

    def _source_ranking(self, plan: SearchPlan) -> list[dict]:
        ranking = []
        for score in plan.ranked_sources:
            if score.raw_score <= 0:
                continue
            source = self.sources_by_id[score.source_id]
            ranking.append({
                "sourceId": score.source_id,
                "sourceName": source.name,
                "percentage": round(score.norm_score * 100, 1),
                "fieldMatchCount": score.field_match_count,
            })
        return ranking

    def _run_qa(self, parsed, plan: SearchPlan, source_id: str | None,
                use_summary_client: bool) -> QaResult | None:
        pinned = source_id is not None
        if pinned and source_id not in self.sources_by_id:
            raise KeyError(source_id)
        if not pinned:
            if not plan.has_ds_match:
                return None
            source_id = plan.top_source_id()
        source = self.sources_by_id[source_id]
        ranking = self._source_ranking(plan)

        try:
            spec = qa.resolve_spec(parsed, source)
        except SpecUnresolvable:
            return QaResult(source_id=source.id, source_name=source.name,
                            suggestions=qa.suggest_queries(source, SUGGESTIONS_PER_SOURCE),
                            source_ranking=ranking)
        if not plan.invoke_qa and not pinned:
            return None  # source matched and spec resolvable, but no intent: general only

        try:
            table = qa.execute_spec(spec, source)
            if not table:
                raise ExecutionError("analytical result is empty")
            chart = qa.choose_encoding(spec, source, table)
            stats = qa.compute_key_stats(chart)
        except (EncodingError, ExecutionError) as exc:
            logger.info("qa generation failed for %s: %s", source.id, exc)
            return QaResult(source_id=source.id, source_name=source.name,
                            suggestions=qa.suggest_queries(source, SUGGESTIONS_PER_SOURCE),
                            source_ranking=ranking, error=str(exc))
        client = self.summary_client if use_summary_client else None
        summary = qa.rephrase_summary(stats, client)
        return QaResult(source_id=source.id, source_name=source.name,
                        chart=chart, summary=summary, source_ranking=ranking)

    # -- metadata views -----------------------------------------------------

    def datasource_summaries(self) -> list[dict]:
        out = []
        for source in self.sources:
            out.append({
                "id": source.id,
                "name": source.name,
                "description": source.description,
                "rowCount": len(source.table),
                "attributes": [{"name": a.name, "dataType": a.data_type,
                                "role": a.role} for a in source.attributes],
            })
        return out

    def datasource_detail(self, source_id: str) -> dict:
        source = self.sources_by_id[source_id]
        detail = source.metadata_dict()
        detail["rowCount"] = len(source.table)
        samples = {}
        for attr in source.dimensions():
            samples[attr.name] = source.distinct_values(attr.name, 5)
        detail["sampleValues"] = samples
        suggestions = qa.suggest_queries(source, 1)
        detail["suggestedQuery"] = suggestions[0] if suggestions else None
        return detail

    def viz_sample(self, n: int = 12) -> list[dict]:
        return [doc.to_dict() for doc in self.viz_docs[:n]]

    def suggestions(self, prefix: str = "", k: int = 8) -> list[str]:
        needle = prefix.strip().lower()
        out = []
        for source in self.sources:
            for text in qa.suggest_queries(source, SUGGESTIONS_PER_SOURCE):
                if not needle or needle in text.lower():
                    out.append(text)
        out.sort()
        return out[:k]
