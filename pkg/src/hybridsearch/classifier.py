"""Query routing: decides whether a query gets dynamic Q&A generation in
addition to general (pre-authored content) search.

Q&A runs when the query carries an analytical intent AND its best data source
clears both thresholds: at least ``field_match`` distinct attribute/value
matches and a normalized share of at least ``norm_match``. General search runs
for every query regardless.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .analysis import AnalyzerSettings, TokenSet, encode
from .corpus import DataSource, Lexicon
from .index import Bm25Params, SearchIndex, build_index, rank, retrieve
from .parser import IntentGrammar, ParsedQuery, load_grammar

DEFAULT_FIELD_MATCH = 2
DEFAULT_NORM_MATCH = 0.3

# Distinct dimension values folded into each source's index document.
INDEXED_VALUES_PER_ATTRIBUTE = 500

# Grammar classes whose words are query operators, not content; they carry no
# signal about which data source the query is about.
_OPERATOR_CLASSES = ("AGG_WORD", "GROUP_MARKER", "CORR_WORD", "FILTER_OP",
                     "CMP_OP", "LIMIT_OP", "TIME_MARKER", "GEO_MARKER")


@dataclass(frozen=True)
class Thresholds:
    field_match: int = DEFAULT_FIELD_MATCH
    norm_match: float = DEFAULT_NORM_MATCH

    def to_dict(self) -> dict:
        return {"fieldMatch": self.field_match, "normMatch": self.norm_match}


@dataclass
class DataSourceScore:
    source_id: str
    field_match_count: int
    raw_score: float
    norm_score: float = 0.0

    def to_dict(self) -> dict:
        return {"sourceId": self.source_id,
                "fieldMatchCount": self.field_match_count,
                "rawScore": round(self.raw_score, 6),
                "normScore": round(self.norm_score, 6)}


@dataclass
class SearchPlan:
    has_analytical_intent: bool
    has_ds_match: bool
    invoke_qa: bool
    ranked_sources: list[DataSourceScore] = field(default_factory=list)
    thresholds: Thresholds = field(default_factory=Thresholds)

    def top_source_id(self) -> str | None:
        return self.ranked_sources[0].source_id if self.ranked_sources else None

    def to_dict(self) -> dict:
        return {
            "hasAnalyticalIntent": self.has_analytical_intent,
            "hasDSMatch": self.has_ds_match,
            "invokeQA": self.invoke_qa,
            "thresholds": self.thresholds.to_dict(),
            "rankedSources": [s.to_dict() for s in self.ranked_sources],
        }


def source_index_document(source: DataSource) -> tuple[str, dict[str, str]]:
    """The searchable text of one data source: name, description, attribute
    vocabulary (names, synonyms, related terms), and capped dimension values."""
    attr_terms = []
    for attr in source.attributes:
        attr_terms.append(attr.name)
        attr_terms.extend(attr.synonyms)
        attr_terms.extend(attr.related_terms)
    values = []
    for attr in source.dimensions():
        values.extend(source.distinct_values(attr.name, INDEXED_VALUES_PER_ATTRIBUTE))
    return source.id, {
        "name": source.name,
        "description": source.description,
        "attributes": ", ".join(attr_terms),
        "values": ", ".join(values),
    }


def build_datasource_index(sources: list[DataSource],
                           params: Bm25Params | None = None,
                           lexicon: Lexicon | None = None) -> SearchIndex:
    settings = AnalyzerSettings(expand_synonyms=lexicon is not None)
    synonyms = lexicon.synonyms if lexicon else None
    return build_index([source_index_document(s) for s in sources],
                       params, settings, synonyms)


def normalize_scores(scores: list[DataSourceScore]) -> list[DataSourceScore]:
    """Share-of-total normalization (so UI percentages sum to 100); all-zero
    input stays all-zero. Order is preserved."""
    for s in scores:
        if s.raw_score < 0:
            raise ValueError("raw scores must be non-negative")
    total = sum(s.raw_score for s in scores)
    for s in scores:
        s.norm_score = s.raw_score / total if total > 0 else 0.0
    return scores


def field_match_count(parsed: ParsedQuery, source_id: str) -> int:
    """Distinct attributes/values matched for one source (not n-gram hits)."""
    targets = {(m.attribute, m.value) for m in parsed.matches_for(source_id)}
    return len(targets)


def scoring_tokens(parsed: ParsedQuery, ds_index: SearchIndex,
                   grammar: IntentGrammar | None = None) -> TokenSet:
    """Query tokens used for data-source scoring: the parsed words minus
    operator vocabulary ("by", "across", "at least", ...), re-encoded. Operator
    words steer the grammar, not the choice of data source."""
    grammar = grammar or load_grammar()
    drop_phrases = sorted(
        {p for cls in _OPERATOR_CLASSES for p in grammar.lexicon.get(cls, ())},
        key=lambda p: -len(p.split()))
    words = list(parsed.words)
    for phrase in drop_phrases:
        parts = phrase.split()
        i = 0
        while i <= len(words) - len(parts):
            if words[i:i + len(parts)] == parts:
                del words[i:i + len(parts)]
            else:
                i += 1
    # query side never expands synonyms (no table passed), only the index did
    return encode(" ".join(words), ds_index.settings)


def classify(query: str, parsed: ParsedQuery, ds_index: SearchIndex,
             thresholds: Thresholds | None = None,
             grammar: IntentGrammar | None = None) -> SearchPlan:
    """Build the routing plan for one query (general search always runs)."""
    thresholds = thresholds or Thresholds()
    has_intent = parsed.has_intents()

    tokens = scoring_tokens(parsed, ds_index, grammar)
    raw: dict[str, float] = {source_id: 0.0 for source_id in ds_index.docs}
    if ds_index.doc_cnt > 0 and tokens.counts:
        candidates = retrieve(ds_index, tokens, ds_index.doc_cnt)
        for entry in rank(ds_index, tokens, candidates):
            raw[entry.doc_id] = entry.raw_score

    scores = [DataSourceScore(source_id=sid,
                              field_match_count=field_match_count(parsed, sid),
                              raw_score=score)
              for sid, score in raw.items()]
    normalize_scores(scores)
    scores.sort(key=lambda s: (-s.raw_score, s.source_id))

    has_ds_match = False
    if scores and scores[0].raw_score > 0:
        top = scores[0]
        has_ds_match = (top.field_match_count >= thresholds.field_match
                        and top.norm_score >= thresholds.norm_match)

    return SearchPlan(
        has_analytical_intent=has_intent,
        has_ds_match=has_ds_match,
        invoke_qa=has_intent and has_ds_match,
        ranked_sources=scores,
        thresholds=thresholds,
    )
