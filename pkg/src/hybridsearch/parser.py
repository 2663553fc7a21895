"""Query parsing: intent detection and field binding.

A CKY chart parser runs a small CNF grammar over terminal classes. Lexical
classes (aggregation words, grouping markers, ...) come from the grammar file;
semantic classes (ATTRIBUTE, VALUE, GEO_PLACE, NUMBER, YEAR, CHART_WORD) are
assigned per query from data-source metadata, the gazetteer, and the
chart-type lexicon — the grammar's "semantic predicates".

Detected intents are maximal non-overlapping derivations; each carries its
operator (normalized) and the argument n-grams bound within its span.
"""

from __future__ import annotations

import json
import logging
import re
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Sequence

from .analysis import AnalyzerSettings, TokenSet, encode, word_tokens
from .corpus import DataSource, Gazetteer, Lexicon, Taxonomy, load_gazetteer, _singular
from .errors import SchemaError
from .similarity import normalized_levenshtein, within_distance, wu_palmer

logger = logging.getLogger(__name__)

INTENT_KINDS = ("Grouping", "Aggregation", "Correlation",
                "FilterLimit", "Temporal", "Geospatial")

FUZZY_MAX_DISTANCE = 0.2
TAXONOMY_MIN_SIMILARITY = 0.85
VALUE_CAP = 10000

_NUMBER_RE = re.compile(r"^\d+(\.\d+)?$")

_KIND_PRIORITY = {"exact": 5, "synonym": 4, "fuzzy": 3, "related": 2, "taxonomy": 1}


@dataclass(frozen=True)
class Intent:
    kind: str
    operator: str | None = None
    arguments: tuple[str, ...] = ()
    numbers: tuple[float, ...] = ()
    span: tuple[int, int] = (0, 0)

    def to_dict(self) -> dict:
        return {"kind": self.kind, "operator": self.operator,
                "arguments": list(self.arguments), "numbers": list(self.numbers)}


@dataclass(frozen=True)
class FieldMatch:
    query_ngram: str
    source_id: str
    attribute: str
    match_kind: str
    score: float
    value: str | None = None

    def to_dict(self) -> dict:
        out = {"queryNgram": self.query_ngram, "sourceId": self.source_id,
               "attribute": self.attribute, "matchKind": self.match_kind,
               "score": round(self.score, 6)}
        if self.value is not None:
            out["value"] = self.value
        return out


@dataclass
class ParsedQuery:
    raw: str
    words: list[str]
    tokens: TokenSet
    intents: list[Intent] = field(default_factory=list)
    field_matches: list[FieldMatch] = field(default_factory=list)

    def matches_for(self, source_id: str) -> list[FieldMatch]:
        return [m for m in self.field_matches if m.source_id == source_id]

    def has_intents(self) -> bool:
        return bool(self.intents)


class IntentGrammar:
    """CNF grammar over terminal classes, loaded from a versioned JSON file."""

    def __init__(self, data: dict):
        if data.get("version") != 1:
            raise SchemaError(f"unsupported grammar version {data.get('version')!r}")
        self.intent_symbols: dict[str, str] = dict(data["intent_symbols"])
        for kind in self.intent_symbols.values():
            if kind not in INTENT_KINDS:
                raise SchemaError(f"grammar maps to unknown intent kind {kind!r}")
        self.semantic_classes = set(data.get("semantic_classes", ()))
        self.lexicon: dict[str, list[str]] = {
            cls: [p.lower() for p in phrases]
            for cls, phrases in data["lexicon"].items()
        }
        self.phrase_classes: dict[str, set[str]] = {}
        self.max_phrase_len = 1
        for cls, phrases in self.lexicon.items():
            for phrase in phrases:
                self.phrase_classes.setdefault(phrase, set()).add(cls)
                self.max_phrase_len = max(self.max_phrase_len, len(phrase.split()))
        self.unary_rules: list[tuple[str, str]] = [tuple(r) for r in data["unary_rules"]]
        self.binary_rules: list[tuple[str, str, str]] = [tuple(r) for r in data["binary_rules"]]
        known = set(self.lexicon) | self.semantic_classes
        for lhs, rhs in self.unary_rules:
            if rhs not in known:
                raise SchemaError(f"unary rule {lhs} -> {rhs}: unknown terminal class")
        self.operator_map: dict[str, str] = dict(data.get("operator_map", {}))
        self.limit_defaults: dict[str, int] = dict(data.get("limit_defaults", {}))
        self.limit_directions: dict[str, str] = dict(data.get("limit_directions", {}))
        self.comparison_operators: dict[str, str] = dict(data.get("comparison_operators", {}))

    def normalize_operator(self, text: str) -> str:
        return self.operator_map.get(text, text)

    def all_operator_terms(self) -> set[str]:
        terms = set()
        for cls in ("AGG_WORD", "GROUP_MARKER", "CORR_WORD", "FILTER_OP",
                    "CMP_OP", "LIMIT_OP", "TIME_WORD", "TIME_MARKER",
                    "GEO_MARKER", "GEO_WORD"):
            terms.update(self.lexicon.get(cls, ()))
        terms.update(self.operator_map.values())
        return terms


_BUNDLED_GRAMMAR: IntentGrammar | None = None
_BUNDLED_GAZETTEER: Gazetteer | None = None

_OPERATOR_CLASSES = {
    "AGG_P": ("AGG_WORD",),
    "GROUP_P": ("GROUP_MARKER",),
    "CORR_P": ("CORR_WORD",),
    "FILTER_P": ("FILTER_OP", "CMP_OP"),
    "LIMIT_P": ("LIMIT_OP",),
    "TIME_P": ("TIME_WORD", "TIME_MARKER"),
    "GEO_P": ("GEO_WORD", "GEO_MARKER"),
}
_ARGUMENT_CLASSES = ("ATTRIBUTE", "VALUE", "GEO_PLACE")


def load_grammar(path: str | Path | None = None) -> IntentGrammar:
    global _BUNDLED_GRAMMAR
    if path is not None:
        return IntentGrammar(json.loads(Path(path).read_text()))
    if _BUNDLED_GRAMMAR is None:
        raw = resources.files("hybridsearch.data").joinpath("grammar.json").read_text()
        _BUNDLED_GRAMMAR = IntentGrammar(json.loads(raw))
    return _BUNDLED_GRAMMAR


def _default_gazetteer() -> Gazetteer:
    global _BUNDLED_GAZETTEER
    if _BUNDLED_GAZETTEER is None:
        _BUNDLED_GAZETTEER = load_gazetteer()
    return _BUNDLED_GAZETTEER


# --------------------------------------------------------------------------
# similarity re-exports (canonical definitions live in similarity.py)

__all_similarity__ = [normalized_levenshtein, wu_palmer]


# --------------------------------------------------------------------------
# field/value matching

def _is_number(text: str) -> bool:
    return bool(_NUMBER_RE.match(text))


def _related_score(concept: str | None, attr_node: str | None,
                   taxonomy: Taxonomy | None) -> float:
    """Taxonomy similarity for a listed related term; the acceptance threshold
    stands in when either side is not anchored in the taxonomy."""
    if taxonomy is not None and concept and attr_node and attr_node in taxonomy:
        return wu_palmer(concept, attr_node, taxonomy)
    return TAXONOMY_MIN_SIMILARITY


def match_fields(ngrams: TokenSet, source: DataSource,
                 lexicon: Lexicon | None = None) -> list[FieldMatch]:
    """Best match per (n-gram, attribute) against names, synonyms, related
    terms, taxonomy neighbors, and distinct dimension cell values.

    Fuzzy matches require normalized edit distance <= 0.2; taxonomy matches
    require Wu-Palmer similarity >= 0.85.
    """
    taxonomy = lexicon.taxonomy if lexicon else None
    value_sets: dict[str, dict[str, str]] = {}
    value_buckets: dict[str, dict[int, list[tuple[str, str]]]] = {}
    for attr in source.dimensions():
        value_sets[attr.name] = {v.lower(): v
                                 for v in source.distinct_values(attr.name, VALUE_CAP)}
        value_buckets[attr.name] = source.values_by_length(attr.name, VALUE_CAP)

    out: list[FieldMatch] = []
    for g in sorted(ngrams.counts):
        if len(g) < 2 or _is_number(g):
            continue
        g_singular = _singular(g)
        for attr in source.attributes:
            candidates: list[tuple[float, int, str, str | None]] = []
            name = attr.name.lower()
            if g == name:
                candidates.append((1.0, _KIND_PRIORITY["exact"], "exact", None))
            else:
                dist = normalized_levenshtein(g, name)
                if dist <= FUZZY_MAX_DISTANCE:
                    candidates.append((1.0 - dist, _KIND_PRIORITY["fuzzy"], "fuzzy", None))
                elif g_singular == _singular(name):
                    # singular/plural variants the edit bound misses
                    # ("countries" vs "country") count as the same concept
                    candidates.append((1.0, _KIND_PRIORITY["synonym"], "synonym", None))
            for syn in attr.synonyms:
                if g == syn or g_singular == _singular(syn):
                    candidates.append((1.0, _KIND_PRIORITY["synonym"], "synonym", None))
                    break
                dist = normalized_levenshtein(g, syn)
                if dist <= FUZZY_MAX_DISTANCE:
                    candidates.append((1.0 - dist, _KIND_PRIORITY["fuzzy"], "fuzzy", None))
            for rel in attr.related_terms:
                if g == rel or g_singular == _singular(rel):
                    concept = None
                    if taxonomy is not None:
                        concept = (g if g in taxonomy
                                   else g_singular if g_singular in taxonomy else None)
                    score = _related_score(concept, attr.taxonomy_node, taxonomy)
                    candidates.append((score, _KIND_PRIORITY["related"], "related", None))
                    break
            if taxonomy and attr.taxonomy_node:
                concept = g if g in taxonomy else (g_singular if g_singular in taxonomy else None)
                if concept and concept != attr.taxonomy_node:
                    similarity = wu_palmer(concept, attr.taxonomy_node, taxonomy)
                    if similarity >= TAXONOMY_MIN_SIMILARITY:
                        candidates.append((similarity, _KIND_PRIORITY["taxonomy"],
                                           "taxonomy", None))
            values = value_sets.get(attr.name)
            if values:
                if g in values:
                    candidates.append((1.0, _KIND_PRIORITY["exact"], "exact", values[g]))
                elif " " not in g:  # fuzzy matching is unigram-only, as in the index
                    buckets = value_buckets[attr.name]
                    low = max(1, int(len(g) * (1.0 - FUZZY_MAX_DISTANCE)))
                    high = int(len(g) / (1.0 - FUZZY_MAX_DISTANCE)) + 1
                    for length in range(low, high + 1):
                        for value_lower, value in buckets.get(length, ()):
                            if within_distance(g, value_lower, FUZZY_MAX_DISTANCE):
                                dist = normalized_levenshtein(g, value_lower)
                                candidates.append((1.0 - dist, _KIND_PRIORITY["fuzzy"],
                                                   "fuzzy", value))
            if candidates:
                score, _, kind, value = max(candidates, key=lambda c: (c[0], c[1]))
                out.append(FieldMatch(query_ngram=g, source_id=source.id,
                                      attribute=attr.name, match_kind=kind,
                                      score=score, value=value))
    return out


# --------------------------------------------------------------------------
# CKY intent detection

@dataclass
class _Node:
    symbol: str
    terminal: tuple[str, str] | None = None        # (class, text)
    children: tuple["_Node", "_Node"] | None = None

    def terminals(self) -> list[tuple[str, str]]:
        if self.terminal is not None:
            return [self.terminal]
        left, right = self.children
        return left.terminals() + right.terminals()


def _classify_spans(words: Sequence[str], grammar: IntentGrammar,
                    gazetteer: Gazetteer | None,
                    semantic: dict[str, set[str]] | None,
                    chart_terms: set[str] | None) -> dict[tuple[int, int], dict[str, str]]:
    """Terminal classes per span: {(i, j): {class: text}}."""
    spans: dict[tuple[int, int], dict[str, str]] = {}
    n = len(words)
    max_len = max(grammar.max_phrase_len, 3)
    for i in range(n):
        for j in range(i + 1, min(n, i + max_len) + 1):
            text = " ".join(words[i:j])
            classes: dict[str, str] = {}
            for cls in grammar.phrase_classes.get(text, ()):
                classes[cls] = text
            if j - i == 1 and _is_number(text):
                classes["NUMBER"] = text
                try:
                    value = float(text)
                    if value.is_integer() and 1800 <= value <= 2100:
                        classes["YEAR"] = text
                except ValueError:
                    pass
            if gazetteer is not None and text in gazetteer:
                classes["GEO_PLACE"] = text
            if semantic:
                for cls in semantic.get(text, ()):
                    classes.setdefault(cls, text)
            if chart_terms and text in chart_terms:
                classes["CHART_WORD"] = text
            if classes:
                spans[(i, j)] = classes
    return spans


def detect_intents(words: Sequence[str], grammar: IntentGrammar | None = None,
                   gazetteer: Gazetteer | None = None,
                   semantic: dict[str, set[str]] | None = None,
                   chart_terms: set[str] | None = None) -> list[Intent]:
    """CKY-parse the word sequence and return intents for the maximal
    non-overlapping derivations, left to right."""
    grammar = grammar or load_grammar()
    if gazetteer is None:
        gazetteer = _default_gazetteer()
    n = len(words)
    if n == 0:
        return []
    terminal_spans = _classify_spans(words, grammar, gazetteer, semantic, chart_terms)

    chart: dict[tuple[int, int], dict[str, _Node]] = {}
    for length in range(1, n + 1):
        for i in range(0, n - length + 1):
            j = i + length
            cell: dict[str, _Node] = {}
            for cls, text in terminal_spans.get((i, j), {}).items():
                cell[cls] = _Node(symbol=cls, terminal=(cls, text))
            for k in range(i + 1, j):
                left_cell = chart.get((i, k))
                right_cell = chart.get((k, j))
                if not left_cell or not right_cell:
                    continue
                for lhs, rhs1, rhs2 in grammar.binary_rules:
                    if lhs in cell:
                        continue
                    if rhs1 in left_cell and rhs2 in right_cell:
                        cell[lhs] = _Node(symbol=lhs,
                                          children=(left_cell[rhs1], right_cell[rhs2]))
            for lhs, rhs in grammar.unary_rules:
                if lhs not in cell and rhs in cell and cell[rhs].terminal is not None:
                    cell[lhs] = _Node(symbol=lhs, children=None,
                                      terminal=cell[rhs].terminal)
            if cell:
                chart[(i, j)] = cell

    symbol_priority = {sym: i for i, sym in enumerate(grammar.intent_symbols)}
    candidates = []
    for (i, j), cell in chart.items():
        for sym in cell:
            if sym in grammar.intent_symbols:
                candidates.append((j - i, i, symbol_priority[sym], sym, j))
    candidates.sort(key=lambda c: (-c[0], c[1], c[2]))

    taken: list[tuple[int, int]] = []
    intents: list[Intent] = []
    for _, i, _, sym, j in candidates:
        if any(i < e and s < j for s, e in taken):
            continue
        taken.append((i, j))
        intents.append(_make_intent(grammar, sym, chart[(i, j)][sym], (i, j)))
    intents.sort(key=lambda it: it.span)
    return intents


def _make_intent(grammar: IntentGrammar, symbol: str, node: _Node,
                 span: tuple[int, int]) -> Intent:
    terminals = node.terminals()
    operator = None
    for cls, text in terminals:
        if cls in _OPERATOR_CLASSES[symbol]:
            operator = grammar.normalize_operator(text)
            break
    arguments = tuple(text for cls, text in terminals if cls in _ARGUMENT_CLASSES)
    numbers = []
    for cls, text in terminals:
        if cls in ("NUMBER", "YEAR"):
            value = float(text)
            if value not in numbers:
                numbers.append(value)
    return Intent(kind=grammar.intent_symbols[symbol], operator=operator,
                  arguments=arguments, numbers=tuple(numbers), span=span)


# --------------------------------------------------------------------------
# top-level parse

def parse(query: str, sources: Sequence[DataSource],
          grammar: IntentGrammar | None = None,
          lexicon: Lexicon | None = None,
          gazetteer: Gazetteer | None = None,
          chart_terms: set[str] | None = None,
          settings: AnalyzerSettings | None = None) -> ParsedQuery:
    """Full query analysis: n-gram tokens, field matches against every source,
    and grammar-derived intents. Deterministic for fixed inputs."""
    grammar = grammar or load_grammar()
    if gazetteer is None:
        gazetteer = _default_gazetteer()
    words = word_tokens(query)
    tokens = encode(query, settings or AnalyzerSettings())

    field_matches: list[FieldMatch] = []
    for source in sources:
        field_matches.extend(match_fields(tokens, source, lexicon))

    semantic: dict[str, set[str]] = {}
    for m in field_matches:
        cls = "VALUE" if m.value is not None else "ATTRIBUTE"
        semantic.setdefault(m.query_ngram, set()).add(cls)

    intents = detect_intents(words, grammar, gazetteer, semantic, chart_terms)
    return ParsedQuery(raw=query, words=words, tokens=tokens,
                       intents=intents, field_matches=field_matches)
