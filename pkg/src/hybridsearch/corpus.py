"""Curated corpora: tabular data sources and visualization metadata records.

CSV data sources get one attribute per column; declared metadata overrides
type/role inference. Attributes are enriched from a bundled lexicon with
synonyms, related terms, and taxonomy anchors so queries can match beyond
literal column names.
"""

from __future__ import annotations

import csv
import json
import logging
import re
from dataclasses import dataclass, field, replace
from datetime import date, datetime
from importlib import resources
from pathlib import Path

from .errors import IngestionError, SchemaError

logger = logging.getLogger(__name__)

DATA_TYPES = ("text", "date", "Boolean", "geospatial", "temporal", "numeric")
ROLES = ("measure", "dimension")
AGGREGATES = ("sum", "average", "median", "count", "distinct count")

NUMERIC_MAJORITY = 0.95
GEO_MAJORITY = 0.8
TAXONOMY_SPAN = 2  # enrichment walks at most two levels up/down from anchor

_DATE_PATTERNS = (
    re.compile(r"^\d{4}-\d{2}-\d{2}([T ]\d{2}:\d{2}(:\d{2})?)?$"),
    re.compile(r"^\d{4}/\d{2}/\d{2}$"),
    re.compile(r"^\d{2}/\d{2}/\d{4}$"),
    re.compile(r"^\d{4}-\d{2}$"),
)
_BOOL_VALUES = {"true", "false", "0", "1"}


def _singular(term: str) -> str:
    term = term.lower()
    if term.endswith("ies") and len(term) > 4:
        return term[:-3] + "y"
    if term.endswith("s") and not term.endswith("ss") and len(term) > 3:
        return term[:-1]
    return term


@dataclass
class Attribute:
    name: str
    data_type: str = "text"
    role: str = "dimension"
    synonyms: list[str] = field(default_factory=list)
    related_terms: list[str] = field(default_factory=list)
    taxonomy_node: str | None = None
    unit_semantics: str | None = None

    def is_measure(self) -> bool:
        return self.role == "measure"

    def is_temporal(self) -> bool:
        return self.data_type in ("temporal", "date")

    def is_geospatial(self) -> bool:
        return self.data_type == "geospatial"

    def to_dict(self) -> dict:
        out = {
            "name": self.name,
            "dataType": self.data_type,
            "role": self.role,
            "synonyms": list(self.synonyms),
            "relatedTerms": list(self.related_terms),
        }
        if self.taxonomy_node:
            out["taxonomyNode"] = self.taxonomy_node
        if self.unit_semantics:
            out["unitSemantics"] = self.unit_semantics
        return out


@dataclass
class DataSource:
    id: str
    name: str
    table: list[list[str]]
    attributes: list[Attribute]
    description: str = ""
    default_aggregate: str = "sum"

    _columns: dict[str, int] = field(default_factory=dict, repr=False)
    _distinct_cache: dict = field(default_factory=dict, repr=False)
    _buckets_cache: dict = field(default_factory=dict, repr=False)

    def __post_init__(self):
        self._columns = {a.name: i for i, a in enumerate(self.attributes)}
        self._distinct_cache = {}
        self._buckets_cache = {}

    def attribute(self, name: str) -> Attribute:
        for attr in self.attributes:
            if attr.name == name:
                return attr
        raise KeyError(name)

    def column_values(self, name: str) -> list[str]:
        idx = self._columns[name]
        return [row[idx] for row in self.table]

    def numeric_values(self, name: str) -> list[float]:
        out = []
        for cell in self.column_values(name):
            cell = cell.strip()
            if not cell:
                continue
            try:
                out.append(float(cell.replace(",", "")))
            except ValueError:
                continue
        return out

    def distinct_values(self, name: str, cap: int = 10000) -> list[str]:
        """Distinct non-blank cell values in first-seen order, capped. Cached
        (tables are immutable once loaded)."""
        cached = self._distinct_cache.get((name, cap))
        if cached is not None:
            return cached
        seen: dict[str, None] = {}
        for cell in self.column_values(name):
            cell = cell.strip()
            if cell and cell not in seen:
                seen[cell] = None
                if len(seen) >= cap:
                    break
        values = list(seen)
        self._distinct_cache[(name, cap)] = values
        return values

    def values_by_length(self, name: str, cap: int = 10000) -> dict[int, list[tuple[str, str]]]:
        """Distinct values bucketed by lowercase length, for fuzzy lookup."""
        cached = self._buckets_cache.get((name, cap))
        if cached is not None:
            return cached
        buckets: dict[int, list[tuple[str, str]]] = {}
        for value in self.distinct_values(name, cap):
            lower = value.lower()
            buckets.setdefault(len(lower), []).append((lower, value))
        self._buckets_cache[(name, cap)] = buckets
        return buckets

    def measures(self) -> list[Attribute]:
        return [a for a in self.attributes if a.is_measure()]

    def dimensions(self) -> list[Attribute]:
        return [a for a in self.attributes if not a.is_measure()]

    def metadata_dict(self) -> dict:
        return {
            "id": self.id,
            "name": self.name,
            "description": self.description,
            "defaultAggregate": self.default_aggregate,
            "attributes": [a.to_dict() for a in self.attributes],
        }


@dataclass
class VizDocument:
    id: str
    title: str
    caption: str = ""
    tags: list[str] = field(default_factory=list)
    description: str = ""
    author_name: str = ""
    created_date: date = date(1970, 1, 1)
    chart_types: list[str] = field(default_factory=list)
    mark_types: list[str] = field(default_factory=list)
    source_url: str = ""
    thumbnail_ref: str = ""

    def to_dict(self) -> dict:
        return {
            "id": self.id,
            "title": self.title,
            "caption": self.caption,
            "tags": list(self.tags),
            "description": self.description,
            "authorName": self.author_name,
            "createdDate": self.created_date.isoformat(),
            "chartTypes": list(self.chart_types),
            "markTypes": list(self.mark_types),
            "sourceUrl": self.source_url,
            "thumbnailRef": self.thumbnail_ref,
        }


class Taxonomy:
    """Single-rooted concept forest with explicit depths (root depth == 1)."""

    def __init__(self, nodes: dict[str, dict]):
        self.parent: dict[str, str | None] = {}
        self._depth: dict[str, int] = {}
        self.children: dict[str, list[str]] = {}
        for name, info in nodes.items():
            parent = info.get("parent")
            depth = int(info["depth"])
            self.parent[name] = parent
            self._depth[name] = depth
            if parent is not None:
                self.children.setdefault(parent, []).append(name)
        for name, parent in self.parent.items():
            if parent is None:
                if self._depth[name] != 1:
                    raise SchemaError(f"taxonomy root {name!r} must have depth 1")
            else:
                if parent not in self._depth:
                    raise SchemaError(f"taxonomy node {name!r} has unknown parent {parent!r}")
                if self._depth[name] != self._depth[parent] + 1:
                    raise SchemaError(f"taxonomy node {name!r} depth must be parent depth + 1")

    def __contains__(self, node: str) -> bool:
        return node in self._depth

    def depth(self, node: str) -> int:
        if node not in self._depth:
            raise LookupError(f"concept not in taxonomy: {node!r}")
        return self._depth[node]

    def ancestor_chain(self, node: str) -> list[str]:
        """Node followed by its ancestors up to the root."""
        if node not in self._depth:
            raise LookupError(f"concept not in taxonomy: {node!r}")
        chain = [node]
        current = self.parent[node]
        while current is not None:
            chain.append(current)
            current = self.parent[current]
        return chain

    def neighborhood(self, node: str, span: int = TAXONOMY_SPAN) -> list[str]:
        """Concepts within ``span`` levels above or below ``node`` (excluding it)."""
        out: list[str] = []
        current = node
        for _ in range(span):
            parent = self.parent.get(current)
            if parent is None:
                break
            out.append(parent)
            current = parent
        frontier = [node]
        for _ in range(span):
            nxt: list[str] = []
            for item in frontier:
                nxt.extend(self.children.get(item, ()))
            out.extend(nxt)
            frontier = nxt
        return out


@dataclass
class Lexicon:
    synonyms: dict[str, list[str]]
    related: dict[str, list[str]]
    taxonomy: Taxonomy

    def lookup_synonyms(self, term: str) -> list[str]:
        key = term.lower()
        return self.synonyms.get(key) or self.synonyms.get(_singular(key), [])

    def lookup_related(self, term: str) -> list[str]:
        key = term.lower()
        return self.related.get(key) or self.related.get(_singular(key), [])

    def taxonomy_anchor(self, term: str) -> str | None:
        key = term.lower()
        if key in self.taxonomy:
            return key
        singular = _singular(key)
        return singular if singular in self.taxonomy else None


class Gazetteer:
    """Bundled place-name lookup (US states, countries, cities, region aliases)."""

    def __init__(self, data: dict):
        self.us_states = {s.lower() for s in data.get("us_states", ())}
        self.countries = {s.lower() for s in data.get("countries", ())}
        self.cities = {s.lower() for s in data.get("cities", ())}
        self.aliases = {s.lower() for s in data.get("aliases", ())}
        self.all_places = self.us_states | self.countries | self.cities | self.aliases

    def __contains__(self, term: str) -> bool:
        return term.lower() in self.all_places

    def is_us_state(self, term: str) -> bool:
        return term.lower() in self.us_states


def _bundled(name: str) -> str:
    return resources.files("hybridsearch.data").joinpath(name).read_text()


def load_lexicon(path: str | Path | None = None) -> Lexicon:
    raw = Path(path).read_text() if path else _bundled("lexicon.json")
    data = json.loads(raw)
    synonyms = {k.lower(): [v.lower() for v in vals] for k, vals in data.get("synonyms", {}).items()}
    related = {k.lower(): [v.lower() for v in vals] for k, vals in data.get("related", {}).items()}
    return Lexicon(synonyms=synonyms, related=related,
                   taxonomy=Taxonomy(data.get("taxonomy", {})))


def load_gazetteer(path: str | Path | None = None) -> Gazetteer:
    raw = Path(path).read_text() if path else _bundled("gazetteer.json")
    return Gazetteer(json.loads(raw))


def parse_date(value: str) -> date | None:
    value = value.strip()
    for fmt in ("%Y-%m-%d", "%Y/%m/%d", "%m/%d/%Y", "%Y-%m", "%Y"):
        try:
            return datetime.strptime(value, fmt).date()
        except ValueError:
            continue
    try:
        return datetime.fromisoformat(value).date()
    except ValueError:
        return None


def looks_like_date(value: str) -> bool:
    v = value.strip()
    return any(p.match(v) for p in _DATE_PATTERNS)


def is_numeric(value: str) -> bool:
    try:
        float(value.replace(",", ""))
        return True
    except ValueError:
        return False


def infer_field_role(column_values: list[str],
                     gazetteer: Gazetteer | None = None) -> tuple[str, str]:
    """Infer (dataType, role) for a column from its non-blank cell values."""
    values = [v.strip() for v in column_values if v and v.strip()]
    if not values:
        raise IngestionError("cannot infer type/role of an all-blank column")
    lowered = [v.lower() for v in values]
    if set(lowered) <= _BOOL_VALUES:
        return ("Boolean", "dimension")
    date_hits = sum(1 for v in values if looks_like_date(v))
    if date_hits / len(values) >= NUMERIC_MAJORITY:
        return ("temporal", "dimension")
    numeric_hits = sum(1 for v in values if is_numeric(v))
    if numeric_hits / len(values) >= NUMERIC_MAJORITY:
        return ("numeric", "measure")
    if gazetteer is not None:
        geo_hits = sum(1 for v in lowered if v in gazetteer.all_places)
        if geo_hits / len(values) >= GEO_MAJORITY:
            return ("geospatial", "dimension")
    return ("text", "dimension")


def _clean_terms(terms) -> list[str]:
    return sorted({str(t).strip().lower() for t in terms if str(t).strip()})


def _attribute_from_meta(meta: dict) -> Attribute:
    name = meta.get("name")
    if not name:
        raise SchemaError("attribute metadata entry missing 'name'")
    data_type = meta.get("dataType", "text")
    if data_type not in DATA_TYPES:
        raise SchemaError(f"attribute {name!r}: unknown dataType {data_type!r}")
    role = meta.get("role", "measure" if data_type == "numeric" else "dimension")
    if role not in ROLES:
        raise SchemaError(f"attribute {name!r}: unknown role {role!r}")
    if role == "measure" and data_type != "numeric":
        raise SchemaError(f"attribute {name!r}: measures must be numeric")
    return Attribute(
        name=name,
        data_type=data_type,
        role=role,
        synonyms=_clean_terms(meta.get("synonyms", ())),
        related_terms=_clean_terms(meta.get("relatedTerms", ())),
        unit_semantics=meta.get("unitSemantics"),
    )


def load_data_source(csv_path: str | Path, meta_path: str | Path,
                     gazetteer: Gazetteer | None = None) -> DataSource:
    """Load a CSV table plus its metadata document into a DataSource.

    Metadata-declared attribute types/roles override inference; columns absent
    from the metadata are inferred from their values.
    """
    csv_path = Path(csv_path)
    meta_path = Path(meta_path)
    try:
        meta = json.loads(meta_path.read_text())
    except OSError as exc:
        raise IngestionError(f"cannot read metadata file {meta_path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise SchemaError(f"metadata file {meta_path} is not valid JSON: {exc}") from exc

    try:
        with csv_path.open(newline="") as fh:
            reader = csv.reader(fh)
            rows = list(reader)
    except OSError as exc:
        raise IngestionError(f"cannot read CSV file {csv_path}: {exc}") from exc
    except csv.Error as exc:
        raise IngestionError(f"malformed CSV {csv_path}: {exc}") from exc
    if not rows:
        raise IngestionError(f"CSV {csv_path} has no header row")
    header, *body = rows
    header = [h.strip() for h in header]
    if len(set(header)) != len(header):
        raise IngestionError(f"CSV {csv_path} has duplicate column names")
    for row_no, row in enumerate(body, start=2):
        if len(row) != len(header):
            raise IngestionError(
                f"CSV {csv_path} row {row_no} has {len(row)} cells, expected {len(header)}")
    table = [[cell.strip() for cell in row] for row in body]

    declared = {}
    for attr_meta in meta.get("attributes", ()):
        attr = _attribute_from_meta(attr_meta)
        if attr.name not in header:
            raise SchemaError(
                f"metadata column {attr.name!r} not present in CSV {csv_path.name}")
        declared[attr.name] = attr

    attributes = []
    for col_idx, col_name in enumerate(header):
        if col_name in declared:
            attributes.append(declared[col_name])
            continue
        values = [row[col_idx] for row in table]
        non_blank = [v for v in values if v]
        if non_blank:
            data_type, role = infer_field_role(values, gazetteer)
        else:
            data_type, role = "text", "dimension"
        attributes.append(Attribute(name=col_name, data_type=data_type, role=role))

    default_agg = meta.get("defaultAggregate", "sum")
    if default_agg not in AGGREGATES:
        raise SchemaError(f"unknown defaultAggregate {default_agg!r}")
    return DataSource(
        id=meta.get("id", csv_path.stem),
        name=meta.get("name", csv_path.stem),
        table=table,
        attributes=attributes,
        description=meta.get("description", ""),
        default_aggregate=default_agg,
    )


def enrich_attribute(attr: Attribute, lexicon: Lexicon) -> Attribute:
    """Populate synonyms/related terms from the lexicon entry matching the
    attribute name (case-insensitive, singular/plural-normalized); anchor the
    taxonomy node when one exists. Idempotent; unknown names pass through."""
    synonyms = set(attr.synonyms) | set(lexicon.lookup_synonyms(attr.name))
    related = set(attr.related_terms) | set(lexicon.lookup_related(attr.name))
    anchor = attr.taxonomy_node or lexicon.taxonomy_anchor(attr.name)
    if anchor:
        related.update(lexicon.taxonomy.neighborhood(anchor, TAXONOMY_SPAN))
    return replace(attr,
                   synonyms=_clean_terms(synonyms),
                   related_terms=_clean_terms(related),
                   taxonomy_node=anchor)


def enrich_source(source: DataSource, lexicon: Lexicon) -> DataSource:
    enriched = [enrich_attribute(a, lexicon) for a in source.attributes]
    return DataSource(id=source.id, name=source.name, table=source.table,
                      attributes=enriched, description=source.description,
                      default_aggregate=source.default_aggregate)


def load_viz_corpus(path: str | Path,
                    known_chart_types: set[str] | None = None) -> list[VizDocument]:
    """Load newline-delimited viz metadata records, skipping invalid ones.

    A record is invalid when it is not JSON, lacks an id or non-empty title,
    has an unparseable createdDate, or names a chart type outside the lexicon.
    Skips are logged with a total count.
    """
    path = Path(path)
    try:
        lines = path.read_text().splitlines()
    except OSError as exc:
        raise IngestionError(f"cannot read viz corpus {path}: {exc}") from exc

    docs: list[VizDocument] = []
    skipped = 0
    for line_no, line in enumerate(lines, start=1):
        if not line.strip():
            continue
        try:
            raw = json.loads(line)
            doc_id = str(raw["id"])
            title = str(raw.get("title", "")).strip()
            if not title:
                raise ValueError("empty title")
            created = parse_date(str(raw.get("createdDate", "")))
            if created is None:
                raise ValueError(f"bad createdDate {raw.get('createdDate')!r}")
            chart_types = [str(c) for c in raw.get("chartTypes", ())]
            if known_chart_types is not None:
                unknown = [c for c in chart_types if c not in known_chart_types]
                if unknown:
                    raise ValueError(f"unknown chartTypes {unknown}")
            docs.append(VizDocument(
                id=doc_id,
                title=title,
                caption=str(raw.get("caption", "")),
                tags=[str(t) for t in raw.get("tags", ())],
                description=str(raw.get("description", "")),
                author_name=str(raw.get("authorName", "")),
                created_date=created,
                chart_types=chart_types,
                mark_types=[str(m) for m in raw.get("markTypes", ())],
                source_url=str(raw.get("sourceUrl", "")),
                thumbnail_ref=str(raw.get("thumbnailRef", "")),
            ))
        except (KeyError, ValueError, TypeError) as exc:
            skipped += 1
            logger.warning("viz corpus %s line %d skipped: %s", path.name, line_no, exc)
    if skipped:
        logger.warning("viz corpus %s: skipped %d invalid record(s)", path.name, skipped)
    return docs


def bundled_data_path() -> Path:
    """Filesystem path of the bundled data directory."""
    return Path(__file__).resolve().parent / "data"
