"""Dynamic answer generation for analytically routed queries.

Binds detected intents to the chosen data source, executes the resulting
transformation over its table, picks marks/encodings from a compact decision
table (three channels: x, y, color; four marks: bar, line, point, geoshape),
derives the key-statistics sentences, and optionally rephrases them through an
external text-generation endpoint guarded against invented numbers.
"""

from __future__ import annotations

import logging
import re
import statistics
from dataclasses import dataclass, field

import requests

from .corpus import AGGREGATES, Attribute, DataSource, parse_date
from .errors import EncodingError, ExecutionError, SpecUnresolvable
from .parser import FieldMatch, ParsedQuery

logger = logging.getLogger(__name__)

MARKS = ("bar", "line", "point", "geoshape")
CHANNELS = ("x", "y", "color")
CHART_SPEC_VERSION = 1

PROMPT_TEMPLATE = "Rephrase the following input more eloquently: \n'{key_stats}\n'"

FLAT_EPSILON = 1e-9

_LIMIT_DIRECTION = {"top": "top", "first": "top", "highest": "top",
                    "bottom": "bottom", "lowest": "bottom"}
_LIMIT_DEFAULT_N = {"top": 10, "first": 10, "bottom": 10, "highest": 1, "lowest": 1}
_COMPARATORS = {"at least": ">=", "at most": "<=", "more than": ">",
                "greater than": ">", "less than": "<", "fewer than": "<",
                "over": ">", "under": "<", "above": ">", "below": "<"}

_NUMBER_IN_TEXT = re.compile(r"\d+(?:,\d{3})*(?:\.\d+)?")


@dataclass(frozen=True)
class Filter:
    attribute: str
    op: str                      # ==, >=, <=, >, <, between, year==, year_between
    value: object

    def to_dict(self) -> dict:
        return {"attribute": self.attribute, "op": self.op, "value": self.value}


@dataclass
class AnalyticalSpec:
    source_id: str
    group_bys: list[str] = field(default_factory=list)
    measures: list[tuple[str | None, str]] = field(default_factory=list)
    filters: list[Filter] = field(default_factory=list)
    limit: tuple[str, int] | None = None
    correlation_pair: tuple[str, str] | None = None
    temporal_axis: str | None = None
    geo_axis: str | None = None

    def to_dict(self) -> dict:
        return {
            "sourceId": self.source_id,
            "groupBys": list(self.group_bys),
            "measures": [{"attribute": a, "aggregate": g} for a, g in self.measures],
            "filters": [f.to_dict() for f in self.filters],
            "limit": {"direction": self.limit[0], "n": self.limit[1]} if self.limit else None,
            "correlationPair": list(self.correlation_pair) if self.correlation_pair else None,
            "temporalAxis": self.temporal_axis,
            "geoAxis": self.geo_axis,
        }


@dataclass(frozen=True)
class Encoding:
    field: str
    data_type: str
    aggregate: str | None = None

    def to_dict(self) -> dict:
        out = {"field": self.field, "type": self.data_type}
        if self.aggregate:
            out["aggregate"] = self.aggregate
        return out


@dataclass
class ChartSpec:
    mark: str
    encodings: dict[str, Encoding]
    result_table: list[dict]
    title: str
    units: dict[str, str] = field(default_factory=dict)
    geo: dict | None = None

    def to_dict(self) -> dict:
        out = {
            "version": CHART_SPEC_VERSION,
            "mark": self.mark,
            "encodings": {ch: enc.to_dict() for ch, enc in self.encodings.items()},
            "data": self.result_table,
            "title": self.title,
            "units": dict(self.units),
        }
        if self.geo:
            out["geo"] = self.geo
        return out


@dataclass
class KeyStats:
    lines: list[str]
    stats: dict[str, float] = field(default_factory=dict)

    def text(self) -> str:
        return "\n".join(self.lines)


@dataclass
class SummaryResult:
    text: str
    used_client: bool = False
    warning: str | None = None


# --------------------------------------------------------------------------
# intent -> spec resolution

def _best_attribute_match(matches: list[FieldMatch], ngram: str) -> str | None:
    best = None
    for m in matches:
        if m.query_ngram == ngram and m.value is None:
            if best is None or m.score > best.score:
                best = m
    return best.attribute if best else None


def _year_like(value: float) -> bool:
    return float(value).is_integer() and 1800 <= value <= 2100


def resolve_spec(parsed: ParsedQuery, source: DataSource) -> AnalyticalSpec:
    """Map intents and mentioned fields onto an executable spec.

    A measure mentioned without an aggregation operator takes the source's
    default aggregate; Temporal/Geospatial intents without explicit bindings
    fall back to the source's first temporal/geospatial attribute. Raises
    SpecUnresolvable when nothing binds.
    """
    matches = parsed.matches_for(source.id)
    spec = AnalyticalSpec(source_id=source.id)
    used: set[str] = set()
    pending_agg: str | None = None
    pending_filters: list[tuple[str, tuple[float, ...]]] = []
    default_agg = source.default_aggregate

    def attr_of(name: str | None) -> Attribute | None:
        try:
            return source.attribute(name) if name else None
        except KeyError:
            return None

    def bind(ngram: str) -> Attribute | None:
        return attr_of(_best_attribute_match(matches, ngram))

    first_temporal = next((a.name for a in source.attributes if a.is_temporal()), None)
    first_geo = next((a.name for a in source.attributes if a.is_geospatial()), None)

    for intent in parsed.intents:
        bound = [a for a in (bind(arg) for arg in intent.arguments) if a is not None]
        if intent.kind == "Aggregation":
            op = intent.operator if intent.operator in AGGREGATES else default_agg
            measure_args = [a for a in bound if a.is_measure()]
            dim_args = [a for a in bound if not a.is_measure()]
            if measure_args:
                spec.measures.append((measure_args[0].name, op))
                used.add(measure_args[0].name)
            elif dim_args and op == "distinct count":
                spec.measures.append((dim_args[0].name, op))
                used.add(dim_args[0].name)
            elif op in ("count", "distinct count"):
                spec.measures.append((None, "count"))
            else:
                pending_agg = op
        elif intent.kind == "Grouping":
            for attr in bound:
                if attr.is_measure():
                    spec.measures.append((attr.name, default_agg))
                elif attr.is_temporal():
                    spec.temporal_axis = spec.temporal_axis or attr.name
                elif attr.is_geospatial() and spec.geo_axis is None:
                    spec.geo_axis = attr.name  # geospatial group-by renders as a map
                else:
                    spec.group_bys.append(attr.name)
                used.add(attr.name)
        elif intent.kind == "Correlation":
            pair = [a.name for a in bound if a.is_measure()]
            if len(pair) >= 2:
                spec.correlation_pair = (pair[0], pair[1])
                used.update(pair[:2])
        elif intent.kind == "FilterLimit":
            op = intent.operator or ""
            if op in _LIMIT_DIRECTION:
                n = int(intent.numbers[0]) if intent.numbers else _LIMIT_DEFAULT_N[op]
                spec.limit = (_LIMIT_DIRECTION[op], max(1, n))
                for attr in bound:
                    if attr.is_measure():
                        spec.measures.append((attr.name, default_agg))
                    else:
                        spec.group_bys.append(attr.name)
                    used.add(attr.name)
            elif op == "between" and len(intent.numbers) >= 2:
                lo, hi = sorted(intent.numbers[:2])
                target = next((a for a in bound if a.is_measure()), None)
                if target is None and _year_like(lo) and _year_like(hi) and first_temporal:
                    spec.filters.append(Filter(first_temporal, "year_between", (lo, hi)))
                elif target is not None:
                    spec.filters.append(Filter(target.name, "between", (lo, hi)))
                    used.add(target.name)
                else:
                    pending_filters.append(("between", (lo, hi)))
            elif op in _COMPARATORS and intent.numbers:
                target = next((a for a in bound if a.is_measure()), None)
                if target is not None:
                    spec.filters.append(Filter(target.name, _COMPARATORS[op],
                                               intent.numbers[0]))
                    used.add(target.name)
                else:
                    pending_filters.append((_COMPARATORS[op], (intent.numbers[0],)))
            elif op == "filter to" and intent.arguments:
                for arg in intent.arguments:
                    vm = next((m for m in matches
                               if m.query_ngram == arg and m.value is not None), None)
                    if vm:
                        spec.filters.append(Filter(vm.attribute, "==", vm.value))
                        used.add(vm.attribute)
        elif intent.kind == "Temporal":
            years = [n for n in intent.numbers if _year_like(n)]
            axis = next((a.name for a in bound if a.is_temporal()), None) or first_temporal
            if years and axis:
                if len(years) == 1:
                    spec.filters.append(Filter(axis, "year==", years[0]))
                else:
                    lo, hi = sorted(years)[0], sorted(years)[-1]
                    spec.filters.append(Filter(axis, "year_between", (lo, hi)))
            elif axis:
                spec.temporal_axis = spec.temporal_axis or axis
        elif intent.kind == "Geospatial":
            placed = False
            for arg in intent.arguments:
                vm = next((m for m in matches
                           if m.query_ngram == arg and m.value is not None
                           and m.score >= 1.0), None)
                if vm:
                    spec.filters.append(Filter(vm.attribute, "==", vm.value))
                    used.add(vm.attribute)
                    placed = True
            if not placed and first_geo:
                spec.geo_axis = spec.geo_axis or first_geo
                used.add(first_geo)

    # Mentioned fields not consumed by an intent: best attribute per n-gram.
    # Dimensions only join the grouping when the intents produced none —
    # otherwise plain mentions like "movie" would stack extra channels.
    intent_structured = bool(spec.group_bys or spec.temporal_axis or spec.geo_axis)
    priority = {"exact": 5, "synonym": 4, "fuzzy": 3, "related": 2, "taxonomy": 1}
    best_by_ngram: dict[str, FieldMatch] = {}
    for m in matches:
        if m.value is not None:
            continue
        current = best_by_ngram.get(m.query_ngram)
        if current is None or (m.score, priority[m.match_kind]) > (
                current.score, priority[current.match_kind]):
            best_by_ngram[m.query_ngram] = m
    mention_order: list[str] = []
    for m in sorted(best_by_ngram.values(), key=lambda m: (-m.score, m.query_ngram)):
        if m.attribute not in mention_order:
            mention_order.append(m.attribute)
    for name in mention_order:
        attr = source.attribute(name)
        if name in used:
            continue
        if attr.is_measure():
            if pending_agg is not None:
                spec.measures.append((name, pending_agg))
                pending_agg = None
            else:
                spec.measures.append((name, default_agg))
            used.add(name)
        elif attr.is_temporal():
            continue  # temporal axes only come from Temporal intents
        elif not intent_structured and name not in spec.group_bys:
            if attr.is_geospatial() and spec.geo_axis is None:
                spec.geo_axis = name
            else:
                spec.group_bys.append(name)
            used.add(name)

    # Exact, unconsumed value matches become equality filters.
    filtered_attrs = {f.attribute for f in spec.filters}
    for m in matches:
        if m.value is not None and m.score >= 1.0 and m.attribute not in filtered_attrs:
            if m.attribute in spec.group_bys or m.attribute in used:
                continue
            spec.filters.append(Filter(m.attribute, "==", m.value))
            filtered_attrs.add(m.attribute)

    for op, numbers in pending_filters:
        target = spec.measures[0][0] if spec.measures and spec.measures[0][0] else None
        if target:
            value = numbers if op == "between" else numbers[0]
            spec.filters.append(Filter(target, op, value))

    if pending_agg is not None and not spec.measures:
        spec.measures.append((None, "count"))

    # Deduplicate while preserving order.
    spec.group_bys = list(dict.fromkeys(
        g for g in spec.group_bys
        if g != spec.temporal_axis and g != spec.geo_axis))
    seen_measures: set[tuple] = set()
    spec.measures = [m for m in spec.measures
                     if not (m in seen_measures or seen_measures.add(m))]

    if spec.correlation_pair is None and not spec.measures:
        if spec.group_bys or spec.temporal_axis or spec.geo_axis:
            spec.measures.append((None, "count"))
        else:
            raise SpecUnresolvable(
                f"query does not resolve to any attribute of source {source.id!r}")
    return spec


# --------------------------------------------------------------------------
# execution

def _cell_number(cell: str) -> float | None:
    cell = cell.strip()
    if not cell:
        return None
    try:
        return float(cell.replace(",", ""))
    except ValueError:
        return None


def _check_filter_types(spec: AnalyticalSpec, source: DataSource) -> None:
    for f in spec.filters:
        attr = source.attribute(f.attribute)
        if f.op in (">=", "<=", ">", "<", "between") and attr.data_type not in ("numeric",):
            raise ExecutionError(
                f"filter {f.op!r} needs a numeric attribute, {f.attribute!r} is {attr.data_type}")
        if f.op in ("year==", "year_between") and not attr.is_temporal():
            raise ExecutionError(
                f"year filter needs a temporal attribute, {f.attribute!r} is {attr.data_type}")


def _row_passes(row_value: str, f: Filter) -> bool:
    if f.op == "==":
        return row_value.strip().lower() == str(f.value).strip().lower()
    if f.op in ("year==", "year_between"):
        parsed = parse_date(row_value)
        if parsed is None:
            return False
        if f.op == "year==":
            return parsed.year == int(f.value)
        lo, hi = f.value
        return int(lo) <= parsed.year <= int(hi)
    number = _cell_number(row_value)
    if number is None:
        return False
    if f.op == ">=":
        return number >= f.value
    if f.op == "<=":
        return number <= f.value
    if f.op == ">":
        return number > f.value
    if f.op == "<":
        return number < f.value
    if f.op == "between":
        lo, hi = f.value
        return lo <= number <= hi
    raise ExecutionError(f"unknown filter op {f.op!r}")


def _aggregate(agg: str, cells: list[str]) -> float:
    numbers = [n for n in (_cell_number(c) for c in cells) if n is not None]
    if agg == "count":
        return float(len(cells))
    if agg == "distinct count":
        return float(len({c.strip() for c in cells if c.strip()}))
    if not numbers:
        return 0.0
    if agg == "sum":
        return float(sum(numbers))
    if agg == "average":
        return sum(numbers) / len(numbers)
    if agg == "median":
        return float(statistics.median(numbers))
    raise ExecutionError(f"unknown aggregate {agg!r}")


def _tidy(value: float) -> float | int:
    return int(value) if float(value).is_integer() else value


def measure_label(attribute: str | None, agg: str) -> str:
    return attribute if attribute is not None else "Count"


def _temporal_bucket(values: list[str]) -> dict[str, str]:
    """Map raw temporal cells to bucket labels (year when the span exceeds
    three years, else calendar month)."""
    parsed = {}
    for v in set(values):
        d = parse_date(v)
        if d is not None:
            parsed[v] = d
    if not parsed:
        return {}
    years = [d.year for d in parsed.values()]
    by_year = (max(years) - min(years)) > 3
    return {v: (f"{d.year}" if by_year else f"{d.year}-{d.month:02d}")
            for v, d in parsed.items()}


def execute_spec(spec: AnalyticalSpec, source: DataSource) -> list[dict]:
    """Filters, then group-by aggregation, then sort, then limit.

    Correlation specs yield the raw two-column measure pairs instead. Rows are
    ordered by ascending group key, except limited results which keep their
    measure ordering.
    """
    _check_filter_types(spec, source)
    col_index = {a.name: i for i, a in enumerate(source.attributes)}
    rows = source.table
    for f in spec.filters:
        idx = col_index[f.attribute]
        rows = [r for r in rows if _row_passes(r[idx], f)]

    if spec.correlation_pair:
        a, b = spec.correlation_pair
        ia, ib = col_index[a], col_index[b]
        out = []
        for r in rows:
            va, vb = _cell_number(r[ia]), _cell_number(r[ib])
            if va is not None and vb is not None:
                out.append({a: _tidy(va), b: _tidy(vb)})
        return out

    group_attrs: list[str] = []
    if spec.temporal_axis:
        group_attrs.append(spec.temporal_axis)
    if spec.geo_axis:
        group_attrs.append(spec.geo_axis)
    group_attrs.extend(spec.group_bys)

    buckets: dict[str, dict[str, str]] = {}
    if spec.temporal_axis:
        idx = col_index[spec.temporal_axis]
        buckets[spec.temporal_axis] = _temporal_bucket([r[idx] for r in rows])

    def group_key(row: list[str]) -> tuple:
        key = []
        for attr in group_attrs:
            raw = row[col_index[attr]]
            if attr in buckets:
                key.append(buckets[attr].get(raw, ""))
            else:
                key.append(raw)
        return tuple(key)

    grouped: dict[tuple, list[list[str]]] = {}
    for r in rows:
        key = group_key(r)
        if any(part == "" for part in key):
            continue  # blank cells drop out of grouping
        grouped.setdefault(key, []).append(r)
    if not group_attrs:
        grouped = {(): rows} if rows else {}

    measures = spec.measures or [(None, "count")]
    result = []
    for key in grouped:
        record: dict = {attr: key[i] for i, attr in enumerate(group_attrs)}
        for attribute, agg in measures:
            cells = ([r[col_index[attribute]] for r in grouped[key]]
                     if attribute else ["" for _ in grouped[key]])
            if attribute is None:
                record["Count"] = len(grouped[key])
            else:
                record[measure_label(attribute, agg)] = _tidy(_aggregate(agg, cells))
        result.append(record)

    first_measure = measure_label(*measures[0])
    if spec.limit:
        direction, n = spec.limit
        reverse = direction == "top"
        result.sort(key=lambda rec: (-rec[first_measure] if reverse else rec[first_measure],
                                     tuple(str(rec[a]) for a in group_attrs)))
        result = result[:n]
    else:
        result.sort(key=lambda rec: tuple(str(rec[a]) for a in group_attrs))
    return result


# --------------------------------------------------------------------------
# mark/encoding selection

def choose_encoding(spec: AnalyticalSpec, source: DataSource,
                    result: list[dict]) -> ChartSpec:
    """Decision table mapping the executed spec onto one of the four marks.

    Needing more than the three channels (x, y, color) is an error, reported
    with the offending attributes.
    """
    units = {}
    for attr in source.attributes:
        if attr.unit_semantics:
            units[attr.name] = attr.unit_semantics

    def enc(attribute: str | None, agg: str | None = None) -> Encoding:
        if attribute is None:
            return Encoding(field="Count", data_type="numeric", aggregate="count")
        a = source.attribute(attribute)
        dtype = "temporal" if a.is_temporal() else a.data_type
        return Encoding(field=attribute, data_type=dtype, aggregate=agg)

    if spec.correlation_pair:
        m1, m2 = spec.correlation_pair
        return ChartSpec(
            mark="point",
            encodings={"x": enc(m1), "y": enc(m2)},
            result_table=result, title=f"{m1} vs {m2}", units=units)

    measures = spec.measures or [(None, "count")]
    dims = list(spec.group_bys)
    m_attr, m_agg = measures[0]
    m_field = measure_label(m_attr, m_agg)

    if spec.temporal_axis:
        extra = dims[1:] if len(dims) > 1 else []
        if len(measures) > 1 or extra:
            raise EncodingError(
                "line charts support one measure and one series dimension within "
                f"three channels; cannot also encode {extra or [m for m, _ in measures[1:]]}")
        encodings = {"x": Encoding(field=spec.temporal_axis, data_type="temporal"),
                     "y": enc(m_attr, m_agg)}
        title = f"{_title_measure(m_attr, m_agg)} over {spec.temporal_axis}"
        if dims:
            encodings["color"] = enc(dims[0])
            title += f" by {dims[0]}"
        return ChartSpec(mark="line", encodings=encodings,
                         result_table=result, title=title, units=units)

    if spec.geo_axis:
        if dims or len(measures) > 1:
            raise EncodingError(
                "geoshape maps encode a single region dimension and one measure; "
                f"cannot also encode {dims or [m for m, _ in measures[1:]]}")
        geo_values = {str(rec.get(spec.geo_axis, "")) for rec in result}
        from .corpus import load_gazetteer
        gaz = load_gazetteer()
        geometry = "us-states" if geo_values and all(
            gaz.is_us_state(v) for v in geo_values) else None
        return ChartSpec(
            mark="geoshape",
            encodings={"color": enc(m_attr, m_agg)},
            result_table=result,
            title=f"{_title_measure(m_attr, m_agg)} across {spec.geo_axis}",
            units=units,
            geo={"field": spec.geo_axis, "geometrySet": geometry})

    if len(measures) >= 2 and not dims:
        a1, g1 = measures[0]
        a2, g2 = measures[1]
        if len(measures) > 2:
            raise EncodingError("scatterplots encode exactly two measures on x/y; "
                                f"got {len(measures)}")
        return ChartSpec(
            mark="point",
            encodings={"x": enc(a1, g1), "y": enc(a2, g2)},
            result_table=result, title=f"{a1} vs {a2}", units=units)

    if dims:
        if len(dims) > 2:
            raise EncodingError(
                f"bar charts support at most two dimensions (x + color); got {dims}")
        if len(measures) > 1:
            raise EncodingError(
                "bar charts with a color dimension cannot encode a second measure")
        encodings = {"x": enc(dims[0]), "y": enc(m_attr, m_agg)}
        title = f"{_title_measure(m_attr, m_agg)} by {dims[0]}"
        if len(dims) == 2:
            encodings["color"] = enc(dims[1])
            title += f" and {dims[1]}"
        return ChartSpec(mark="bar", encodings=encodings,
                         result_table=result, title=title, units=units)

    return ChartSpec(mark="bar", encodings={"y": enc(m_attr, m_agg)},
                     result_table=result,
                     title=_title_measure(m_attr, m_agg), units=units)


def _title_measure(attribute: str | None, agg: str) -> str:
    if attribute is None:
        return "Count of Records"
    if agg == "sum":
        return attribute
    return f"{agg.title()} {attribute}"


# --------------------------------------------------------------------------
# key statistics and summary text

def format_value(value: float, unit: str | None = None) -> str:
    if float(value).is_integer():
        text = str(int(value))
    else:
        text = f"{value:.2f}".rstrip("0").rstrip(".")
    if unit == "USD":
        return f"${text}"
    return text


def pearson(xs: list[float], ys: list[float]) -> float | None:
    """Pearson correlation coefficient; None when undefined (fewer than two
    points or zero variance)."""
    n = len(xs)
    if n < 2 or n != len(ys):
        return None
    mean_x = sum(xs) / n
    mean_y = sum(ys) / n
    cov = sum((x - mean_x) * (y - mean_y) for x, y in zip(xs, ys))
    var_x = sum((x - mean_x) ** 2 for x in xs)
    var_y = sum((y - mean_y) ** 2 for y in ys)
    if var_x == 0 or var_y == 0:
        return None
    return cov / (var_x * var_y) ** 0.5


def compute_key_stats(chart: ChartSpec) -> KeyStats:
    """Statistic sentences per mark: min/max/mean for bars and maps, Pearson's
    r for scatterplots, per-series first-to-last deltas for lines."""
    if not chart.result_table:
        raise ExecutionError("cannot compute key statistics of an empty result")
    if chart.mark in ("bar", "geoshape"):
        return _bar_stats(chart)
    if chart.mark == "point":
        return _point_stats(chart)
    if chart.mark == "line":
        return _line_stats(chart)
    raise ExecutionError(f"unknown mark {chart.mark!r}")


def _bar_stats(chart: ChartSpec) -> KeyStats:
    if chart.mark == "geoshape":
        measure = chart.encodings["color"].field
        category = chart.geo["field"] if chart.geo else None
    else:
        measure = chart.encodings["y"].field
        x = chart.encodings.get("x")
        category = x.field if x else None
    unit = chart.units.get(measure)
    values = [(str(rec.get(category, "")), float(rec[measure]))
              for rec in chart.result_table]
    mean = sum(v for _, v in values) / len(values)
    if category is None:
        value = values[0][1]
        return KeyStats(lines=[f"Total {measure} is: {format_value(value, unit)}"],
                        stats={"min": value, "max": value, "mean": value})
    min_cat, min_val = sorted(values, key=lambda cv: (cv[1], cv[0]))[0]
    max_cat, max_val = sorted(values, key=lambda cv: (-cv[1], cv[0]))[0]
    lines = [
        f"{category}: {min_cat} has a minimum value of {format_value(min_val, unit)} for {measure}",
        f"{category}: {max_cat} has the maximum value of {format_value(max_val, unit)} for {measure}",
        f"Average {measure} across {category} is: {format_value(mean, unit)}",
    ]
    return KeyStats(lines=lines, stats={"min": min_val, "max": max_val, "mean": mean})


def _point_stats(chart: ChartSpec) -> KeyStats:
    x_field = chart.encodings["x"].field
    y_field = chart.encodings["y"].field
    xs = [float(rec[x_field]) for rec in chart.result_table]
    ys = [float(rec[y_field]) for rec in chart.result_table]
    r = pearson(xs, ys)
    if r is None:
        return KeyStats(
            lines=[f"Correlation between {x_field} and {y_field} is undefined "
                   "(needs at least two points with varying values)"],
            stats={})
    return KeyStats(
        lines=[f"Pearson correlation between {x_field} and {y_field} is: {round(r, 2)}"],
        stats={"pearsonR": r})


def _line_stats(chart: ChartSpec) -> KeyStats:
    measure = chart.encodings["y"].field
    time_field = chart.encodings["x"].field
    unit = chart.units.get(measure)
    color = chart.encodings.get("color")
    series: dict[str, list[tuple[str, float]]] = {}
    for rec in chart.result_table:
        label = str(rec[color.field]) if color else ""
        series.setdefault(label, []).append((str(rec[time_field]), float(rec[measure])))
    lines = []
    stats: dict[str, float] = {}
    for label in sorted(series):
        points = sorted(series[label], key=lambda p: p[0])
        first, last = points[0][1], points[-1][1]
        delta = last - first
        direction = "flat" if abs(delta) < FLAT_EPSILON else (
            "rising" if delta > 0 else "falling")
        subject = f"{measure} for {color.field}: {label}" if label else measure
        lines.append(
            f"{subject} is {direction} from {format_value(first, unit)} to "
            f"{format_value(last, unit)} over {time_field}")
        stats[f"trendDelta:{label}" if label else "trendDelta"] = delta
    return KeyStats(lines=lines, stats=stats)


# --------------------------------------------------------------------------
# summary rephrasing with hallucination guard

class HttpSummaryClient:
    """Minimal text-generation client: POST {"prompt": ...} -> {"text": ...}."""

    def __init__(self, endpoint: str, api_key: str | None = None,
                 timeout: float = 10.0):
        self.endpoint = endpoint
        self.api_key = api_key
        self.timeout = timeout

    def generate(self, prompt: str) -> str:
        headers = {"Content-Type": "application/json"}
        if self.api_key:
            headers["Authorization"] = f"Bearer {self.api_key}"
        response = requests.post(self.endpoint, json={"prompt": prompt},
                                 headers=headers, timeout=self.timeout)
        response.raise_for_status()
        return str(response.json()["text"])


def _numbers_in(text: str) -> list[float]:
    return [float(m.replace(",", "")) for m in _NUMBER_IN_TEXT.findall(text)]


def rephrase_summary(stats: KeyStats, client=None) -> SummaryResult:
    """Rephrase the key-statistics block through the configured client.

    Without a client the joined lines are returned unchanged. A client response
    is accepted only if every number it contains already appears in the
    statistics (guards against invented figures); otherwise the verbatim lines
    are used and a warning is set.
    """
    base = stats.text()
    if client is None:
        return SummaryResult(text=base, used_client=False)
    prompt = PROMPT_TEMPLATE.format(key_stats=base)
    try:
        generated = client.generate(prompt)
    except Exception as exc:  # noqa: BLE001 - any client failure falls back
        logger.warning("summary client failed: %s", exc)
        return SummaryResult(text=base, used_client=False,
                             warning=f"summary client failed: {exc}")
    allowed = set(_numbers_in(base))
    allowed.update(abs(v) for v in stats.stats.values())
    allowed.update(round(abs(v), 2) for v in stats.stats.values())
    for number in _numbers_in(generated):
        if not any(abs(number - a) <= 1e-9 for a in allowed):
            return SummaryResult(
                text=base, used_client=False,
                warning=f"summary client mentioned a number not in the statistics "
                        f"({format_value(number)}); fell back to the template")
    return SummaryResult(text=generated, used_client=True)


# --------------------------------------------------------------------------
# query suggestions

def suggest_queries(source: DataSource, k: int) -> list[str]:
    """Template-based suggestions ranked by measure variance (descending),
    then paired-attribute cardinality (ascending)."""
    if k <= 0 or not source.measures():
        return []
    variance: dict[str, float] = {}
    for m in source.measures():
        values = source.numeric_values(m.name)
        variance[m.name] = statistics.pvariance(values) if len(values) > 1 else 0.0

    agg = source.default_aggregate
    candidates: list[tuple[float, int, int, str]] = []
    plain_dims = [d for d in source.dimensions()
                  if not d.is_temporal() and not d.is_geospatial()]
    for m in source.measures():
        for d in plain_dims:
            cardinality = len(source.distinct_values(d.name, 100))
            if cardinality > 12:
                continue
            candidates.append((-variance[m.name], cardinality, 0,
                               f"{agg} of {m.name} by {d.name}"))
        for t in (a for a in source.attributes if a.is_temporal()):
            cardinality = len(source.distinct_values(t.name, 100))
            candidates.append((-variance[m.name], cardinality, 1,
                               f"trend of {m.name} over {t.name}"))
        for g in (a for a in source.attributes if a.is_geospatial()):
            cardinality = len(source.distinct_values(g.name, 100))
            candidates.append((-variance[m.name], cardinality, 2,
                               f"{m.name} across {g.name}"))
    candidates.sort()
    out: list[str] = []
    for _, _, _, text in candidates:
        if text not in out:
            out.append(text)
        if len(out) >= k:
            break
    return out
