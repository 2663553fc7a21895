import random
from datetime import date

import pytest

from hybridsearch.analysis import encode
from hybridsearch.corpus import VizDocument
from hybridsearch.index import RankedEntry, RankedResults
from hybridsearch.vizsearch import (FacetState, apply_facets, compute_facets,
                                    design_search, detect_chart_types,
                                    exploratory_search, load_chart_lexicon)
from .oracles import bm25_ranking


@pytest.fixture(scope="module")
def lexicon():
    return load_chart_lexicon()


# -- chart-type detection -----------------------------------------------------

def test_detect_treemap(lexicon):
    assert detect_chart_types(encode("treemap stocks"), lexicon) == {"treemap"}


def test_detect_correlation_alludes_to_scatterplot(lexicon):
    detected = detect_chart_types(encode("covid correlations"), lexicon)
    assert "scatterplot" in detected


def test_detect_combination(lexicon):
    detected = detect_chart_types(encode("bar and line"), lexicon)
    assert {"bar", "line"} <= detected


def test_detect_square_chart_phrase(lexicon):
    assert "treemap" in detect_chart_types(encode("square chart"), lexicon)


def test_detect_fuzzy_typo(lexicon):
    assert "treemap" in detect_chart_types(encode("treemaps"), lexicon)


def test_detected_subset_of_lexicon_ids(lexicon):
    queries = ["maps showing covid trends", "pie donut", "histogram distribution",
               "sankey flows", "elections"]
    for q in queries:
        assert detect_chart_types(encode(q), lexicon) <= lexicon.ids()


def test_required_ids_present(lexicon):
    assert {"bar", "line", "scatterplot", "map", "treemap",
            "heatmap", "pie"} <= lexicon.ids()


# -- exploratory + design search ----------------------------------------------

def test_exploratory_keyword_match(engine):
    results = exploratory_search("world population", engine.viz_index)
    assert results.entries
    top = engine.viz_by_id[results.entries[0].doc_id]
    text = (top.title + " " + " ".join(top.tags)).lower()
    assert "population" in text


def test_exploratory_no_overlap_empty(engine):
    assert exploratory_search("qqqqxxxx zzzzyyyy", engine.viz_index).entries == []


def test_exploratory_limit(engine):
    assert len(exploratory_search("elections", engine.viz_index, limit=7)) == 7


def test_exploratory_matches_bruteforce_oracle(engine, lexicon):
    """Over a 50-doc corpus the engine ordering equals exhaustive scoring."""
    from hybridsearch.index import build_index
    rng = random.Random(13)
    topics = ["election results", "stock market", "covid cases", "population",
              "olympics medals", "crime rates", "movie budgets"]
    docs = {}
    for i in range(50):
        words = []
        for _ in range(rng.randint(1, 3)):
            words.extend(rng.choice(topics).split())
        docs[f"v{i:02d}"] = " ".join(words)
    idx = build_index([(k, {"title": v}) for k, v in docs.items()])
    for query in ["election stock", "covid population", "olympics",
                  "movie crime rates", "stockz"]:
        got = exploratory_search(query, idx, limit=50)
        assert got.ids() == bm25_ranking(docs, query.lower().split(),
                                         idx.params.k1, idx.params.b)


def test_design_search_treemaps_first(engine, lexicon):
    results = design_search("treemap stocks", engine.viz_index, lexicon)
    seen_non_matching = False
    for entry in results.entries:
        doc = engine.viz_by_id[entry.doc_id]
        if "treemap" in doc.chart_types:
            assert not seen_non_matching, "treemap doc ranked below a non-treemap doc"
        else:
            seen_non_matching = True


def test_design_search_strict_mode(engine, lexicon):
    results = design_search("treemap stocks", engine.viz_index, lexicon, strict=True)
    assert results.entries
    for entry in results.entries:
        assert "treemap" in engine.viz_by_id[entry.doc_id].chart_types


def test_design_search_square_chart_surfaces_treemaps(engine, lexicon):
    results = design_search("square chart", engine.viz_index, lexicon)
    assert results.entries
    assert "treemap" in engine.viz_by_id[results.entries[0].doc_id].chart_types


def test_design_without_detection_equals_exploratory(engine, lexicon):
    a = exploratory_search("elections", engine.viz_index)
    b = design_search("elections", engine.viz_index, lexicon)
    assert a.ids() == b.ids()
    assert [e.raw_score for e in a] == [e.raw_score for e in b]


def test_design_search_raw_scores_non_increasing(engine, lexicon):
    results = design_search("treemap stocks", engine.viz_index, lexicon)
    raws = [e.raw_score for e in results]
    assert raws == sorted(raws, reverse=True)


# -- facets ---------------------------------------------------------------------

def doc(i, author="A", charts=("bar",), when=date(2020, 6, 1)):
    return VizDocument(id=f"d{i:03d}", title=f"T{i}", author_name=author,
                       chart_types=list(charts), created_date=when)


def test_author_counts():
    summary = compute_facets([doc(1), doc(2), doc(3)])
    assert summary.author_counts == {"A": 3}


def test_empty_results_empty_summary():
    summary = compute_facets([])
    assert summary.author_counts == {} and summary.chart_type_counts == {} \
        and summary.date_histogram == {}


def test_multi_chart_doc_counts_twice():
    summary = compute_facets([doc(1, charts=("bar", "line"))])
    assert summary.chart_type_counts == {"bar": 1, "line": 1}


def test_single_valued_counts_sum_to_size():
    docs = [doc(i, author=f"A{i % 3}", when=date(2019 + i % 2, 1 + i % 12, 3))
            for i in range(20)]
    summary = compute_facets(docs)
    assert sum(summary.author_counts.values()) == 20
    assert sum(summary.date_histogram.values()) == 20


def ranked_of(docs):
    return RankedResults(entries=[
        RankedEntry(d.id, 1.0 - i * 0.01, 1.0 - i * 0.01)
        for i, d in enumerate(docs)])


def test_apply_empty_state_identity():
    docs = [doc(i) for i in range(5)]
    by_id = {d.id: d for d in docs}
    results = ranked_of(docs)
    assert apply_facets(results, by_id, FacetState()).ids() == results.ids()


def test_apply_chart_type_filter():
    docs = [doc(1, charts=("treemap",)), doc(2, charts=("bar",)),
            doc(3, charts=("treemap", "line"))]
    by_id = {d.id: d for d in docs}
    out = apply_facets(ranked_of(docs), by_id,
                       FacetState(selected_chart_types={"treemap"}))
    assert out.ids() == ["d001", "d003"]


def test_apply_date_range_preserves_order():
    docs = [doc(1, when=date(2019, 5, 1)), doc(2, when=date(2020, 5, 1)),
            doc(3, when=date(2020, 11, 1)), doc(4, when=date(2021, 1, 1))]
    by_id = {d.id: d for d in docs}
    out = apply_facets(ranked_of(docs), by_id,
                       FacetState(date_range=(date(2020, 1, 1), date(2020, 12, 31))))
    assert out.ids() == ["d002", "d003"]


def test_facets_after_filter_agree():
    docs = [doc(i, author=f"A{i % 2}") for i in range(8)]
    by_id = {d.id: d for d in docs}
    out = apply_facets(ranked_of(docs), by_id,
                       FacetState(selected_authors={"A1"}))
    summary = compute_facets([by_id[e.doc_id] for e in out])
    assert summary.author_counts == {"A1": len(out)}


def random_doc(rng, i):
    return VizDocument(
        id=f"r{i:04d}", title=f"T{i}",
        author_name=rng.choice(["A", "B", "C", "D"]),
        chart_types=rng.sample(["bar", "line", "map", "treemap", "pie"],
                               k=rng.randint(1, 2)),
        created_date=date(rng.randint(2015, 2023), rng.randint(1, 12),
                          rng.randint(1, 28)))


def random_state(rng):
    state = FacetState()
    if rng.random() < 0.5:
        state.selected_authors = set(rng.sample(["A", "B", "C", "D", "E"],
                                                rng.randint(1, 3)))
    if rng.random() < 0.5:
        state.selected_chart_types = set(rng.sample(
            ["bar", "line", "map", "treemap", "pie"], rng.randint(1, 3)))
    if rng.random() < 0.5:
        y1, y2 = sorted(rng.sample(range(2015, 2024), 2))
        state.date_range = (date(y1, 1, 1), date(y2, 12, 31))
    return state


def test_widening_a_facet_returns_a_superset():
    rng = random.Random(23)
    docs = [random_doc(rng, i) for i in range(30)]
    by_id = {d.id: d for d in docs}
    results = ranked_of(docs)
    narrow = apply_facets(results, by_id,
                          FacetState(selected_chart_types={"treemap"}))
    wide = apply_facets(results, by_id,
                        FacetState(selected_chart_types={"treemap", "bar"}))
    assert set(narrow.ids()) <= set(wide.ids())
    no_filter = apply_facets(results, by_id, FacetState())
    assert set(wide.ids()) <= set(no_filter.ids())


def test_facet_idempotence_order_and_counts_randomized():
    rng = random.Random(17)
    for _ in range(200):
        docs = [random_doc(rng, i) for i in range(rng.randint(0, 40))]
        by_id = {d.id: d for d in docs}
        results = ranked_of(docs)
        state = random_state(rng)
        once = apply_facets(results, by_id, state)
        twice = apply_facets(once, by_id, state)
        assert once.ids() == twice.ids()                      # idempotent
        positions = {e.doc_id: i for i, e in enumerate(results.entries)}
        order = [positions[e.doc_id] for e in once.entries]
        assert order == sorted(order)                          # order preserved
        summary = compute_facets([by_id[e.doc_id] for e in once.entries])
        assert sum(summary.author_counts.values()) == len(once.entries)
        assert sum(summary.date_histogram.values()) == len(once.entries)
