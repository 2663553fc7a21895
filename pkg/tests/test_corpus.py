import json

import pytest

from hybridsearch.corpus import (Attribute, enrich_attribute, infer_field_role,
                                 load_data_source, load_gazetteer, load_lexicon,
                                 load_viz_corpus)
from hybridsearch.errors import IngestionError, SchemaError


@pytest.fixture(scope="module")
def lexicon():
    return load_lexicon()


@pytest.fixture(scope="module")
def gazetteer():
    return load_gazetteer()


def write_source(tmp_path, csv_text, meta):
    csv_path = tmp_path / "t.csv"
    meta_path = tmp_path / "t.json"
    csv_path.write_text(csv_text)
    meta_path.write_text(json.dumps(meta))
    return csv_path, meta_path


# -- load_data_source --------------------------------------------------------

def test_load_four_column_csv(tmp_path, gazetteer):
    header = "a,b,c,d\n"
    rows = "".join(f"r{i},x,{i},2020-01-0{i % 9 + 1}\n" for i in range(300))
    csv_path, meta_path = write_source(tmp_path, header + rows,
                                       {"name": "T", "attributes": []})
    source = load_data_source(csv_path, meta_path, gazetteer)
    assert len(source.attributes) == 4
    assert len(source.table) == 300


def test_load_empty_body(tmp_path, gazetteer):
    csv_path, meta_path = write_source(tmp_path, "x,y\n", {"name": "T"})
    source = load_data_source(csv_path, meta_path, gazetteer)
    assert len(source.table) == 0
    assert [a.name for a in source.attributes] == ["x", "y"]


def test_bundled_sales_sample(engine):
    sales = engine.sources_by_id["sales"]
    assert [(a.name, a.role, a.data_type) for a in sales.attributes] == [
        ("Region", "dimension", "text"), ("Sales", "measure", "numeric")]
    assert sales.table == [["Central", "220"], ["East", "225"],
                           ["West", "235"], ["South", "240"]]


def test_ragged_row_names_row_number(tmp_path):
    csv_path, meta_path = write_source(tmp_path, "a,b\n1,2\n3\n", {"name": "T"})
    with pytest.raises(IngestionError, match="row 3"):
        load_data_source(csv_path, meta_path)


def test_metadata_column_not_in_csv(tmp_path):
    csv_path, meta_path = write_source(
        tmp_path, "a,b\n1,2\n",
        {"name": "T", "attributes": [{"name": "zz", "dataType": "text"}]})
    with pytest.raises(SchemaError, match="zz"):
        load_data_source(csv_path, meta_path)


def test_metadata_overrides_inference(tmp_path):
    csv_path, meta_path = write_source(
        tmp_path, "year,v\n2016,1\n2017,2\n",
        {"name": "T", "attributes": [
            {"name": "year", "dataType": "temporal", "role": "dimension"}]})
    source = load_data_source(csv_path, meta_path)
    assert source.attribute("year").data_type == "temporal"
    assert source.attribute("v").role == "measure"


def test_measure_must_be_numeric(tmp_path):
    csv_path, meta_path = write_source(
        tmp_path, "a\nx\n",
        {"name": "T", "attributes": [{"name": "a", "dataType": "text",
                                      "role": "measure"}]})
    with pytest.raises(SchemaError, match="numeric"):
        load_data_source(csv_path, meta_path)


def test_metadata_roundtrip(tmp_path, gazetteer):
    """Serializing a loaded source's metadata and reloading it yields the
    identical attribute list."""
    csv_path, meta_path = write_source(
        tmp_path, "Region,Sales\nEast,10\n",
        {"name": "T", "attributes": [
            {"name": "Sales", "dataType": "numeric", "role": "measure",
             "unitSemantics": "USD", "synonyms": ["revenue"]}]})
    source = load_data_source(csv_path, meta_path, gazetteer)
    meta_path.write_text(json.dumps(source.metadata_dict()))
    again = load_data_source(csv_path, meta_path, gazetteer)
    assert again.attributes == source.attributes


# -- infer_field_role --------------------------------------------------------

def test_infer_numeric_measure():
    assert infer_field_role(["10", "20", "5"]) == ("numeric", "measure")


def test_infer_iso_dates():
    assert infer_field_role(["2020-01-01", "2021-03-05"]) == ("temporal", "dimension")


def test_infer_geospatial_from_gazetteer(gazetteer):
    # oracle: every one of these is in the shipped city list
    cities = ["Seattle", "Austin", "Boston"]
    assert all(c.lower() in gazetteer.cities for c in cities)
    assert infer_field_role(cities, gazetteer) == ("geospatial", "dimension")


def test_infer_boolean_flags():
    assert infer_field_role(["true", "false", "true"]) == ("Boolean", "dimension")
    assert infer_field_role(["0", "1", "1"]) == ("Boolean", "dimension")


def test_infer_text_fallback():
    assert infer_field_role(["alpha", "beta", "1"]) == ("text", "dimension")


def test_infer_blank_column_raises():
    with pytest.raises(IngestionError):
        infer_field_role(["", "  ", ""])


def test_infer_deterministic_with_dirty_cells():
    values = ["10", "20", "n/a"] + ["30"] * 60  # >95% numeric
    assert infer_field_role(values) == ("numeric", "measure")


# -- enrichment ---------------------------------------------------------------

def test_enrich_movie_gets_film(lexicon):
    attr = enrich_attribute(Attribute(name="movie"), lexicon)
    assert "film" in attr.synonyms


def test_enrich_crime_gets_related_offenses(lexicon):
    attr = enrich_attribute(Attribute(name="Crime"), lexicon)
    assert "theft" in attr.related_terms
    assert "burglary" in attr.related_terms


def test_enrich_unknown_name_is_noop(lexicon):
    attr = enrich_attribute(Attribute(name="zzxqy"), lexicon)
    assert attr.synonyms == [] and attr.related_terms == []


def test_enrich_idempotent(lexicon):
    once = enrich_attribute(Attribute(name="movie"), lexicon)
    twice = enrich_attribute(once, lexicon)
    assert once == twice


def test_enrichment_taxonomy_span_at_most_two_levels(lexicon):
    tax = lexicon.taxonomy
    for node in tax.parent:
        for neighbor in tax.neighborhood(node):
            assert abs(tax.depth(neighbor) - tax.depth(node)) <= 2


def test_taxonomy_depth_consistency(lexicon):
    tax = lexicon.taxonomy
    for node, parent in tax.parent.items():
        if parent is None:
            assert tax.depth(node) == 1
        else:
            assert tax.depth(node) == tax.depth(parent) + 1


# -- viz corpus ---------------------------------------------------------------

def test_load_viz_corpus_happy_path(tmp_path):
    lines = [
        {"id": "a", "title": "T1", "createdDate": "2020-01-01", "chartTypes": ["bar"]},
        {"id": "b", "title": "T2", "createdDate": "2020-02-01", "chartTypes": ["line"]},
        {"id": "c", "title": "T3", "createdDate": "2020-03-01", "chartTypes": ["map"]},
    ]
    path = tmp_path / "viz.ndjson"
    path.write_text("\n".join(json.dumps(ln) for ln in lines))
    docs = load_viz_corpus(path, {"bar", "line", "map"})
    assert [d.id for d in docs] == ["a", "b", "c"]


def test_load_viz_corpus_skips_invalid(tmp_path, caplog):
    lines = [
        json.dumps({"id": "a", "title": "T1", "createdDate": "2020-01-01"}),
        json.dumps({"id": "b", "title": "", "createdDate": "2020-02-01"}),
        json.dumps({"id": "c", "title": "T3", "createdDate": "2020-03-01"}),
    ]
    path = tmp_path / "viz.ndjson"
    path.write_text("\n".join(lines))
    with caplog.at_level("WARNING"):
        docs = load_viz_corpus(path)
    assert [d.id for d in docs] == ["a", "c"]
    assert "skipped 1" in caplog.text


def test_load_viz_corpus_unreadable(tmp_path):
    with pytest.raises(IngestionError):
        load_viz_corpus(tmp_path / "missing.ndjson")


def test_bundled_viz_corpus_fully_valid(engine):
    assert len(engine.viz_docs) == 1000
    lexicon_ids = engine.chart_lexicon.ids()
    for doc in engine.viz_docs:
        assert doc.title
        assert set(doc.chart_types) <= lexicon_ids


def test_treemap_doc_retrievable_by_design_search(engine):
    from hybridsearch.vizsearch import design_search
    results = design_search("treemap", engine.viz_index, engine.chart_lexicon)
    assert results.entries
    top = engine.viz_by_id[results.entries[0].doc_id]
    assert "treemap" in top.chart_types
