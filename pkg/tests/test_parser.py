import pytest

from hybridsearch.analysis import encode
from hybridsearch.corpus import (Attribute, DataSource, enrich_source,
                                 load_gazetteer, load_lexicon)
from hybridsearch.parser import (INTENT_KINDS, detect_intents, load_grammar,
                                 match_fields, parse)


@pytest.fixture(scope="module")
def grammar():
    return load_grammar()


@pytest.fixture(scope="module")
def lexicon():
    return load_lexicon()


@pytest.fixture(scope="module")
def gazetteer():
    return load_gazetteer()


@pytest.fixture(scope="module")
def housing_like(lexicon):
    source = DataSource(
        id="homes", name="Homes",
        table=[["Ballard", "700000", "2020-01-05"],
               ["Fremont", "650000", "2020-02-10"],
               ["Ballard", "720000", "2021-03-15"]],
        attributes=[Attribute(name="Neighborhood"),
                    Attribute(name="Price", data_type="numeric", role="measure"),
                    Attribute(name="Date", data_type="temporal")],
        description="home prices by neighborhood")
    return enrich_source(source, lexicon)


def kinds(intents):
    return [i.kind for i in intents]


# -- intent detection ---------------------------------------------------------

def test_aggregation_plus_grouping(grammar, gazetteer, housing_like):
    parsed = parse("average price by neighborhood", [housing_like])
    assert kinds(parsed.intents) == ["Aggregation", "Grouping"]
    agg, grp = parsed.intents
    assert agg.operator == "average" and agg.arguments == ("price",)
    assert grp.arguments == ("neighborhood",)


def test_geospatial_value(grammar, gazetteer):
    intents = detect_intents(["covid", "cases", "in", "canada"], grammar, gazetteer)
    assert kinds(intents) == ["Geospatial"]
    assert intents[0].arguments == ("canada",)


def test_limit_plus_grouping(grammar, housing_like):
    parsed = parse("top 5 movies by gross", [housing_like])
    assert "FilterLimit" in kinds(parsed.intents)
    assert "Grouping" in kinds(parsed.intents)
    limit = next(i for i in parsed.intents if i.kind == "FilterLimit")
    assert limit.operator == "top" and limit.numbers == (5.0,)


def test_operator_normalization(grammar, gazetteer):
    intents = detect_intents(["avg", "price"], grammar, gazetteer)
    assert intents[0].operator == "average"


def test_in_year_is_temporal(grammar, gazetteer):
    intents = detect_intents(["sales", "in", "2020"], grammar, gazetteer)
    assert kinds(intents) == ["Temporal"]
    assert intents[0].numbers == (2020.0,)


def test_between_years(grammar, gazetteer):
    intents = detect_intents(["between", "2010", "2020"], grammar, gazetteer)
    assert kinds(intents) == ["FilterLimit"]
    assert intents[0].numbers == (2010.0, 2020.0)


def test_correlate_two_attributes(grammar, gazetteer, housing_like):
    parsed = parse("correlate price and price", [housing_like])
    corr = [i for i in parsed.intents if i.kind == "Correlation"]
    assert corr and corr[0].operator == "correlate"


def test_only_six_intent_kinds_and_known_operators(grammar, gazetteer, housing_like):
    queries = ["average price by neighborhood over time", "top 3 in canada",
               "median price between 10 and 20", "correlate price versus price",
               "count by location where", "trend since 2019 at least 5"]
    operator_terms = grammar.all_operator_terms()
    for q in queries:
        parsed = parse(q, [housing_like])
        for intent in parsed.intents:
            assert intent.kind in INTENT_KINDS
            if intent.operator is not None:
                assert intent.operator in operator_terms


def test_no_intents_for_plain_keywords(gazetteer):
    assert detect_intents(["elections"], gazetteer=gazetteer) == []
    assert detect_intents(["treemap", "stocks"], gazetteer=gazetteer) == []


def test_empty_sequence(gazetteer):
    assert detect_intents([], gazetteer=gazetteer) == []


def test_maximal_spans_do_not_overlap(grammar, gazetteer, housing_like):
    parsed = parse("average price by neighborhood in canada top 5", [housing_like])
    spans = sorted(i.span for i in parsed.intents)
    for (s1, e1), (s2, e2) in zip(spans, spans[1:]):
        assert e1 <= s2


# -- field matching -----------------------------------------------------------

def test_fuzzy_match_prices_vs_price(housing_like):
    matches = match_fields(encode("prices"), housing_like)
    price = [m for m in matches if m.attribute == "Price" and m.value is None]
    assert price and price[0].match_kind == "fuzzy"
    assert price[0].score == pytest.approx(1 - 1 / 6)


def test_synonym_match_film_vs_movie(lexicon):
    source = enrich_source(DataSource(
        id="m", name="M", table=[],
        attributes=[Attribute(name="movie")]), lexicon)
    matches = match_fields(encode("film"), source, lexicon)
    assert matches and matches[0].match_kind == "synonym"
    assert matches[0].score == 1.0


def test_no_match_for_nonsense(housing_like):
    assert match_fields(encode("zzxqy"), housing_like) == []


def test_value_match_binds_cell_value(housing_like):
    matches = match_fields(encode("ballard"), housing_like)
    assert any(m.value == "Ballard" and m.attribute == "Neighborhood"
               and m.match_kind == "exact" for m in matches)


def test_at_most_one_match_per_ngram_attribute_pair(housing_like, lexicon):
    matches = match_fields(encode("price prices neighborhood"), housing_like, lexicon)
    seen = set()
    for m in matches:
        key = (m.query_ngram, m.attribute)
        assert key not in seen
        seen.add(key)


def test_score_formula_by_kind(housing_like, lexicon):
    from hybridsearch.similarity import normalized_levenshtein
    for m in match_fields(encode("prices neighborhood ballard"), housing_like, lexicon):
        if m.match_kind == "exact":
            assert m.score == 1.0
        elif m.match_kind == "fuzzy":
            target = (m.value or m.attribute).lower()
            assert m.score == pytest.approx(1 - normalized_levenshtein(m.query_ngram, target))
        else:
            assert 0.0 < m.score <= 1.0


# -- full parse ---------------------------------------------------------------

def test_parse_fig_trend_query(engine):
    parsed = parse("How has the trend of movie budgets changed over time for "
                   "different genres?", engine.sources, lexicon=engine.lexicon)
    assert "Temporal" in kinds(parsed.intents)
    movie_matches = parsed.matches_for("movies")
    assert {m.attribute for m in movie_matches} >= {"Budget", "Genre", "Title"}


def test_parse_keyword_query_no_matches(engine):
    parsed = parse("elections", engine.sources, lexicon=engine.lexicon)
    assert parsed.intents == []
    assert parsed.field_matches == []


def test_parse_empty_query(engine):
    parsed = parse("", engine.sources, lexicon=engine.lexicon)
    assert parsed.words == [] and parsed.intents == [] and parsed.field_matches == []


def test_parse_deterministic(engine):
    q = "average budget by genre over time in canada top 5"
    a = parse(q, engine.sources, lexicon=engine.lexicon)
    b = parse(q, engine.sources, lexicon=engine.lexicon)
    assert [i.to_dict() for i in a.intents] == [i.to_dict() for i in b.intents]
    assert [m.to_dict() for m in a.field_matches] == [m.to_dict() for m in b.field_matches]


def test_intent_arguments_appear_in_field_matches(engine):
    parsed = parse("average budget by genre", engine.sources, lexicon=engine.lexicon)
    match_ngrams = {m.query_ngram for m in parsed.field_matches}
    for intent in parsed.intents:
        for arg in intent.arguments:
            if arg not in match_ngrams:  # place names bind via the gazetteer
                assert arg in engine.gazetteer
