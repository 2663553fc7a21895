import math
import random
import string

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hybridsearch.analysis import AnalyzerSettings, encode, stopword_set
from hybridsearch.errors import IndexBuildError, MissingIndexError
from hybridsearch.index import (Bm25Params, bm25_score, build_index, idf,
                                load_index, rank, retrieve, save_index)
from .oracles import bm25_all_docs, bm25_ranking

PARAMS = Bm25Params(k1=1.2, b=0.75)


def make_index(docs: dict[str, str], params=PARAMS):
    return build_index([(doc_id, {"text": text}) for doc_id, text in docs.items()],
                       params)


TWO_DOCS = {"d1": "sales region", "d2": "profit"}


# -- build --------------------------------------------------------------------

def test_build_stats_hand_counted():
    idx = make_index(TWO_DOCS)
    assert idx.doc_cnt == 2
    # word counts 2 and 1; n-grams do not inflate document length
    assert idx.doc_len == {"d1": 2, "d2": 1}
    assert idx.avgdl == 1.5


def test_build_empty_corpus():
    idx = make_index({})
    assert idx.doc_cnt == 0
    assert rank(idx, encode("anything"), []).entries == []


def test_duplicate_id_rejected():
    with pytest.raises(IndexBuildError):
        build_index([("a", {"t": "x"}), ("a", {"t": "y"})], PARAMS)


def test_stored_fields_retrievable():
    idx = make_index(TWO_DOCS)
    assert idx.stored["d1"] == {"text": "sales region"}


def test_bm25_params_validated():
    with pytest.raises(ValueError):
        Bm25Params(k1=1.0)
    with pytest.raises(ValueError):
        Bm25Params(b=1.5)


# -- idf ----------------------------------------------------------------------

def test_idf_two_docs_one_hit():
    assert idf(2, 1) == pytest.approx(math.log(2), abs=1e-12)


def test_idf_term_everywhere():
    # direct evaluation: ln(1 + 0.5/10.5)
    assert idf(10, 10) == pytest.approx(math.log(1 + 0.5 / 10.5), abs=1e-12)
    assert idf(10, 10) == pytest.approx(0.04652, abs=5e-6)


def test_idf_monotone_in_doc_cnt():
    assert idf(20, 3) > idf(10, 3)


def test_idf_rejects_df_above_doc_cnt():
    with pytest.raises(ValueError):
        idf(5, 6)


@given(st.integers(min_value=1, max_value=200))
def test_idf_strictly_decreasing_in_df(doc_cnt):
    values = [idf(doc_cnt, df) for df in range(0, doc_cnt + 1)]
    assert all(a > b for a, b in zip(values, values[1:]))


# -- scoring ------------------------------------------------------------------

def test_hand_computed_score():
    idx = make_index(TWO_DOCS)
    # ln 2 * (1 * 2.2) / (1 + 1.2 * (0.25 + 0.75 * 2 / 1.5)) = ln 2 * 0.88
    assert bm25_score(idx, encode("sales"), "d1") == pytest.approx(
        math.log(2) * 0.88, abs=1e-9)


def test_absent_tokens_contribute_zero():
    idx = make_index(TWO_DOCS)
    assert bm25_score(idx, encode("zzzzzz"), "d1") == 0.0


def test_unknown_doc_id():
    idx = make_index(TWO_DOCS)
    with pytest.raises(LookupError):
        bm25_score(idx, encode("sales"), "nope")


def test_score_monotone_in_term_frequency():
    idx = make_index({"a": "sales sales region region",
                      "b": "sales region region region"})
    # same length, higher f("sales") in a
    assert bm25_score(idx, ["sales"], "a") > bm25_score(idx, ["sales"], "b")


def test_b_zero_removes_length_normalization():
    docs = {"short": "sales", "long": "sales region profit margin deal"}
    idx = build_index([(k, {"t": v}) for k, v in docs.items()],
                      Bm25Params(k1=1.2, b=0.0))
    assert bm25_score(idx, ["sales"], "short") == pytest.approx(
        bm25_score(idx, ["sales"], "long"), abs=1e-12)


# -- retrieve -----------------------------------------------------------------

def test_retrieve_unique_match():
    idx = make_index(TWO_DOCS)
    assert retrieve(idx, encode("profit"), 10) == ["d2"]


def test_retrieve_fuzzy_typo():
    idx = make_index(TWO_DOCS)
    assert retrieve(idx, encode("salez"), 10) == ["d1"]


def test_retrieve_r_covers_all_overlapping():
    idx = make_index({"a": "x y", "b": "x z", "c": "w"})
    assert set(retrieve(idx, encode("x"), 10)) == {"a", "b"}


def test_retrieve_rejects_nonpositive_r():
    idx = make_index(TWO_DOCS)
    with pytest.raises(ValueError):
        retrieve(idx, encode("sales"), 0)


# -- rank ---------------------------------------------------------------------

def test_rank_single_candidate_norm_one():
    idx = make_index(TWO_DOCS)
    results = rank(idx, encode("profit"), ["d2"])
    assert results.entries[0].norm_score == 1.0


def test_rank_ties_ascending_id():
    idx = make_index({"b": "sales", "a": "sales"})
    results = rank(idx, encode("sales"), ["b", "a"])
    assert results.ids() == ["a", "b"]
    assert results.entries[0].raw_score == results.entries[1].raw_score


def make_random_corpus(rng: random.Random, max_docs=50, max_vocab=30):
    stop = stopword_set()
    vocab = []
    while len(vocab) < rng.randint(3, max_vocab):
        word = "".join(rng.choices(string.ascii_lowercase[:9], k=rng.randint(3, 8)))
        if word not in stop and word not in vocab:
            vocab.append(word)
    docs = {}
    for i in range(rng.randint(1, max_docs)):
        docs[f"d{i:02d}"] = " ".join(rng.choices(vocab, k=rng.randint(1, 8)))
    return vocab, docs


def make_query(rng: random.Random, vocab):
    words = rng.choices(vocab, k=rng.randint(1, 4))
    if rng.random() < 0.4:  # inject a typo
        target = rng.randrange(len(words))
        word = list(words[target])
        pos = rng.randrange(len(word))
        word[pos] = rng.choice(string.ascii_lowercase[:9])
        words[target] = "".join(word)
    return words


def test_rank_matches_bruteforce_oracle_on_random_corpora():
    rng = random.Random(7)
    for _ in range(25):
        vocab, docs = make_random_corpus(rng)
        idx = make_index(docs)
        for _ in range(5):
            words = make_query(rng, vocab)
            tokens = encode(" ".join(words))
            got = rank(idx, tokens, retrieve(idx, tokens, idx.doc_cnt)).ids()
            assert got == bm25_ranking(docs, words, PARAMS.k1, PARAMS.b)


def test_scores_match_oracle_bitwise():
    rng = random.Random(11)
    vocab, docs = make_random_corpus(rng)
    idx = make_index(docs)
    words = make_query(rng, vocab)
    expected = bm25_all_docs(docs, words, PARAMS.k1, PARAMS.b)
    for doc_id in docs:
        assert bm25_score(idx, encode(" ".join(words)), doc_id) == expected[doc_id]


# -- persistence --------------------------------------------------------------

def test_save_load_roundtrip_preserves_ranking(tmp_path):
    rng = random.Random(3)
    vocab, docs = make_random_corpus(rng)
    idx = make_index(docs)
    save_index(idx, tmp_path / "i.json")
    loaded = load_index(tmp_path / "i.json")
    for _ in range(10):
        tokens = encode(" ".join(make_query(rng, vocab)))
        a = rank(idx, tokens, retrieve(idx, tokens, idx.doc_cnt))
        b = rank(loaded, tokens, retrieve(loaded, tokens, loaded.doc_cnt))
        assert [(e.doc_id, e.raw_score) for e in a] == \
               [(e.doc_id, e.raw_score) for e in b]


def test_save_is_byte_deterministic(tmp_path):
    idx1 = make_index(TWO_DOCS)
    idx2 = make_index(TWO_DOCS)
    save_index(idx1, tmp_path / "a.json")
    save_index(idx2, tmp_path / "b.json")
    assert (tmp_path / "a.json").read_bytes() == (tmp_path / "b.json").read_bytes()


def test_load_missing_file(tmp_path):
    with pytest.raises(MissingIndexError):
        load_index(tmp_path / "nope.json")


def test_postings_consistent_with_docs():
    idx = make_index({"a": "x y x", "b": "y z"})
    for token, postings in idx.postings.items():
        for doc_id, count in postings:
            assert idx.docs[doc_id].counts[token] == count


def test_synonym_expansion_affects_retrieval_not_length():
    idx = build_index([("a", {"t": "sales data"})], PARAMS,
                      AnalyzerSettings(expand_synonyms=True),
                      {"sales": ["revenue"]})
    assert retrieve(idx, ["revenue"], 5) == ["a"]
    assert idx.doc_len["a"] == 2
