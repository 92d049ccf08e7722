"""Tokenization, parsing, dictionary building and corpus filtering."""

import random

import pytest

from semlat import (
    CorpusConfig,
    FrequencyDictionary,
    Message,
    ParseError,
    build_dictionary,
    filter_dictionary,
    filter_messages,
    load_stop_words,
    parse_messages,
    tokenize,
)

PLAIN = CorpusConfig(min_count=1, max_count=10**9, min_tokens_per_message=0)


# -- tokenize ----------------------------------------------------------------


def test_tokenize_keeps_hashtags_and_mentions():
    assert tokenize("Software Engineer @Acme #Jobs!", PLAIN) == [
        "software",
        "engineer",
        "@acme",
        "#jobs",
    ]


def test_tokenize_strips_urls_and_stop_words():
    cfg = CorpusConfig(
        min_count=1, max_count=10**9, min_tokens_per_message=0,
        stop_words=frozenset({"see"}),
    )
    assert tokenize("see https://t.co/xyz now", cfg) == ["now"]
    assert tokenize("HTTP://CAPS.example/path then", cfg) == ["then"]


def test_tokenize_empty_text():
    assert tokenize("", PLAIN) == []


def test_tokenize_drops_short_cores_and_splits_on_punctuation():
    assert tokenize("a I #x @y c++ re-do", PLAIN) == ["re", "do"]
    assert tokenize("mid#tag and mid@name", PLAIN) == ["mid", "#tag", "and", "mid", "@name"]


def test_tokenize_stop_words_match_exact_token():
    cfg = CorpusConfig(
        min_count=1, max_count=10**9, min_tokens_per_message=0,
        stop_words=frozenset({"the"}),
    )
    # '#the' is a different token and survives
    assert tokenize("the #the", cfg) == ["#the"]


def test_tokenize_idempotent():
    rng = random.Random(7)
    samples = [
        "Software Engineer @Acme #Jobs!",
        "Ubuntu Linux update: https://u.example #opensource",
        "popular phones run ANDROID #android @dev_team 2024",
        "c++ vs. rust?! #lang-wars @x",
    ]
    for _ in range(200):
        samples.append(
            " ".join(
                rng.choice(["Linux!", "#Jobs", "@Acme", "it's", "x", "réseau",
                            "DATA-base", "http://t.co/a b", "under_score"])
                for _ in range(rng.randint(0, 8))
            )
        )
    for text in samples:
        once = tokenize(text, PLAIN)
        again = tokenize(" ".join(once), PLAIN)
        assert once == again


# -- Message / CorpusConfig invariants ---------------------------------------


def test_message_rejects_bad_tokens():
    with pytest.raises(ValueError):
        Message("1", "x", ("",))
    with pytest.raises(ValueError):
        Message("1", "x", ("Upper",))
    with pytest.raises(ValueError):
        Message("1", "x", ("sp ace",))
    Message("1", "x", ("#ok", "@ok", "plain"))  # all legal shapes


def test_corpus_config_validation():
    with pytest.raises(ValueError):
        CorpusConfig(min_count=0)
    with pytest.raises(ValueError):
        CorpusConfig(min_count=5, max_count=4)
    with pytest.raises(ValueError):
        CorpusConfig(min_tokens_per_message=-1)


# -- parse_messages ----------------------------------------------------------


def test_parse_jsonl_example():
    msgs = parse_messages(b'{"id":"42","text":"New #software release"}', "jsonl", PLAIN)
    assert len(msgs) == 1
    assert msgs[0].id == "42"
    assert list(msgs[0].tokens) == ["new", "#software", "release"]


def test_parse_empty_input():
    assert parse_messages(b"", "jsonl", PLAIN) == []
    assert parse_messages(b"", "lines", PLAIN) == []


def test_parse_lines_format_numbers_by_physical_line():
    msgs = parse_messages(b"hello world\n\nsecond one\n", "lines", PLAIN)
    assert [(m.id, list(m.tokens)) for m in msgs] == [
        ("1", ["hello", "world"]),
        ("3", ["second", "one"]),
    ]


def test_parse_jsonl_error_names_line():
    data = b'{"id":"1","text":"ok fine"}\nnot json at all\n'
    with pytest.raises(ParseError, match="line 2"):
        parse_messages(data, "jsonl", PLAIN)
    with pytest.raises(ParseError, match="line 1"):
        parse_messages(b'{"id":"1"}', "jsonl", PLAIN)
    with pytest.raises(ParseError, match="line 1"):
        parse_messages(b'{"id":"1","text":17}', "jsonl", PLAIN)


def test_parse_jsonl_accepts_integer_ids():
    msgs = parse_messages(b'{"id": 42, "text": "hello world"}', "jsonl", PLAIN)
    assert msgs[0].id == "42"


def test_parse_rejects_non_utf8():
    with pytest.raises(ParseError, match="UTF-8"):
        parse_messages(b"\xff\xfe\x00bad", "lines", PLAIN)


def test_parse_unknown_format():
    with pytest.raises(ValueError, match="format"):
        parse_messages(b"", "csv", PLAIN)


def test_parse_reads_binary_file_objects(tmp_path):
    path = tmp_path / "corpus.jsonl"
    path.write_bytes(b'{"id":"a","text":"one two"}\n')
    with open(path, "rb") as handle:
        msgs = parse_messages(handle, "jsonl", PLAIN)
    assert msgs[0].tokens == ("one", "two")


# -- dictionaries ------------------------------------------------------------


def test_build_dictionary_counts_occurrences():
    msgs = [
        Message("1", "", ("windows",)),
        Message("2", "", ("windows", "linux")),
    ]
    d = build_dictionary(msgs)
    assert d.items() == [("windows", 2), ("linux", 1)]


def test_build_dictionary_counts_repeats_within_message():
    d = build_dictionary([Message("1", "", ("ha", "ha", "ha"))])
    assert d["ha"] == 3


def test_build_dictionary_empty():
    d = build_dictionary([])
    assert len(d) == 0
    assert d.items() == []
    assert d.to_tsv() == ""


def test_dictionary_report_order_and_preview_style():
    d = FrequencyDictionary({"beta": 5, "alpha": 5, "gamma": 9})
    assert d.lexemes() == ["gamma", "alpha", "beta"]
    assert d.preview() == "gamma (9), alpha (5), beta (5)"
    assert d.to_tsv() == "gamma\t9\nalpha\t5\nbeta\t5\n"


def test_dictionary_total_mass_matches_token_count():
    rng = random.Random(3)
    msgs = []
    for i in range(40):
        toks = tuple(rng.choice(["aa", "bb", "cc", "#dd"]) for _ in range(rng.randint(0, 6)))
        msgs.append(Message(str(i), "", toks))
    d = build_dictionary(msgs)
    assert d.total() == sum(len(m.tokens) for m in msgs)


def test_dictionary_rejects_nonpositive_counts():
    with pytest.raises(ValueError):
        FrequencyDictionary({"x": 0})


def test_filter_dictionary_bounds():
    d = FrequencyDictionary({"a": 5, "b": 50, "c": 5000})
    cfg = CorpusConfig(min_count=10, max_count=4000)
    assert filter_dictionary(d, cfg).items() == [("b", 50)]


def test_filter_dictionary_identity():
    d = FrequencyDictionary({"a": 5, "b": 50})
    cfg = CorpusConfig(min_count=1, max_count=10**9)
    assert filter_dictionary(d, cfg) == d


def test_filter_dictionary_stop_words():
    d = FrequencyDictionary({"the": 900, "linux": 30})
    cfg = CorpusConfig(min_count=10, max_count=4000, stop_words=frozenset({"the"}))
    assert filter_dictionary(d, cfg).items() == [("linux", 30)]


def test_filter_dictionary_is_sub_association():
    rng = random.Random(11)
    counts = {f"w{i:02d}": rng.randint(1, 60) for i in range(50)}
    d = FrequencyDictionary(counts)
    cfg = CorpusConfig(min_count=5, max_count=40)
    filtered = filter_dictionary(d, cfg)
    for lex, cnt in filtered.items():
        assert counts[lex] == cnt


# -- filter_messages ---------------------------------------------------------


def test_filter_messages_restricts_tokens():
    retained = FrequencyDictionary({"aa": 2, "bb": 2})
    cfg = CorpusConfig(min_count=1, max_count=10, min_tokens_per_message=2)
    msgs = [Message("1", "", ("aa", "bb", "cc"))]
    out = filter_messages(msgs, retained, cfg)
    assert len(out) == 1
    assert out[0].tokens == ("aa", "bb")


def test_filter_messages_drops_below_minimum():
    retained = FrequencyDictionary({"aa": 2, "bb": 2})
    cfg = CorpusConfig(min_count=1, max_count=10, min_tokens_per_message=3)
    msgs = [Message("1", "", ("aa", "bb", "cc"))]
    assert filter_messages(msgs, retained, cfg) == []


def test_filter_messages_seed_keyword():
    retained = FrequencyDictionary({"aa": 2, "bb": 2, "software": 2})
    cfg = CorpusConfig(
        min_count=1, max_count=10, min_tokens_per_message=1, seed_keyword="software"
    )
    msgs = [
        Message("1", "", ("aa", "software")),
        Message("2", "", ("aa", "bb")),
    ]
    out = filter_messages(msgs, retained, cfg)
    assert [m.id for m in out] == ["1"]


def test_filter_messages_keeps_order_and_never_adds():
    retained = FrequencyDictionary({"aa": 5, "bb": 5})
    cfg = CorpusConfig(min_count=1, max_count=10, min_tokens_per_message=0)
    msgs = [Message(str(i), "", ("aa", "bb", "zz")) for i in range(20)]
    out = filter_messages(msgs, retained, cfg)
    assert [m.id for m in out] == [str(i) for i in range(20)]
    assert all(set(m.tokens) <= {"aa", "bb"} for m in out)
    assert len(out) <= len(msgs)


def test_filter_messages_keeps_duplicate_texts_distinct():
    retained = FrequencyDictionary({"aa": 4, "bb": 4})
    cfg = CorpusConfig(min_count=1, max_count=10, min_tokens_per_message=2)
    msgs = [Message("1", "same", ("aa", "bb")), Message("2", "same", ("aa", "bb"))]
    assert [m.id for m in filter_messages(msgs, retained, cfg)] == ["1", "2"]


# -- stop-word files ---------------------------------------------------------


def test_load_stop_words(tmp_path):
    path = tmp_path / "stop.txt"
    path.write_text("# a comment\nThe\n\nand\n", encoding="utf-8")
    assert load_stop_words(path) == frozenset({"the", "and"})
