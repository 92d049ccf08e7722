"""Context building, derivation operators, closure laws and serialization."""

import random

import pytest

from semlat import (
    EmptyContextError,
    FieldError,
    FormalContext,
    Message,
    SemanticField,
    UnknownAttributeError,
    UnknownObjectError,
    build_context,
    close_attributes,
    context_from_dict,
    context_from_json,
    context_to_dict,
    context_to_json,
    derive_extent,
    derive_intent,
    parse_field,
)
from semlat import oracle
from conftest import random_context

# the simplest field from the reference experiments: places, systems, roles
S1_KEYWORDS = (
    "london", "india", "windows", "microsoft", "android",
    "#mysql", "scripts", "#linux", "#job", "developer",
)


# -- SemanticField -----------------------------------------------------------


def test_field_accepts_reference_keyword_set():
    field = SemanticField("s1", S1_KEYWORDS)
    assert field.keywords == S1_KEYWORDS


def test_field_validation():
    with pytest.raises(FieldError):
        SemanticField("empty", ())
    with pytest.raises(FieldError):
        SemanticField("dup", ("linux", "linux"))
    with pytest.raises(FieldError):
        SemanticField("bad", ("has space",))
    with pytest.raises(FieldError):
        SemanticField("upper", ("Linux",))


# -- build_context -----------------------------------------------------------


def msg(i, *tokens):
    return Message(str(i), " ".join(tokens), tuple(tokens))


def test_build_context_example():
    messages = [msg(1, "android", "developer"), msg(2, "cat")]
    field = SemanticField("f", ("android", "developer", "london"))
    ctx = build_context(messages, field)
    assert ctx.objects == ("1",)
    assert ctx.attributes == ("android", "developer", "london")
    assert ctx.bool_rows() == [(True, True, False)]


def test_build_context_sorts_attributes():
    field = SemanticField("f", ("zz", "aa", "#mm"))
    ctx = build_context([msg(1, "zz", "aa", "#mm")], field)
    assert ctx.attributes == ("#mm", "aa", "zz")


def test_build_context_keeps_allfalse_columns():
    field = SemanticField("f", ("aa", "ghost"))
    ctx = build_context([msg(1, "aa")], field)
    assert ctx.attributes == ("aa", "ghost")
    assert ctx.bool_rows() == [(True, False)]
    assert derive_extent(ctx, {"ghost"}) == frozenset()


def test_build_context_empty_errors():
    field = SemanticField("f", ("aa",))
    with pytest.raises(EmptyContextError, match="empty context"):
        build_context([msg(1, "bb")], field)
    with pytest.raises(EmptyContextError):
        build_context([], field)


def test_build_context_duplicate_ids_rejected():
    field = SemanticField("f", ("aa",))
    messages = [msg(1, "aa"), msg(1, "aa")]
    with pytest.raises(ValueError, match="duplicate object id"):
        build_context(messages, field)


def test_incidence_is_boolean_for_repeated_tokens():
    field = SemanticField("f", ("aa", "bb"))
    ctx = build_context([Message("1", "", ("aa", "aa", "bb"))], field)
    assert ctx.bool_rows() == [(True, True)]


# -- derivation operators on the canonical context ---------------------------


def test_derive_intent_examples(c1):
    assert derive_intent(c1, {"1", "3"}) == frozenset({"a", "b"})
    assert derive_intent(c1, set()) == frozenset({"a", "b", "c", "d"})
    assert derive_intent(c1, {"1", "2", "3", "4"}) == frozenset()


def test_derive_extent_examples(c1):
    assert derive_extent(c1, {"a"}) == frozenset({"1", "2", "3"})
    assert derive_extent(c1, set()) == frozenset({"1", "2", "3", "4"})
    assert derive_extent(c1, {"a", "d"}) == frozenset()


def test_close_attributes_examples(c1):
    assert close_attributes(c1, {"b"}) == frozenset({"a", "b"})
    assert close_attributes(c1, {"a", "b"}) == frozenset({"a", "b"})
    assert close_attributes(c1, set()) == frozenset()


def test_unknown_names_are_reported(c1):
    with pytest.raises(UnknownObjectError, match="'9'"):
        derive_intent(c1, {"9"})
    with pytest.raises(UnknownAttributeError, match="'z'"):
        derive_extent(c1, {"z"})
    with pytest.raises(UnknownAttributeError, match="'z'"):
        close_attributes(c1, {"z"})


# -- closure laws on random contexts ------------------------------------------


def random_subset(rng, pool):
    return {x for x in pool if rng.random() < 0.4}


def test_galois_laws_randomized():
    rng = random.Random(424242)
    for _ in range(150):
        ctx = random_context(rng)
        attrs = list(ctx.attributes)
        objects = list(ctx.objects)

        a = random_subset(rng, attrs)
        b = a | random_subset(rng, attrs)
        # antitone on attribute sets
        assert derive_extent(ctx, b) <= derive_extent(ctx, a)
        # antitone on object sets
        oa = random_subset(rng, objects)
        ob = oa | random_subset(rng, objects)
        assert derive_intent(ctx, ob) <= derive_intent(ctx, oa)
        # extensive and idempotent
        closed = close_attributes(ctx, a)
        assert a <= closed
        assert close_attributes(ctx, closed) == closed
        # triple-prime: the closure derives the same extent
        assert derive_extent(ctx, a) == derive_extent(ctx, closed)


def test_derivations_match_bruteforce_randomized():
    rng = random.Random(5150)
    for _ in range(60):
        ctx = random_context(rng, max_objects=10, max_attributes=7)
        a = random_subset(rng, list(ctx.attributes))
        o = random_subset(rng, list(ctx.objects))
        assert derive_extent(ctx, a) == oracle.derive_extent_bruteforce(ctx, a)
        assert derive_intent(ctx, o) == oracle.derive_intent_bruteforce(ctx, o)
        assert close_attributes(ctx, a) == oracle.close_attributes_bruteforce(ctx, a)


def test_single_object_roundtrip():
    field = SemanticField("f", ("aa", "bb", "cc"))
    messages = [msg(1, "aa", "zz"), msg(2, "bb", "cc", "aa"), msg(3, "cc")]
    ctx = build_context(messages, field)
    for message in messages:
        expected = frozenset(message.tokens) & set(field.keywords)
        assert derive_intent(ctx, {message.id}) == expected


# -- serialization ------------------------------------------------------------


def test_context_dict_roundtrip(c1):
    doc = context_to_dict(c1)
    assert doc["objects"] == ["1", "2", "3", "4"]
    assert doc["attributes"] == ["a", "b", "c", "d"]
    assert doc["rows"] == ["1100", "1010", "1110", "0001"]
    back = context_from_dict(doc)
    assert back.objects == c1.objects
    assert back.attributes == c1.attributes
    assert back.bool_rows() == c1.bool_rows()


def test_context_json_roundtrip(c1):
    back = context_from_json(context_to_json(c1))
    assert back.bool_rows() == c1.bool_rows()


def test_context_from_dict_rejects_bad_rows():
    with pytest.raises(ValueError):
        context_from_dict({"objects": ["1"], "attributes": ["a"], "rows": ["2"]})
    with pytest.raises(ValueError):
        context_from_dict({"objects": ["1"], "attributes": ["a", "b"], "rows": ["1"]})


# -- field files ---------------------------------------------------------------


def test_parse_field_with_name_and_comments():
    text = "name: ops\n# just a comment\nlinux\n#linux\nLinux\n\n#not a tag\n"
    field = parse_field(text)
    assert field.name == "ops"
    assert field.keywords == ("linux", "#linux")


def test_parse_field_invalid_keyword():
    with pytest.raises(FieldError, match="line 2"):
        parse_field("linux\nnot a keyword\n")


def test_parse_field_requires_a_keyword():
    with pytest.raises(FieldError):
        parse_field("# nothing but comments\n")


def test_from_bools_drops_empty_rows():
    ctx = FormalContext.from_bools(
        ["x", "y"], ["aa"], [[True], [False]]
    )
    assert ctx.objects == ("x",)
    with pytest.raises(EmptyContextError):
        FormalContext.from_bools(["x"], ["aa"], [[False]])
