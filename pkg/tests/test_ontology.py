import random
from dataclasses import replace

import pytest
from hypothesis import given, settings, strategies as st

from cevo.ontology import (
    ROOT,
    EventClass,
    Lexicon,
    UnknownClassError,
    UnknownLemmaError,
    VerbEntry,
    ancestors,
    classes_of_verb,
    deepest_common_class,
    validate,
    verbs_of_class,
)

from conftest import random_lexicon
from oracles import Naive


def _replace_class(lexicon, cid, **changes):
    classes = [replace(c, **changes) if c.id == cid else c for c in lexicon.classes]
    return Lexicon(tuple(classes), lexicon.verbs, lexicon.base_iri)


def _replace_verb(lexicon, target, **changes):
    verbs = [replace(v, **changes) if v.lemma == target else v for v in lexicon.verbs]
    return Lexicon(lexicon.classes, tuple(verbs), lexicon.base_iri)


def test_seed_validates(seed):
    assert validate(seed) == []


def test_root_class(seed):
    root = seed.class_map[ROOT]
    assert root.parents == frozenset()
    assert root.label == "generic event"
    assert root.comment == "something that happens"


def test_self_loop_is_one_cycle(seed):
    bad = _replace_class(seed, "Communication", parents=frozenset({"Event", "Communication"}))
    report = validate(bad)
    assert [v.kind for v in report] == ["cycle"]
    assert report[0].subject == "Communication"


def test_self_loop_replacing_parent(seed):
    bad = _replace_class(seed, "Communication", parents=frozenset({"Communication"}))
    report = validate(bad)
    assert [v.kind for v in report if v.kind == "cycle"] == ["cycle"]
    # the loop and its sub-events lose their root path
    assert {v.subject for v in report if v.kind == "unreachable"} == {"Communication", "Complain", "Transfer_Message"}


def test_dangling_verb_class(seed):
    bad = _replace_verb(seed, "say", classes=frozenset({"Speech"}))
    report = validate(bad)
    assert len(report) == 1
    assert report[0].kind == "dangling-verb-class"
    assert report[0].subject == "say"
    assert "Speech" in report[0].message


def test_two_node_cycle():
    lex = Lexicon((
        EventClass(ROOT, "generic event", "something that happens"),
        EventClass("A", parents={"Event", "B"}),
        EventClass("B", parents={"A"}),
    ))
    report = validate(lex)
    assert [v.kind for v in report] == ["cycle"]
    assert "A -> B" in report[0].message


def test_missing_root_and_bad_ids():
    lex = Lexicon((EventClass("9bad", parents={"Event"}),), (VerbEntry("Say it", {"9bad"}),))
    kinds = {v.kind for v in validate(lex)}
    assert {"missing-root", "invalid-class-id", "invalid-lemma", "dangling-parent"} <= kinds


@pytest.mark.parametrize("lemma,transitive,expected", [
    ("say", False, ["Communication"]),
    ("cook", False, ["Build", "Change_of_the_state", "Cooking", "Creation_Transformation"]),
    ("cook", True, ["Build", "Change_of_the_state", "Cooking", "Creation_Transformation"]),
    ("complain", False, ["Complain"]),
    ("complain", True, ["Communication", "Complain"]),
    ("marry", True, ["Amalgamate"]),
])
def test_classes_of_verb(seed, lemma, transitive, expected):
    assert classes_of_verb(seed, lemma, transitive) == expected


def test_classes_of_unknown_verb(seed):
    with pytest.raises(UnknownLemmaError, match="fly"):
        classes_of_verb(seed, "fly")


@pytest.mark.parametrize("cls,sub,expected", [
    ("Communication", False, ["announce", "mention", "say"]),
    ("Amalgamate", False, ["marry"]),
    ("Communication", True, ["announce", "boast", "complain", "explain", "grumble", "mention", "quote", "say"]),
])
def test_verbs_of_class(seed, cls, sub, expected):
    assert verbs_of_class(seed, cls, sub) == expected


def test_event_dominates_every_verb(seed):
    assert verbs_of_class(seed, ROOT, True) == sorted(seed.verb_map)


def test_verbs_of_unknown_class(seed):
    with pytest.raises(UnknownClassError, match="Speech"):
        verbs_of_class(seed, "Speech")


@pytest.mark.parametrize("cls,expected", [
    ("Complain", ["Communication", "Event"]),
    ("Event", []),
    ("Build", ["Creation_Transformation", "Event"]),
    ("Cooking", ["Change_of_the_state", "Event"]),
])
def test_ancestors(seed, cls, expected):
    assert ancestors(seed, cls) == expected


@pytest.mark.parametrize("a,b,expected", [
    ("Complain", "Complain", "Complain"),
    ("Complain", "Transfer_Message", "Communication"),
    ("Build", "Amalgamate", "Event"),
    ("Build", "Grow", "Creation_Transformation"),
])
def test_deepest_common_class(seed, a, b, expected):
    assert deepest_common_class(seed, a, b) == expected
    assert Naive(seed).deepest_common(a, b) == expected


def test_deepest_common_unknown(seed):
    with pytest.raises(UnknownClassError):
        deepest_common_class(seed, "Complain", "Nope")


def test_depth_is_longest_path():
    lex = Lexicon((
        EventClass(ROOT, "generic event", "something that happens"),
        EventClass("A", parents={"Event"}),
        EventClass("B", parents={"A"}),
        EventClass("C", parents={"Event", "B"}),
    ))
    assert validate(lex) == []
    assert lex.depths == {"Event": 0, "A": 1, "B": 2, "C": 3}
    assert ancestors(lex, "C") == ["B", "A", "Event"]


# -- properties over the seed and random lexicons -----------------------------


def test_galois_consistency(seed):
    for c in seed.class_map:
        for v in seed.verb_map:
            assert (v in verbs_of_class(seed, c)) == (c in classes_of_verb(seed, v))


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 2**32 - 1), st.integers(1, 40), st.integers(0, 60))
def test_queries_match_naive_on_random_lexicons(seed_int, n_classes, n_verbs):
    lex = random_lexicon(random.Random(seed_int), n_classes, n_verbs)
    assert validate(lex) == []
    naive = Naive(lex)
    ids = sorted(lex.class_map)
    for c in ids:
        anc = ancestors(lex, c)
        assert c not in anc
        assert set(anc) == naive.ancestors(c)
        assert (ROOT in anc) == (c != ROOT)
        assert lex.depths[c] == naive.depth(c)
        # most specific first: every class precedes its own ancestors
        for i, x in enumerate(anc):
            assert not (naive.ancestors(x) & set(anc[:i]))
    for v in lex.verb_map:
        for t in (False, True):
            assert set(classes_of_verb(lex, v, t)) <= set(ids)
        for c in ids:
            assert (v in verbs_of_class(lex, c)) == (c in classes_of_verb(lex, v))
    rng = random.Random(seed_int)
    for _ in range(10):
        a, b = rng.choice(ids), rng.choice(ids)
        assert deepest_common_class(lex, a, b) == deepest_common_class(lex, b, a) == naive.deepest_common(a, b)


def _mutations(seed):
    """(name, mutated lexicon, expected offender) single-fault mutations of the seed."""
    yield "cycle", _replace_class(seed, "Complain", parents=frozenset({"Communication", "Complain"})), "Complain"
    yield "dangling-parent", _replace_class(seed, "Grow", parents=frozenset({"Plant"})), "Grow"
    yield "dangling-verb-class", _replace_verb(seed, "marry", classes=frozenset({"Wed"})), "marry"
    dup = replace(seed.class_map["Meet"], label="meet again")
    yield "duplicate-class", Lexicon(seed.classes + (dup,), seed.verbs), "Meet"
    yield "empty-verb-classes", _replace_verb(seed, "visit", classes=frozenset()), "visit"
    yield "unreachable", _replace_class(seed, "Amalgamate", parents=frozenset()), "Amalgamate"
    yield "invalid-lemma", _replace_verb(seed, "say", lemma="Say"), "Say"
    yield "root-comment", _replace_class(seed, ROOT, comment="anything"), ROOT


def test_each_mutation_is_reported(seed):
    names = set()
    for name, bad, offender in _mutations(seed):
        report = validate(bad)
        assert report, name
        assert any(offender == v.subject or offender in v.message for v in report), (name, report)
        names.add(name)
    assert len(names) == 8


@settings(max_examples=100, deadline=None)
@given(st.data())
def test_random_single_field_mutation_is_reported(seed, data):
    kind = data.draw(st.sampled_from(["parent", "verb-class", "empty", "lemma"]))
    if kind == "parent":
        cid = data.draw(st.sampled_from(sorted(c for c in seed.class_map if c != ROOT)))
        bad = _replace_class(seed, cid, parents=frozenset({"Missing_" + cid}))
    elif kind == "verb-class":
        lemma = data.draw(st.sampled_from(sorted(seed.verb_map)))
        bad = _replace_verb(seed, lemma, classes=seed.verb_map[lemma].classes | {"Nope"})
    elif kind == "empty":
        lemma = data.draw(st.sampled_from(sorted(seed.verb_map)))
        bad = _replace_verb(seed, lemma, classes=frozenset())
    else:
        lemma = data.draw(st.sampled_from(sorted(seed.verb_map)))
        bad = _replace_verb(seed, lemma, lemma=lemma + " x")
    assert len(validate(bad)) >= 1
