"""Smoke tests for the Python module: one happy path per binding."""

import pytest

import rederiv

XOR = "((ab)*a)^((abab)*a)"


def test_parse_canonicalizes():
    assert rederiv.parse(XOR) == "(ab)*a^(abab)*a"
    assert rederiv.parse("((a)(b))+((c))") == "ab+c"


def test_parse_rejects_garbage():
    with pytest.raises(RuntimeError):
        rederiv.parse("a+")


def test_nullable_and_simplify():
    assert rederiv.nullable("a*")
    assert not rederiv.nullable("ab+a")
    assert rederiv.simplify("a+0") == "a"
    assert rederiv.simplify("1(ab)") == "ab"


def test_oracle_enumeration_and_membership():
    assert rederiv.enumerate_words("(ab)*", 4) == ["", "ab", "abab"]
    assert rederiv.member("a+b", "b")
    assert not rederiv.member("a+b", "ba")


def test_derivative_displays():
    assert rederiv.derive("ab", "a") == "b"
    assert rederiv.derive("a*", "aa", support="brzozowski", simplify=False) == "0a*+1a*"
    assert rederiv.derive("a+ab", "a", support="antimirov") == "{1,b}"
    assert rederiv.derive(XOR, "a", support="clausal").startswith("{{1,!1,")


def test_match_through_derivation():
    for support in ("brzozowski", "dissimilar", "antimirov", "clausal"):
        assert rederiv.match(XOR, "aba", support=support)
        assert not rederiv.match(XOR, "ab", support=support)


def test_closure_lists_the_derivatives():
    assert rederiv.closure("a*", support="antimirov") == ["{a*}"]
    with pytest.raises(RuntimeError):
        rederiv.closure("a*", support="brzozowski", simplify=False, cap=10)


def test_equivalence():
    assert rederiv.equiv("(a+b)*", "(a*b*)*", upto=5)
    assert not rederiv.equiv("a", "b")
    assert rederiv.equiv_witness("a", "b") == "a"
    assert rederiv.equiv_witness("a", "a") is None


def test_automaton_roundtrip():
    doc = rederiv.afa_json(XOR, prune_false=True)
    assert rederiv.accepts(doc, "aba")
    assert rederiv.accepts(doc, "abababa")
    assert not rederiv.accepts(doc, "ab")
    assert "digraph" in rederiv.afa_dot(XOR)


def test_unknown_support_raises():
    with pytest.raises(ValueError):
        rederiv.derive("a", "a", support="unknown")
