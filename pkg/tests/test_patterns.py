from itertools import combinations

import pytest
from hypothesis import given, strategies as st

from wordrep.core import Graph, WordRepError, as_word, complete_graph, induced_graph_11, restrict
from wordrep.patterns import (
    Pattern,
    PatternShape,
    ShapeKind,
    classify_pattern,
    contains,
    induced_graph_t,
    is_isomorphic,
    kitaev_induced_graph,
    pair_avoids,
    represents_t,
)

words = st.lists(st.sampled_from("1234"), min_size=1, max_size=12).map(tuple)
patterns = st.text(alphabet="ab", min_size=1, max_size=5)


def substitution_avoids(word, x, y, t):
    """Independent check: try both letter assignments as literal substrings."""
    r = "".join(restrict(word, (x, y)))
    t = Pattern.parse(t).symbols
    for a, b in ((x, y), (y, x)):
        if t.replace("a", "\0").replace("b", b).replace("\0", a) in r:
            return False
    return True


def test_pattern_parse():
    assert Pattern.parse("112").symbols == "aab"
    assert Pattern.parse("bba").symbols == "aab"
    assert Pattern.parse("221").raw == "bba"
    with pytest.raises(WordRepError):
        Pattern.parse("abc")
    with pytest.raises(WordRepError):
        Pattern.parse("a1")


@pytest.mark.parametrize("u, v, expected", [
    ("112134", "332378", True),
    ("112134", "aabacd", True),
    ("112", "121", False),
    ("12", "123", False),
])
def test_is_isomorphic(u, v, expected):
    assert is_isomorphic(u, v) is expected


def test_contains():
    assert contains("121223", "112")
    assert contains("121223", Pattern.parse("aab"))
    assert contains("5", "a")
    # subsets have |alphabet(u)| letters: w|1 = 11 contains aa
    assert contains("1212", "aa")
    assert not contains("1212", "aab")
    assert contains("123132", "1221")  # w|23 = 2332
    assert not contains("123123", "1221")
    assert contains("1234321", "abcba")


@pytest.mark.parametrize("word, x, y, t, expected", [
    ("121334", "1", "2", "aab", True),
    ("121334", "1", "3", "aab", False),
    ("12", "1", "2", "aaba", True),
    ("12", "1", "2", "abb", True),
])
def test_pair_avoids(word, x, y, t, expected):
    assert pair_avoids(word, x, y, t) is expected


def test_pair_avoids_errors():
    with pytest.raises(WordRepError):
        pair_avoids("12", "1", "1", "aab")
    with pytest.raises(WordRepError):
        pair_avoids("12", "1", "3", "aab")


def test_induced_graph_t_examples(claw):
    assert induced_graph_t("121334", "aab") == claw
    assert induced_graph_t("2123", "aba") == Graph("123", [("1", "3"), ("2", "3")])
    assert induced_graph_t("3142", "ab").edges == frozenset()


def test_kitaev_variant_example():
    plain = induced_graph_t("2123", "aba")
    kit = kitaev_induced_graph("2123", "aba")
    assert kit == complete_graph(3)
    assert kit.edges - plain.edges == {frozenset("12")}


def test_kitaev_trivial_and_order():
    for u in ("aab", "aba", "abb", "aa"):
        assert kitaev_induced_graph("123", u) == complete_graph(3)
    # 221 forbids y y x with x < y: w|12 = 221 is the violation
    assert not kitaev_induced_graph("221", "221").edges
    assert kitaev_induced_graph("112", "221").edges == {frozenset("12")}
    # a reversed vertex order flips which assignment is checked
    assert kitaev_induced_graph("2123", "aba", order="213").edges == {frozenset("13"), frozenset("23")}


def test_represents_t():
    assert represents_t("121334", Graph("1234", [("1", "2"), ("2", "3"), ("2", "4")]), "aab")
    assert represents_t("123456", complete_graph(6), "aaba")
    assert represents_t("11", Graph("1"), "aa")
    rep = represents_t("121334", complete_graph(4), "aab")
    assert not rep and ("1", "3") in rep.missing_edges


@pytest.mark.parametrize("t, shape", [
    ("aaba", PatternShape(ShapeKind.AKBLA, 2, 1)),
    ("aab", PatternShape(ShapeKind.AKB, 2)),
    ("ab", PatternShape(ShapeKind.AKB, 1)),
    ("abbb", PatternShape(ShapeKind.ABK, 3)),
    ("aabb", PatternShape(ShapeKind.AKBL, 2, 2)),
    ("aabba", PatternShape(ShapeKind.AKBLA, 2, 2)),
    ("aaa", PatternShape(ShapeKind.ALL_SAME, 3)),
    ("abab", PatternShape(ShapeKind.OTHER)),
    ("abaa", PatternShape(ShapeKind.OTHER)),
    ("221", PatternShape(ShapeKind.AKB, 2)),
])
def test_classify_pattern(t, shape):
    assert classify_pattern(t) == shape


@given(patterns)
def test_classification_is_consistent(t):
    shape = classify_pattern(t)
    s = Pattern.parse(t).symbols
    rebuilt = {
        ShapeKind.ALL_SAME: lambda: "a" * shape.k,
        ShapeKind.AKB: lambda: "a" * shape.k + "b",
        ShapeKind.ABK: lambda: "a" + "b" * shape.k,
        ShapeKind.AKBL: lambda: "a" * shape.k + "b" * shape.l,
        ShapeKind.AKBLA: lambda: "a" * shape.k + "b" * shape.l + "a",
        ShapeKind.OTHER: lambda: None,
    }[shape.kind]()
    assert rebuilt is None or rebuilt == s


@given(words, words, words)
def test_isomorphism_is_equivalence(u, v, x):
    assert is_isomorphic(u, u)
    assert is_isomorphic(u, v) == is_isomorphic(v, u)
    if is_isomorphic(u, v) and is_isomorphic(v, x):
        assert is_isomorphic(u, x)


@given(words, patterns)
def test_pair_avoids_matches_substitution(word, t):
    for x, y in combinations(sorted(set(word)), 2):
        assert pair_avoids(word, x, y, t) == substitution_avoids(word, x, y, t)
        assert pair_avoids(word, x, y, t) == pair_avoids(word, y, x, t)


@given(words, st.integers(1, 4))
def test_reversal_duality(word, k):
    assert induced_graph_t(word[::-1], "a" + "b" * k) == induced_graph_t(word, "a" * k + "b")


@given(words)
def test_aa_is_alternation(word):
    assert induced_graph_t(word, "aa") == induced_graph_11(word)
    assert induced_graph_t(word, "11") == induced_graph_11(word)


@given(words)
def test_ab_gives_no_edges(word):
    assert not induced_graph_t(word, "ab").edges


@given(words, st.integers(2, 4))
def test_one_letter_patterns_read_either_way(word, k):
    assert induced_graph_t(word, "1" * k) == induced_graph_t(word, "a" * k)


@given(words, patterns)
def test_kitaev_graph_contains_plain_graph(word, u):
    plain = induced_graph_t(word, u)
    kit = kitaev_induced_graph(word, u)
    assert plain.edges <= kit.edges
