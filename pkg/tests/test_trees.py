import itertools
import json
import warnings

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sylow2.errors import NonCanonicalTreeWarning, ResourceLimitError, TreeParseError
from sylow2.trees import (
    LEAF,
    NodeShape,
    Tree,
    bin_expansion,
    count_trees,
    dim_forest,
    dim_tree,
    enumerate_trees,
    forest_from_obj,
    forest_size,
    forest_to_obj,
    format_forest,
    format_tree,
    forests_of_size,
    make_forest,
    node,
    node_shape,
    parse_forest,
    parse_tree,
    tree_from_json,
    tree_to_json,
)

A = node(LEAF, LEAF)
B = node(LEAF)


def ordered_trees(k):
    """Every 1-2 tree of height k with ordered children, as nested tuples."""
    if k == 0:
        return ["leaf"]
    prev = ordered_trees(k - 1)
    return [(c,) for c in prev] + [(a, b) for a in prev for b in prev]


def ahu(t):
    if t == "leaf":
        return "L"
    return "(" + "".join(sorted(ahu(c) for c in t)) + ")"


@pytest.mark.parametrize("k", range(5))
def test_enumeration_against_brute_force(k):
    distinct = {ahu(t) for t in ordered_trees(k)}
    assert len(enumerate_trees(k)) == len(distinct) == count_trees(k)


def test_enumeration_examples():
    assert enumerate_trees(0) == [LEAF]
    assert enumerate_trees(1) == [A, B]
    assert len(enumerate_trees(2)) == 5
    assert len(enumerate_trees(4)) == 230


def test_enumeration_cap():
    with pytest.raises(ResourceLimitError, match="cap 4"):
        enumerate_trees(5)
    assert len(enumerate_trees(5, cap=None)) == 26795


def test_count_trees():
    assert [count_trees(k) for k in range(6)] == [1, 2, 5, 20, 230, 26795]
    # frozen from the brute-force enumeration above
    assert count_trees(5) == 2 * 230 + 230 * 229 // 2


@pytest.mark.parametrize("k", range(5))
def test_enumeration_sorted_unique(k):
    ts = enumerate_trees(k)
    assert all(a < b for a, b in zip(ts, ts[1:]))
    assert len(set(ts)) == len(ts)


@pytest.mark.parametrize("k", range(4))
def test_canonical_order_is_strict_total(k):
    ts = enumerate_trees(k)
    for a, b in itertools.product(ts, repeat=2):
        assert (a < b) + (b < a) + (a is b) == 1
    for a, b, c in itertools.product(ts[:12], repeat=3):
        if a < b and b < c:
            assert a < c


def test_identity_chain_is_first():
    chain = LEAF
    for k in range(1, 5):
        chain = node(chain, chain)
        assert enumerate_trees(k)[0] is chain


def test_interning_and_immutability():
    assert node(B, A) is node(A, B)
    assert node(A, B).children == (A, B)
    with pytest.raises(AttributeError):
        A.height = 3


def test_bad_nodes():
    with pytest.raises(ValueError):
        node(A, LEAF)
    with pytest.raises(ValueError):
        Tree(LEAF, LEAF, LEAF)


def test_node_shape():
    assert node_shape(A) is NodeShape.DOUBLED
    assert node_shape(B) is NodeShape.SINGLE
    assert node_shape(node(A, B)) is NodeShape.DISTINCT
    with pytest.raises(ValueError):
        node_shape(LEAF)


def test_dim_tree_examples():
    assert dim_tree(LEAF) == 1
    assert dim_tree(node(A, B)) == 2
    assert dim_tree(node(B, B)) == 1
    assert dim_tree(node(node(A, B), node(A, B))) == 4


def test_dim_forest_examples():
    assert dim_forest(()) == 1
    assert dim_forest((node(A, B), LEAF)) == 2
    chain = node(A, A)
    assert dim_forest((node(chain, chain), chain, A, LEAF)) == 1


@pytest.mark.parametrize("k", range(5))
def test_dimensions_are_powers_of_two_and_square_sum(k):
    dims = [dim_tree(t) for t in enumerate_trees(k)]
    assert all(d >= 1 and d & (d - 1) == 0 for d in dims)
    assert sum(d * d for d in dims) == 2 ** (2 ** k - 1)


def test_bin_expansion():
    assert bin_expansion(0) == ()
    assert bin_expansion(11) == (3, 1, 0)
    assert bin_expansion(2 ** 20) == (20,)


def test_forests_of_size():
    assert forests_of_size(0) == [()]
    assert len(forests_of_size(3)) == 2
    assert len(forests_of_size(11)) == 40
    assert forests_of_size(3) == [(A, LEAF), (B, LEAF)]
    for n in range(17):
        fs = forests_of_size(n)
        assert all(forest_size(f) == n for f in fs)
        assert len(set(fs)) == len(fs)
    with pytest.raises(ResourceLimitError):
        forests_of_size(32)


def test_make_forest_rejects_bad_heights():
    with pytest.raises(ValueError):
        make_forest((LEAF, A))
    with pytest.raises(ValueError):
        make_forest((A, B))


# -- text and JSON ---------------------------------------------------------------


def test_parse_examples():
    assert parse_tree(".") is LEAF
    assert parse_tree("((. .) (.))") is node(A, B)


def test_parse_reorders_with_warning():
    with pytest.warns(NonCanonicalTreeWarning):
        t = parse_tree("((.) (. .))")
    assert t is node(A, B)
    assert format_tree(t) == "((. .) (.))"


def test_parse_canonical_is_silent():
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        parse_tree("((. .) (.))")


@pytest.mark.parametrize("text, offset", [
    ("", 0),
    ("x", 0),
    ("(. . .)", 5),
    ("((.) .)", 5),
    ("(. .", 0),
    ("()", 0),
    (". .", 2),
])
def test_parse_errors(text, offset):
    with pytest.raises(TreeParseError) as info:
        parse_tree(text)
    assert info.value.offset == offset


@pytest.mark.parametrize("k", range(5))
def test_round_trip_all_trees(k):
    for t in enumerate_trees(k):
        assert parse_tree(format_tree(t)) is t
        assert tree_from_json(tree_to_json(t)) is t


def test_json_shape():
    assert json.loads(tree_to_json(node(A, B))) == [[".", "."], ["."]]
    assert tree_to_json(LEAF) == '"."'


def test_forest_round_trip():
    for f in forests_of_size(11):
        assert parse_forest(format_forest(f)) == f
        assert forest_from_obj(json.loads(json.dumps(forest_to_obj(f)))) == f
    assert parse_forest("[]") == ()


@st.composite
def trees(draw, max_height=4):
    k = draw(st.integers(0, max_height))

    def build(h):
        if h == 0:
            return LEAF
        if draw(st.booleans()):
            return node(build(h - 1))
        return node(build(h - 1), build(h - 1))
    return build(k)


@settings(max_examples=200)
@given(trees(max_height=6))
def test_round_trip_property(t):
    assert parse_tree(format_tree(t)) is t
    assert dim_tree(t) & (dim_tree(t) - 1) == 0


@settings(max_examples=200)
@given(trees(max_height=5), trees(max_height=5))
def test_node_is_order_independent(s, t):
    if s.height == t.height:
        assert node(s, t) is node(t, s)
        a, b = node(s, t).children
        assert a <= b
