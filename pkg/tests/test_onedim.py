import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from sylow2.bratteli import build_diagram, res_forest
from sylow2.errors import ResourceLimitError
from sylow2.graphs import export_json
from sylow2.onedim import (
    L_seq,
    L_string,
    beta_forest,
    beta_forest_inverse,
    beta_inverse,
    beta_tree,
    build_onedim_direct,
    build_onedim_recursive,
    count_onedim,
    format_seq,
    is_one_dim,
    onedim_from_diagram,
    seq_size,
    unique_onedim_restriction,
)
from sylow2.trees import LEAF, dim_forest, dim_tree, enumerate_trees, forests_of_size, node

A = node(LEAF, LEAF)
B = node(LEAF)


def test_is_one_dim():
    assert is_one_dim(LEAF)
    assert not is_one_dim(node(A, B))
    assert is_one_dim(node(B, B))


@pytest.mark.parametrize("k", range(5))
def test_one_dim_iff_dimension_one(k):
    for t in enumerate_trees(k):
        assert is_one_dim(t) == (dim_tree(t) == 1)
    assert sum(is_one_dim(t) for t in enumerate_trees(k)) == 2 ** k


def test_beta_examples():
    assert beta_tree(LEAF) == ""
    assert beta_tree(B) == "1"
    assert beta_tree(A) == "0"
    assert beta_tree(node(B, B)) == "01"
    assert beta_inverse("") is LEAF
    assert beta_inverse("0") is A
    assert beta_inverse("10") is node(A)
    with pytest.raises(ValueError):
        beta_tree(node(A, B))


def test_beta_round_trips():
    for k in range(7):
        for bits in itertools.product("01", repeat=k):
            b = "".join(bits)
            t = beta_inverse(b)
            assert t.height == k and is_one_dim(t)
            assert beta_tree(t) == b
    for k in range(5):
        for t in enumerate_trees(k):
            if is_one_dim(t):
                assert beta_inverse(beta_tree(t)) is t


@given(st.text(alphabet="01", max_size=12))
def test_beta_round_trip_property(b):
    assert beta_tree(beta_inverse(b)) == b


def test_L_string_examples():
    assert L_string("0") == ("",)
    assert L_string("01") == ("1", "")
    assert L_string("110") == ("10", "0", "")
    with pytest.raises(ValueError):
        L_string("")


@given(st.text(alphabet="01", min_size=1, max_size=12))
def test_L_string_size(b):
    assert seq_size(L_string(b)) == 2 ** len(b) - 1


def test_L_seq_examples():
    assert L_seq(("1",)) == ("",)
    assert L_seq(("01", "1")) == ("01", "")
    assert L_seq(("110", "10", "1")) == ("110", "10", "")
    assert L_seq(("",)) == ()
    with pytest.raises(ValueError):
        L_seq(())


@pytest.mark.parametrize("n", range(1, 17))
def test_commutation_with_restriction(n):
    for f in forests_of_size(n):
        if dim_forest(f) != 1:
            continue
        down = unique_onedim_restriction(f)
        assert L_seq(beta_forest(f)) == beta_forest(down)
        assert beta_forest_inverse(beta_forest(f)) == f


@pytest.mark.parametrize("n", range(1, 17))
def test_single_one_dim_constituent(n):
    for f in forests_of_size(n):
        if dim_forest(f) == 1:
            assert sum(dim_forest(g) == 1 for g in res_forest(f)) == 1


def test_count_onedim():
    assert count_onedim(1) == 1
    assert count_onedim(4) == 4
    assert count_onedim(15) == 64
    assert count_onedim(0) == 1


def test_direct_examples():
    assert build_onedim_direct(4).level_counts() == [1, 1, 2, 2, 4]
    assert build_onedim_direct(15).level_counts()[15] == 64
    d0 = build_onedim_direct(0)
    assert d0.levels == [[()]] and d0.edges == []
    with pytest.raises(ResourceLimitError):
        build_onedim_direct(32)


def test_direct_counts_and_unique_down_edges():
    d = build_onedim_direct(31)
    assert d.level_counts() == [count_onedim(n) for n in range(32)]
    down = d.down()
    for n in range(1, 32):
        for i in range(len(d.level(n))):
            assert len(down[(n, i)]) == 1


def test_direct_matches_filtered_bratteli():
    assert build_onedim_direct(16).same_graph(onedim_from_diagram(build_diagram(16)))


@pytest.mark.parametrize("N", [1, 3, 7, 15, 31])
def test_recursive_matches_direct(N):
    r = build_onedim_recursive(N)
    d = build_onedim_direct(N)
    assert r.same_graph(d)
    assert export_json(r) == export_json(d)


@pytest.mark.parametrize("N", [0, 2, 5, 12])
def test_recursive_truncation(N):
    assert build_onedim_recursive(N).same_graph(build_onedim_direct(N))


def test_recursive_small_stages():
    one = build_onedim_recursive(1)
    assert one.levels == [[()], [("",)]] and one.edges == [(1, 0, 0)]
    three = build_onedim_recursive(3)
    assert three.levels[2] == [("0",), ("1",)]
    assert three.levels[3] == [("0", ""), ("1", "")]


def test_extension_property():
    for k in range(6):
        for bits in itertools.product("01", repeat=k):
            b = "".join(bits)
            longer = ["".join(c) for c in itertools.product("01", repeat=k + 1)]
            through = [c for c in longer if L_string(c)[0] == b]
            assert sorted(through) == sorted(["0" + b, "1" + b])


def test_format_seq():
    assert format_seq(("01", "")) == "(01,ε)"
    assert format_seq(()) == "()"
