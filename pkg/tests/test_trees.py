import itertools

import networkx as nx
import pytest
from hypothesis import given, strategies as st

from liec.coloring import EdgeColoring, color_degree, is_liec, sum_colorings, verify_aliec, verify_liec
from liec.errors import GraphError, NonColorableError, NotApplicable
from liec.generators import gen_path, gen_random_tree
from liec.graph import Graph
from liec.oracle import exact_chi_irr
from liec.trees import (RESISTANT, Shrub, ShrubBasedColoring, a_sequence, find_inversion,
                        rainbow_3liec, search_inversions, shrub_2aliec, shrub_based_coloring,
                        shrubs_at, tree_liec, tree_liec_avoiding)

STAR = Graph(4, [(0, 1), (0, 2), (0, 3)])
SPIDER = Graph(7, [(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)])
DOUBLE_STAR = Graph(6, [(0, 1), (0, 2), (0, 3), (1, 4), (1, 5)])
# center 0; shrub a-values come out as 3, 2, 2
RESISTANT_322 = Graph(8, [(0, 1), (1, 2), (1, 3), (0, 4), (4, 5), (0, 6), (6, 7)])
# smallest tree that needs three colors
CHI3_TREE = Graph(10, [(0, 1), (0, 6), (0, 8), (1, 2), (1, 4), (2, 3), (4, 5), (6, 7), (8, 9)])


def brute_force_inversion(sbc):
    """First subset in (size, lexicographic) order whose inversion is a liec."""
    k = sbc.degree
    a = sbc.a_values()
    for s in range(k + 1):
        for chosen in itertools.combinations(range(k), s):
            if all(a[i] != s for i in chosen) and all(a[i] != k - s for i in range(k) if i not in chosen):
                return chosen
    return None


def resistant_4332():
    """Degree-4 center whose shrubs carry hand-picked aliecs with a-values 4, 3, 3, 2."""
    edges = [(0, 1), (1, 5), (1, 6), (1, 7), (0, 2), (2, 8), (2, 9),
             (0, 3), (3, 10), (3, 11), (0, 4), (4, 12)]
    t = Graph(13, edges)
    shrubs = tuple(shrubs_at(t, 0))
    parts = tuple(EdgeColoring(s.tree, {e: 1 for e in s.tree.edges}, 2) for s in shrubs)
    return ShrubBasedColoring(t, 0, shrubs, parts, sum_colorings(parts, t))


def test_shrub_must_be_rooted_at_leaf():
    with pytest.raises(GraphError):
        Shrub(gen_path(2), 1)


def test_shrub_aliec_examples():
    one = shrub_2aliec(Shrub(gen_path(1), 0))
    assert one.colors == {(0, 1): 1}
    two = shrub_2aliec(Shrub(gen_path(2), 0))
    assert set(two.colors.values()) == {1} and is_liec(two)


def test_every_small_shrub_gets_an_aliec():
    count = 0
    for m in range(1, 10):
        for t in nx.nonisomorphic_trees(m + 1):
            g = Graph(m + 1, t.edges())
            for leaf in (v for v in range(g.n) if g.degree(v) == 1):
                s = Shrub(g, leaf)
                col = shrub_2aliec(s)
                assert col[s.root_edge] == 1 and col.k <= 2 and verify_aliec(s, col)
                count += 1
    assert count == 965


def test_shrub_based_examples():
    star = shrub_based_coloring(STAR, 0)
    assert set(star.coloring.colors.values()) == {1} and is_liec(star.coloring)
    assert a_sequence(star) == [1, 1, 1]
    spider = shrub_based_coloring(SPIDER, 0)
    assert set(spider.coloring.colors.values()) == {1}
    assert a_sequence(spider) == [2, 2, 2] and is_liec(spider.coloring)
    assert a_sequence(shrub_based_coloring(DOUBLE_STAR, 0)) == [3, 1, 1]


@given(st.integers(2, 40), st.integers(0, 10**6), st.data())
def test_shrub_based_invariants(n, seed, data):
    t = gen_random_tree(n, seed)
    u = data.draw(st.sampled_from([v for v in range(n) if t.degree(v)]))
    sbc = shrub_based_coloring(t, u)
    assert sbc.coloring.colors_at(u) == {1}
    for e, _ in verify_liec(sbc.coloring).violations:
        assert u in e


def test_inversion_examples():
    assert find_inversion(shrub_based_coloring(STAR, 0)) == ()
    assert is_liec(search_inversions(shrub_based_coloring(STAR, 0)))
    resistant = shrub_based_coloring(RESISTANT_322, 0)
    assert a_sequence(resistant) == [3, 2, 2]
    assert search_inversions(resistant) is None
    dbl = search_inversions(shrub_based_coloring(DOUBLE_STAR, 0))
    assert dbl is not None and is_liec(dbl)


@given(st.integers(2, 30), st.integers(0, 10**6), st.data())
def test_inversion_search_matches_brute_force(n, seed, data):
    t = gen_random_tree(n, seed)
    u = data.draw(st.sampled_from([v for v in range(n) if t.degree(v)]))
    sbc = shrub_based_coloring(t, u)
    assert find_inversion(sbc) == brute_force_inversion(sbc)


def test_only_two_sequences_resist_inversion():
    # a-values of a top vertex are >= 1; sequences are over center degrees 1..6
    found = {}
    for k in range(1, 7):
        for seq in itertools.combinations_with_replacement(range(k + 2, 0, -1), k):
            a = list(seq)
            ok = any(all(a[i] != s for i in c) and all(a[i] != k - s for i in range(k) if i not in c)
                     for s in range(k + 1) for c in itertools.combinations(range(k), s))
            if not ok:
                found.setdefault(k, []).append(a)
    # (1,) and (2, 1) only arise inside odd paths
    assert found == {1: [[1]], 2: [[2, 1]], 3: [RESISTANT[3]], 4: [RESISTANT[4]]}


@pytest.mark.parametrize("ci", [0, 1, 2])
def test_rainbow_each_shrub(ci):
    sbc = shrub_based_coloring(RESISTANT_322, 0)
    col = rainbow_3liec(sbc, ci)
    assert is_liec(col) and col.used_colors() == {1, 2, 3}
    assert [v for v in range(col.graph.n) if len(col.colors_at(v)) == 3] == [0]
    assert {v for e, c in col.colors.items() if c == 3 for v in e} <= sbc.shrubs[ci].vertices()


@pytest.mark.parametrize("ci", [0, 1, 2, 3])
def test_rainbow_degree_four(ci):
    sbc = resistant_4332()
    assert a_sequence(sbc) == [4, 3, 3, 2] and find_inversion(sbc) is None
    col = rainbow_3liec(sbc, ci)
    assert is_liec(col)
    assert [v for v in range(col.graph.n) if len(col.colors_at(v)) == 3] == [0]


def test_rainbow_rejects_invertible_center():
    with pytest.raises(NotApplicable):
        rainbow_3liec(shrub_based_coloring(DOUBLE_STAR, 0))


def test_tree_examples():
    assert tree_liec(gen_path(2)).k == 1
    assert tree_liec(Graph(1)).k == 0
    col = tree_liec(CHI3_TREE)
    assert col.k == 3 and is_liec(col) and exact_chi_irr(CHI3_TREE, 3) == 3
    with pytest.raises(NonColorableError):
        tree_liec(gen_path(3))
    with pytest.raises(GraphError):
        tree_liec(Graph(3, [(0, 1), (1, 2), (0, 2)]))


def test_no_tree_below_nine_edges_needs_three_colors():
    for m in range(1, 9):
        for t in nx.nonisomorphic_trees(m + 1):
            g = Graph(m + 1, t.edges())
            k = exact_chi_irr(g, 3)
            assert k is None or k <= 2


@given(st.integers(2, 60), st.integers(0, 10**6))
def test_tree_bounds(n, seed):
    t = gen_random_tree(n, seed)
    try:
        col = tree_liec(t)
    except NonColorableError:
        assert t.max_degree() <= 2 and t.m % 2
        return
    assert is_liec(col) and col.k <= 3
    if t.max_degree() >= 5:
        assert col.k <= 2


@given(st.integers(2, 12), st.integers(0, 10**6))
def test_tree_solver_against_oracle(n, seed):
    t = gen_random_tree(n, seed)
    exact = exact_chi_irr(t, 3)
    if exact is None:
        with pytest.raises(NonColorableError):
            tree_liec(t)
    else:
        assert exact <= tree_liec(t).k <= 3


def test_avoiding_keeps_color_three_off_given_vertices():
    avoid = {2, 5, 7}
    col = tree_liec_avoiding(RESISTANT_322, avoid)
    assert is_liec(col)
    assert all(color_degree(col, x, 3) == 0 for x in avoid)
    col = tree_liec_avoiding(CHI3_TREE, {3, 5})
    assert is_liec(col) and col.k == 3
    assert color_degree(col, 3, 3) == color_degree(col, 5, 3) == 0


def test_avoiding_needs_independent_set():
    with pytest.raises(GraphError):
        tree_liec_avoiding(gen_path(2), {0, 1})


@given(st.integers(3, 30), st.integers(0, 10**6), st.data())
def test_avoiding_property(n, seed, data):
    t = gen_random_tree(n, seed)
    if t.max_degree() <= 2 and t.m % 2:
        return
    leaves = [v for v in range(n) if t.degree(v) == 1]
    avoid = set(data.draw(st.lists(st.sampled_from(leaves), max_size=2)))
    col = tree_liec_avoiding(t, avoid)
    assert is_liec(col) and col.k <= 3
    assert all(color_degree(col, x, 3) == 0 for x in avoid)
