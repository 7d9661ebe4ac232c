import pytest
from hypothesis import given, strategies as st

from liec.classify import classify
from liec.coloring import is_liec
from liec.errors import GraphError, NonColorableError
from liec.generators import gen_cycle, gen_random_cactus
from liec.graph import Graph
from liec.oracle import exact_chi_irr
from liec.unicyclic import cycle_order, liec_with_k, unicyclic_liec


def test_cycle_order_walk():
    g = Graph(6, [(3, 1), (1, 4), (4, 3), (4, 0), (0, 5), (3, 2)])
    assert cycle_order(g) == [1, 3, 4]


@pytest.mark.parametrize("g,k", [
    (gen_cycle(4), 2),
    (Graph(4, [(0, 1), (1, 2), (0, 2), (2, 3)]), 2),
    (gen_cycle(6), 3),
    (gen_cycle(8), 2),
])
def test_examples(g, k):
    col = unicyclic_liec(g)
    assert is_liec(col) and col.k == k == exact_chi_irr(g, 3)


def test_c4_uses_adjacent_pairs():
    col = unicyclic_liec(gen_cycle(4))
    assert sorted(len(col.colors_at(v)) for v in range(4)) == [1, 1, 2, 2]


def test_rejections():
    with pytest.raises(NonColorableError):
        unicyclic_liec(gen_cycle(5))
    with pytest.raises(NonColorableError):
        unicyclic_liec(Graph(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4)]))
    with pytest.raises(GraphError):
        unicyclic_liec(Graph(4, [(0, 1), (1, 2), (2, 3)]))


def test_fixed_k_none_when_too_few_colors():
    assert liec_with_k(gen_cycle(6), 1) is None


@given(st.integers(3, 40), st.integers(0, 10**6))
def test_bound_and_validity(n, seed):
    g = gen_random_cactus(n, 1, seed)
    if not classify(g).colorable:
        return
    col = unicyclic_liec(g)
    assert is_liec(col) and col.k <= 3


@given(st.integers(3, 12), st.integers(0, 10**6))
def test_exact_against_oracle(n, seed):
    g = gen_random_cactus(n, 1, seed)
    if classify(g).colorable:
        assert unicyclic_liec(g).k == exact_chi_irr(g, 3)
    else:
        assert exact_chi_irr(g, 4) is None


def test_large_instance():
    g = gen_random_cactus(3000, 1, seed=5)
    if classify(g).colorable:
        assert is_liec(unicyclic_liec(g))
