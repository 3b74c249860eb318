import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from edgelind import graph as gr
from edgelind import kernels

py = kernels.python_backend
compiled = kernels.compiled_backend

needs_compiled = pytest.mark.skipif(compiled is None, reason="compiled extension not built")


@st.composite
def int_matrices(draw):
    r = draw(st.integers(1, 9))
    c = draw(st.integers(1, 9))
    return np.array([draw(st.lists(st.integers(0, 10), min_size=c, max_size=c)) for _ in range(r)], dtype=np.int64)


def test_backend_selection():
    assert kernels.backend is (compiled or py)
    assert kernels.COMPILED == (compiled is not None)


@needs_compiled
@settings(max_examples=150)
@given(int_matrices(), st.sampled_from([2, 3, 5, 65521]))
def test_rank_and_rref_agree(a, p):
    assert compiled.rank_mod_p(a.copy(), p) == py.rank_mod_p(a.copy(), p)
    ca, cp = compiled.rref_mod_p(a.copy(), p)
    pa, pp = py.rref_mod_p(a.copy(), p)
    assert list(cp) == list(pp)
    assert np.array_equal(np.asarray(ca) % p, np.asarray(pa) % p)


@needs_compiled
@pytest.mark.parametrize("n", [3, 4, 5])
def test_canonical_check_agrees(n):
    import itertools

    pairs = list(itertools.combinations(range(n), 2))
    for bits in range(1 << len(pairs)):
        g = gr.Graph.from_edges(n, [e for i, e in enumerate(pairs) if bits >> i & 1])
        adj = list(g.adj)
        assert compiled.is_max_canonical(adj, n) == py.is_max_canonical(adj, n)


@needs_compiled
@settings(max_examples=150)
@given(st.integers(1, 8), st.data())
def test_fold_reduce_agrees(n, data):
    import itertools

    pairs = list(itertools.combinations(range(n), 2))
    edges = data.draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    g = gr.Graph.from_edges(n, edges)
    mask = data.draw(st.integers(0, (1 << n) - 1))
    assert compiled.fold_reduce(list(g.adj), mask) == py.fold_reduce(list(g.adj), mask)


def test_fold_reduce_drops_dominating_vertex():
    # path 0-1-2: N(0) = {1} is inside N(2) = {1}, so one end is dropped
    g = gr.path(3)
    out = py.fold_reduce(list(g.adj), 0b111)
    assert bin(out).count("1") == 2
