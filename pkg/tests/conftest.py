import hypothesis.strategies as st
import pytest
from hypothesis import settings

from sak.graph import build_graph

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


@st.composite
def signed_graphs(draw, min_n=1, max_n=9):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    signs = draw(st.lists(st.sampled_from(["+", "-", None]), min_size=len(pairs), max_size=len(pairs)))
    return build_graph(n, [(u, v, s) for (u, v), s in zip(pairs, signs) if s])


@pytest.fixture
def seven():
    from sak.corpus import seven_vertex_signed

    return seven_vertex_signed()
