import itertools
import random

import pytest
from hypothesis import settings, strategies as st

from uklc.graph import build_graph
from uklc.solver import ListAssignment

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


@st.composite
def graphs(draw, min_n=1, max_n=7):
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return build_graph(n, chosen)


@st.composite
def graphs_with_lists(draw, max_n=6, max_color=4, max_size=3):
    G = draw(graphs(max_n=max_n))
    sizes = st.integers(1, max_size)
    lists = [
        draw(st.lists(st.integers(1, max_color), min_size=1, max_size=draw(sizes), unique=True))
        for _ in range(G.n)
    ]
    return G, ListAssignment(lists)


def random_graph(rng: random.Random, n: int, p: float):
    return build_graph(n, [e for e in itertools.combinations(range(n), 2) if rng.random() < p])


def random_lists(rng: random.Random, n: int, k: int, t: int) -> ListAssignment:
    return ListAssignment(rng.sample(range(1, t + 1), k) for _ in range(n))


def brute_colorings(G, L):
    """Every proper coloring, by plain product enumeration."""
    return [
        c for c in itertools.product(*L)
        if all(c[u] != c[v] for u, v in G.edges)
    ]


@pytest.fixture
def rng():
    return random.Random(20240611)
