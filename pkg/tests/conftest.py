import random
from itertools import combinations, product

import pytest
from hypothesis import settings, strategies as st

from edcolor.graph import Graph, random_connected_graph

settings.register_profile("deterministic", derandomize=True, max_examples=60, deadline=None)
settings.load_profile("deterministic")

SEED = 20240601


def brute_force_chi(g: Graph, equitable: bool, dominator: bool) -> int:
    """Plain product over all k^n assignments; only for n <= 7."""
    n = g.n
    closed = {v: g.adj[v - 1] | {v} for v in g.vertices}
    edges = g.edges()
    for k in range(1, n + 1):
        for colors in product(range(1, k + 1), repeat=n):
            if len(set(colors)) != k:
                continue
            if any(colors[u - 1] == colors[v - 1] for u, v in edges):
                continue
            classes = [{v for v in g.vertices if colors[v - 1] == c} for c in range(1, k + 1)]
            if equitable and max(map(len, classes)) - min(map(len, classes)) > 1:
                continue
            if dominator and not all(any(cl <= closed[v] for cl in classes) for v in g.vertices):
                continue
            return k
    raise AssertionError("unreachable")


@st.composite
def graphs(draw, min_n: int = 1, max_n: int = 7) -> Graph:
    n = draw(st.integers(min_n, max_n))
    pairs = list(combinations(range(1, n + 1), 2))
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [p for p, keep in zip(pairs, chosen) if keep])


def random_corpus(count: int, max_n: int, seed: int = SEED, connected: bool = True) -> list[Graph]:
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        n = rng.randint(1, max_n)
        if connected:
            out.append(random_connected_graph(n, rng, p=rng.choice([0.2, 0.4, 0.6])))
        else:
            pairs = list(combinations(range(1, n + 1), 2))
            out.append(Graph.from_edges(n, [p for p in pairs if rng.random() < 0.4]))
    return out


@pytest.fixture
def corpus_small():
    return random_corpus(30, 6, connected=False)
