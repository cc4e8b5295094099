import random
from itertools import combinations

from hypothesis import HealthCheck, settings, strategies as st

from hopfinv.objects import Graph, Permutation, Poset

settings.register_profile("default", deadline=None, max_examples=40,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@st.composite
def graphs(draw, min_n=0, max_n=5):
    n = draw(st.integers(min_n, max_n))
    pairs = list(combinations(range(1, n + 1), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph.from_edges(n, chosen)


@st.composite
def permutations_(draw, min_n=0, max_n=6):
    n = draw(st.integers(min_n, max_n))
    return Permutation(tuple(draw(st.permutations(range(1, n + 1)))))


@st.composite
def posets(draw, min_n=0, max_n=5):
    """Random labelled posets: transitive closure of random pairs of a
    random linear extension."""
    n = draw(st.integers(min_n, max_n))
    order = draw(st.permutations(range(1, n + 1)))
    pairs = list(combinations(order, 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Poset.from_relations(n, chosen)


def random_graph(n, rng: random.Random, p=0.5) -> Graph:
    return Graph.from_edges(n, [e for e in combinations(range(1, n + 1), 2) if rng.random() < p])
