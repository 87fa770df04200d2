"""Shared fixtures and graph sampling helpers."""

from __future__ import annotations

import random

import pytest
from hypothesis import strategies as st

from alphaenergy import (Graph, complete, complete_bipartite, cycle, petersen)


def random_graph(rng: random.Random, max_p: int = 30) -> Graph:
    """One seeded Erdos-Renyi-style graph with uniformly drawn density."""
    p = rng.randint(1, max_p)
    density = rng.random()
    edges = tuple((i, j) for i in range(p) for j in range(i + 1, p)
                  if rng.random() < density)
    return Graph(p, edges)


@st.composite
def graphs(draw, min_p: int = 1, max_p: int = 10):
    p = draw(st.integers(min_value=min_p, max_value=max_p))
    pairs = [(i, j) for i in range(p) for j in range(i + 1, p)]
    if not pairs:
        return Graph(p)
    edges = draw(st.sets(st.sampled_from(pairs)))
    return Graph(p, tuple(edges))


def regular_bases() -> list[tuple[str, Graph]]:
    """The standard regular test menagerie."""
    rows: list[tuple[str, Graph]] = []
    rows.extend((f"C{n}", cycle(n)) for n in range(3, 11))
    rows.extend((f"K{n}", complete(n)) for n in range(2, 9))
    rows.extend((f"K{a},{a}", complete_bipartite(a, a)) for a in range(2, 5))
    rows.append(("petersen", petersen()))
    return rows


@pytest.fixture(scope="session")
def bases() -> list[tuple[str, Graph]]:
    return regular_bases()
