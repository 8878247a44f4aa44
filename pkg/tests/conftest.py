"""Shared fixtures: the small named graphs and random generators."""

from __future__ import annotations

import random
from pathlib import Path

import pytest

from hermix import MixedGraph, parse_graph

FIXTURES = Path(__file__).parent / "fixtures"


@pytest.fixture
def t2() -> MixedGraph:
    """Single arc 0 -> 1."""
    return MixedGraph.from_edges(2, [], [(0, 1)])


@pytest.fixture
def dc3() -> MixedGraph:
    """Directed triangle 0 -> 1 -> 2 -> 0."""
    return MixedGraph.from_edges(3, [], [(0, 1), (1, 2), (2, 0)])


@pytest.fixture
def uc3() -> MixedGraph:
    """Undirected triangle."""
    return MixedGraph.from_edges(3, [(0, 1), (0, 2), (1, 2)], [])


@pytest.fixture
def ac4() -> MixedGraph:
    """Alternating 4-cycle: arcs 0->1, 2->1, 2->3, 0->3."""
    return MixedGraph.from_edges(4, [], [(0, 1), (2, 1), (2, 3), (0, 3)])


@pytest.fixture
def dc4() -> MixedGraph:
    """Directed 4-cycle 0 -> 1 -> 2 -> 3 -> 0."""
    return MixedGraph.from_edges(4, [], [(0, 1), (1, 2), (2, 3), (3, 0)])


@pytest.fixture
def p3() -> MixedGraph:
    """Path: arc 0 -> 1 plus digon 1 -- 2."""
    return MixedGraph.from_edges(3, [(1, 2)], [(0, 1)])


@pytest.fixture
def k4x() -> MixedGraph:
    """The stored K4 orientation that is a second-kind monograph for i."""
    return parse_graph((FIXTURES / "k4x.mg").read_text())


def complete_mixed(n: int, rng: random.Random) -> MixedGraph:
    """K_n with every pair given a random edge kind."""
    digons: list[tuple[int, int]] = []
    arcs: list[tuple[int, int]] = []
    for u in range(n):
        for v in range(u + 1, n):
            roll = rng.randrange(3)
            if roll == 0:
                digons.append((u, v))
            elif roll == 1:
                arcs.append((u, v))
            else:
                arcs.append((v, u))
    return MixedGraph.from_edges(n, digons, arcs)


def random_mixed_tree(rng: random.Random, n: int) -> MixedGraph:
    """Random tree shape; each edge independently digon or a random arc."""
    digons: list[tuple[int, int]] = []
    arcs: list[tuple[int, int]] = []
    for v in range(1, n):
        u = rng.randrange(v)
        roll = rng.randrange(3)
        if roll == 0:
            digons.append((u, v))
        elif roll == 1:
            arcs.append((u, v))
        else:
            arcs.append((v, u))
    return MixedGraph.from_edges(n, digons, arcs)


def random_mixed_graph(rng: random.Random, n: int, edge_prob: float = 0.5) -> MixedGraph:
    digons: list[tuple[int, int]] = []
    arcs: list[tuple[int, int]] = []
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() >= edge_prob:
                continue
            roll = rng.randrange(3)
            if roll == 0:
                digons.append((u, v))
            elif roll == 1:
                arcs.append((u, v))
            else:
                arcs.append((v, u))
    return MixedGraph.from_edges(n, digons, arcs)


def random_connected_mixed_graph(
    rng: random.Random, n: int, extra_prob: float = 0.4
) -> MixedGraph:
    """A random tree made connected-by-construction plus random extra edges."""
    tree = random_mixed_tree(rng, n)
    digons: list[tuple[int, int]] = []
    arcs: list[tuple[int, int]] = []
    taken = {e.pair for e in tree.edges}
    for e in tree.edges:
        if e.kind.value == "digon":
            digons.append((e.u, e.v))
        else:
            arcs.append((e.u, e.v))
    for u in range(n):
        for v in range(u + 1, n):
            if (u, v) in taken or rng.random() >= extra_prob:
                continue
            roll = rng.randrange(3)
            if roll == 0:
                digons.append((u, v))
            elif roll == 1:
                arcs.append((u, v))
            else:
                arcs.append((v, u))
    return MixedGraph.from_edges(n, digons, arcs)
