"""Combinatorial characteristic polynomial against the trace recursion."""

from __future__ import annotations

import itertools
import math
import random

import numpy as np
import pytest

from hermix import (
    ALPHA_GAMMA,
    ALPHA_I,
    ALPHA_OMEGA,
    ALPHA_ONE,
    EdgeKind,
    ElementarySubgraph,
    MixedGraph,
    ScaleLimitError,
    build_hermitian,
    char_poly,
    char_poly_expansion,
    eigen_decomposition,
    enumerate_elementary,
    make_alpha,
    subgraph_term,
    underlying,
)

from conftest import complete_mixed, random_mixed_graph

ALPHAS = (ALPHA_I, ALPHA_GAMMA, ALPHA_OMEGA, make_alpha("root:1/5"), make_alpha("angle:1.0"))


class TestEnumerateElementary:
    def test_k0_is_empty_packing(self, uc3):
        subs = enumerate_elementary(uc3, 0)
        assert len(subs) == 1
        assert subs[0].p2_edges == ()
        assert subs[0].cycles == ()

    def test_k1_none(self, uc3):
        assert enumerate_elementary(uc3, 1) == ()

    def test_uc3_k2(self, uc3):
        subs = enumerate_elementary(uc3, 2)
        assert len(subs) == 3
        assert all(len(s.p2_edges) == 1 and not s.cycles for s in subs)

    def test_uc3_k3(self, uc3):
        subs = enumerate_elementary(uc3, 3)
        assert len(subs) == 1
        assert subs[0].cycles[0].edge_count == 3

    def test_k4_k4(self):
        rng = random.Random(19)
        g = complete_mixed(4, rng)
        subs = enumerate_elementary(g, 4)
        assert len(subs) == 6
        matchings = [s for s in subs if len(s.p2_edges) == 2]
        quads = [s for s in subs if s.cycles and s.cycles[0].edge_count == 4]
        assert len(matchings) == 3
        assert len(quads) == 3

    def test_rank_data(self, uc3):
        tri = enumerate_elementary(uc3, 3)[0]
        assert tri.rank_data == (2, 1)
        edge = enumerate_elementary(uc3, 2)[0]
        assert edge.rank_data == (1, 0)

    def test_k_out_of_range(self, uc3):
        with pytest.raises(ValueError):
            enumerate_elementary(uc3, -1)
        with pytest.raises(ValueError):
            enumerate_elementary(uc3, 4)

    def test_scale_guard(self):
        big = MixedGraph(13, frozenset())
        with pytest.raises(ScaleLimitError):
            enumerate_elementary(big, 0)
        with pytest.raises(ScaleLimitError):
            char_poly_expansion(big, ALPHA_I)

    def test_matches_edge_subset_brute_force(self):
        rng = random.Random(29)
        for _ in range(10):
            g = random_mixed_graph(rng, rng.randrange(1, 6), edge_prob=0.7)
            for k in range(g.n + 1):
                got = enumerate_elementary(g, k)
                assert len(got) == _count_elementary_by_edges(g, k)


def _count_elementary_by_edges(g: MixedGraph, k: int) -> int:
    """Independent count: edge subsets whose components are P2 or cycles."""
    edges = [e.pair for e in g.sorted_edges]
    count = 0
    for r in range(len(edges) + 1):
        for subset in itertools.combinations(edges, r):
            degree: dict[int, int] = {}
            for u, v in subset:
                degree[u] = degree.get(u, 0) + 1
                degree[v] = degree.get(v, 0) + 1
            if len(degree) != k:
                continue
            if subset and not all(d in (1, 2) for d in degree.values()):
                continue
            if not _components_are_elementary(subset):
                continue
            count += 1
    return count


def _components_are_elementary(subset: tuple[tuple[int, int], ...]) -> bool:
    # each connected component must be a single edge or a simple cycle
    adj: dict[int, list[int]] = {}
    for u, v in subset:
        adj.setdefault(u, []).append(v)
        adj.setdefault(v, []).append(u)
    seen: set[int] = set()
    for start in adj:
        if start in seen:
            continue
        stack, comp = [start], set()
        while stack:
            x = stack.pop()
            if x in comp:
                continue
            comp.add(x)
            stack.extend(adj[x])
        seen |= comp
        comp_edges = sum(1 for u, v in subset if u in comp)
        degs = {len(adj[x]) for x in comp}
        if comp_edges == 1 and degs == {1}:
            continue
        if comp_edges == len(comp) and degs == {2}:
            continue
        return False
    return True


class TestSubgraphTerm:
    def test_single_edge_term(self, uc3):
        sub = enumerate_elementary(uc3, 2)[0]
        assert subgraph_term(uc3, ALPHA_GAMMA, sub) == -1.0

    def test_triangle_term_depends_on_alpha(self, dc3):
        tri = enumerate_elementary(dc3, 3)[0]
        # balance 3: gamma gives Re(1) with r=2, s=1 -> +2; i gives Re(-i)=0
        assert subgraph_term(dc3, ALPHA_GAMMA, tri) == pytest.approx(2.0)
        assert subgraph_term(dc3, ALPHA_I, tri) == pytest.approx(0.0)

    def test_direction_independent(self):
        rng = random.Random(59)
        for _ in range(10):
            g = random_mixed_graph(rng, rng.randrange(3, 6), edge_prob=0.7)
            for k in range(3, g.n + 1):
                for sub in enumerate_elementary(g, k):
                    if not sub.cycles:
                        continue
                    flipped = ElementarySubgraph(
                        sub.p2_edges,
                        tuple(c.reversed() for c in sub.cycles),
                        sub.vertex_set,
                    )
                    for alpha in ALPHAS:
                        a = subgraph_term(g, alpha, sub)
                        b = subgraph_term(g, alpha, flipped)
                        assert math.isclose(a, b, abs_tol=1e-12)


class TestCharPolyExpansion:
    def test_c2_is_minus_edge_count(self):
        rng = random.Random(61)
        for _ in range(20):
            g = random_mixed_graph(rng, rng.randrange(2, 7))
            for alpha in (ALPHA_I, make_alpha("angle:1.0")):
                poly = char_poly_expansion(g, alpha)
                assert poly.coefficients[1] == pytest.approx(-float(len(g.edges)))

    def test_dc3_fixed_polys(self, dc3):
        assert np.allclose(
            char_poly_expansion(dc3, ALPHA_GAMMA).coefficients, [0.0, -3.0, -2.0]
        )
        assert np.allclose(
            char_poly_expansion(dc3, ALPHA_I).coefficients, [0.0, -3.0, 0.0]
        )

    def test_agrees_with_trace_recursion(self):
        rng = random.Random(67)
        for _ in range(30):
            g = random_mixed_graph(rng, rng.randrange(1, 7), edge_prob=0.6)
            for alpha in ALPHAS:
                combinatorial = char_poly_expansion(g, alpha).coefficients
                numeric = char_poly(build_hermitian(g, alpha)).coefficients
                gap = max(abs(a - b) for a, b in zip(combinatorial, numeric))
                assert gap <= 1e-8

    def test_determinant_vs_eigenvalue_product(self):
        rng = random.Random(71)
        for _ in range(15):
            g = random_mixed_graph(rng, rng.randrange(1, 7))
            for alpha in (ALPHA_I, ALPHA_OMEGA):
                poly = char_poly_expansion(g, alpha)
                spec, _ = eigen_decomposition(build_hermitian(g, alpha))
                det = math.prod(spec.values)
                constant = poly.coefficients[-1]
                assert math.isclose((-1.0) ** g.n * constant, det, abs_tol=1e-7)

    def test_underlying_alpha_one(self):
        rng = random.Random(73)
        for _ in range(10):
            g = random_mixed_graph(rng, rng.randrange(1, 7))
            mixed = char_poly_expansion(g, ALPHA_ONE).coefficients
            skeleton = MixedGraph.from_edges(
                g.n, [e.pair for e in g.edges], []
            )
            plain = char_poly_expansion(skeleton, ALPHA_ONE).coefficients
            assert np.allclose(mixed, plain)


@pytest.mark.slow
def test_oracle_equivalence_n5_sample():
    """Heavier randomized cross-validation at n = 5, beyond the default suite."""
    from hermix import mixed_graph_from_code

    rng = random.Random(79)
    codes = rng.sample(range(4**10), 20000)
    for code in codes:
        g = mixed_graph_from_code(5, code)
        for alpha in (ALPHA_I, ALPHA_GAMMA, ALPHA_OMEGA):
            combinatorial = char_poly_expansion(g, alpha).coefficients
            numeric = char_poly(build_hermitian(g, alpha)).coefficients
            assert max(abs(a - b) for a, b in zip(combinatorial, numeric)) <= 1e-8
