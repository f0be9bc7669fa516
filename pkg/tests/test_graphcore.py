"""Graph core tests, with exhaustive independent oracles for the predicates."""

from __future__ import annotations

from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from srgpq.graphcore import (
    CliqueClosureError,
    Graph,
    GraphError,
    NeighborhoodStructureError,
    common_neighbors,
    is_diamond_free,
    is_srg,
    is_srg_report,
    maximal_cliques_via_edges,
    phi_partition,
)
from srgpq.params import SrgParams


def _matrix_identity_holds(g, params):
    """Oracle: A^2 + (mu-lam)A + (mu-k)I == mu*J in exact integer arithmetic."""
    n = g.nu
    a = [[1 if g.adjacent(i, j) else 0 for j in range(n)] for i in range(n)]
    for i in range(n):
        for j in range(n):
            square = sum(a[i][t] * a[t][j] for t in range(n))
            value = (
                square
                + (params.mu - params.lam) * a[i][j]
                + (params.mu - params.k) * (1 if i == j else 0)
            )
            if value != params.mu:
                return False
    return True


def _has_induced_diamond(g):
    """Oracle: exhaustive scan of all 4-subsets for exactly five edges."""
    for quad in combinations(range(g.nu), 4):
        edges = sum(1 for a, b in combinations(quad, 2) if g.adjacent(a, b))
        if edges == 5:
            return True
    return False


def test_graph_validation():
    with pytest.raises(GraphError):
        Graph([0b10, 0b00])  # asymmetric
    with pytest.raises(GraphError):
        Graph([0b01, 0b10])  # self-loops
    with pytest.raises(GraphError):
        Graph.from_edges(2, [(0, 2)])
    g = Graph.from_edges(3, [(0, 1), (1, 2)])
    assert g.degree(1) == 2 and g.neighbors(1) == (0, 2)
    assert list(g.edges()) == [(0, 1), (1, 2)]
    assert g.edge_count == 2


def test_toggle_edge_round_trip():
    g = Graph.from_edges(4, [(0, 1), (2, 3)])
    h = g.toggle_edge(0, 2)
    assert h.adjacent(0, 2) and not g.adjacent(0, 2)
    assert h.toggle_edge(0, 2) == g


def test_common_neighbors_rook(rook):
    # (0,0) is vertex 0, (1,1) is vertex 5; common neighbors are (0,1)=1, (1,0)=4
    assert common_neighbors(rook, [0, 5]) == (1, 4)
    assert common_neighbors(rook, [0]) == rook.neighbors(0)
    with pytest.raises(GraphError):
        common_neighbors(rook, [])
    with pytest.raises(GraphError):
        common_neighbors(rook, [0, 99])


def test_common_neighbors_adjacent_pairs_gq35(gq35):
    for u, v in [(0, x) for x in gq35.neighbors(0)[:5]]:
        assert len(common_neighbors(gq35, [u, v])) == 2


def test_is_srg_witnesses(rook, shrikhande, gq35):
    assert is_srg(rook) == SrgParams(16, 6, 2, 2)
    assert is_srg(shrikhande) == SrgParams(16, 6, 2, 2)
    assert is_srg(gq35) == SrgParams(64, 18, 2, 6)


def test_is_srg_rejects_path():
    path4 = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)])
    params, witness = is_srg_report(path4)
    assert params is None and witness["reason"] == "not-regular"


def test_is_srg_rejects_complete():
    k4 = Graph.from_edges(4, [(a, b) for a, b in combinations(range(4), 2)])
    params, witness = is_srg_report(k4)
    assert params is None and witness["reason"] == "complete-or-edgeless"


def test_is_srg_agrees_with_matrix_identity(rook, shrikhande):
    for g in (rook, shrikhande):
        params = is_srg(g)
        assert params is not None
        assert _matrix_identity_holds(g, params)


def test_is_srg_matrix_identity_gq35(gq35):
    assert _matrix_identity_holds(gq35, is_srg(gq35))


def test_diamond_free_witnesses(rook, shrikhande):
    ok, witness = is_diamond_free(rook)
    assert ok and witness is None
    ok, witness = is_diamond_free(shrikhande)
    assert not ok
    a, b, c, d = witness
    edges = sum(1 for x, y in combinations(witness, 2) if shrikhande.adjacent(x, y))
    assert edges == 5  # the witness really induces a diamond


def test_diamond_free_edgeless():
    assert is_diamond_free(Graph([0, 0, 0])) == (True, None)


def test_diamond_free_agrees_with_exhaustive_scan(rook, shrikhande):
    for g in (rook, shrikhande):
        assert is_diamond_free(g)[0] == (not _has_induced_diamond(g))


@settings(max_examples=60, deadline=None)
@given(data=st.data(), n=st.integers(min_value=4, max_value=9))
def test_diamond_free_matches_scan_on_random_graphs(data, n):
    pair_count = n * (n - 1) // 2
    mask = data.draw(st.integers(min_value=0, max_value=(1 << pair_count) - 1))
    edges = []
    position = 0
    for a in range(n):
        for b in range(a + 1, n):
            if mask >> position & 1:
                edges.append((a, b))
            position += 1
    g = Graph.from_edges(n, edges)
    assert is_diamond_free(g)[0] == (not _has_induced_diamond(g))


def test_phi_partition_rook(rook):
    part = phi_partition(rook, 0)
    assert part.kind == "phi" and part.base_vertex == 0
    assert part.cells == ((1, 2, 3), (4, 8, 12))  # row triple, column triple


def test_phi_partition_gq35(gq35):
    for u in (0, 13, 63):
        part = phi_partition(gq35, u)
        assert len(part.cells) == 6
        assert part.covered() == set(gq35.neighbors(u))
        for cell in part.cells:
            assert all(gq35.adjacent(a, b) for a, b in combinations(cell, 2))


def test_phi_partition_single_triangle_apex():
    # apex 3 adjacent to a triangle {0,1,2}
    g = Graph.from_edges(4, [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (2, 3)])
    assert phi_partition(g, 3).cells == ((0, 1, 2),)


def test_phi_partition_rejects_non_triangle_components(shrikhande):
    # Shrikhande neighborhoods are 6-cycles, not triangle unions
    with pytest.raises(NeighborhoodStructureError):
        phi_partition(shrikhande, 0)


def test_maximal_cliques_counts(rook, gq35):
    rook_cliques = maximal_cliques_via_edges(rook)
    assert len(rook_cliques) == 8 and all(len(c) == 4 for c in rook_cliques)
    gq_cliques = maximal_cliques_via_edges(gq35)
    assert len(gq_cliques) == 96 and all(len(c) == 4 for c in gq_cliques)


def test_maximal_cliques_k4():
    k4 = Graph.from_edges(4, [(a, b) for a, b in combinations(range(4), 2)])
    assert maximal_cliques_via_edges(k4) == [(0, 1, 2, 3)]


def test_maximal_cliques_rejects_diamond(shrikhande):
    with pytest.raises(CliqueClosureError):
        maximal_cliques_via_edges(shrikhande)


def test_clique_cover_properties(gq35):
    cliques = maximal_cliques_via_edges(gq35)
    edge_cover = {}
    vertex_count = [0] * gq35.nu
    for clique in cliques:
        for v in clique:
            vertex_count[v] += 1
        for pair in combinations(clique, 2):
            assert pair not in edge_cover, "edge in two cliques"
            edge_cover[pair] = clique
    assert len(edge_cover) == gq35.edge_count  # every edge in exactly one clique
    assert all(c == 6 for c in vertex_count)  # k/3 cliques per vertex
