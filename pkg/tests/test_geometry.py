"""Geometry tests: witness constructions, PQ axioms, round trips, file format."""

from __future__ import annotations

from itertools import combinations

import pytest

from srgpq.geometry import (
    GeometryError,
    GF4Element,
    IncidenceStructure,
    build_gq35,
    build_rook4,
    build_shrikhande,
    collinearity_graph,
    format_incidence,
    gq35_connection_set,
    graph_to_pq,
    hyperoval_points,
    parse_incidence,
    verify_pq_axioms,
)
from srgpq.graphcore import Graph, is_diamond_free, is_srg
from srgpq.params import PqParams, SrgParams


def test_gf4_field_axioms():
    elements = GF4Element.elements()
    w = GF4Element(2)
    assert w * w == GF4Element(3)  # w^2
    assert w * w * w == GF4Element(1)  # w^3 = 1
    assert w + w == GF4Element(0)  # characteristic 2
    assert GF4Element(3) == w * w and GF4Element(3) + w == GF4Element(1)  # w^2 = w+1
    for x in elements:
        assert x + GF4Element(0) == x
        assert x * GF4Element(1) == x
    with pytest.raises(GeometryError):
        GF4Element(4)


def test_rook_witness(rook):
    assert is_srg(rook) == SrgParams(16, 6, 2, 2)
    assert is_diamond_free(rook)[0]
    assert rook.degree(0) == 6


def test_shrikhande_negative_control(shrikhande):
    assert shrikhande.nu == 16
    assert is_srg(shrikhande) == SrgParams(16, 6, 2, 2)
    assert not is_diamond_free(shrikhande)[0]


def test_gq35_witness(gq35):
    assert is_srg(gq35) == SrgParams(64, 18, 2, 6)
    assert is_diamond_free(gq35)[0]


def test_gq35_connection_set():
    connection = gq35_connection_set()
    assert len(connection) == 18  # 6 directions x 3 nonzero scalars
    assert all(v != (0, 0, 0) for v in connection)
    # closed under nonzero scaling, hence Cayley symmetry in characteristic 2
    from srgpq.geometry import GF4_MUL

    for vec in connection:
        for scale in (1, 2, 3):
            assert tuple(GF4_MUL[scale][c] for c in vec) in connection


def test_hyperoval_size():
    assert len(hyperoval_points()) == 6


def test_gq35_incidence_round_trip(gq35):
    inc = graph_to_pq(gq35)
    assert len(inc.lines) == 96
    report = verify_pq_axioms(inc)
    assert report.ok
    assert report.params == PqParams(3, 5, 6)
    assert report.is_generalized_quadrangle
    assert collinearity_graph(inc) == gq35


def test_rook_incidence_round_trip(rook):
    inc = graph_to_pq(rook)
    assert len(inc.lines) == 8
    report = verify_pq_axioms(inc)
    assert report.params == PqParams(3, 1, 2)
    assert report.is_generalized_quadrangle  # mu = t+1: the rook is GQ(3,1)
    assert collinearity_graph(inc) == rook


def test_graph_to_pq_rejects_non_srg():
    k4 = Graph.from_edges(4, [(a, b) for a, b in combinations(range(4), 2)])
    with pytest.raises(GeometryError):
        graph_to_pq(k4)


def test_collinearity_graph_single_line():
    inc = IncidenceStructure.from_lines(4, [(0, 1, 2, 3)])
    g = collinearity_graph(inc)
    assert all(g.adjacent(a, b) for a, b in combinations(range(4), 2))


def test_axiom_ii_violation():
    # sizes and degrees are constant, but points 0, 1 share two lines
    inc = IncidenceStructure.from_lines(6, [(0, 1, 2), (0, 1, 3), (2, 4, 5), (3, 4, 5)])
    report = verify_pq_axioms(inc)
    assert not report.ok
    assert report.violated_axiom == "ii"
    assert report.witness["points"] == [0, 1]


def test_axiom_i_violation_ragged_lines():
    inc = IncidenceStructure.from_lines(5, [(0, 1, 2), (3, 4)])
    report = verify_pq_axioms(inc)
    assert report.violated_axiom == "i"


def test_axiom_iii_violation_fano():
    # In the Fano plane every point pair is collinear, so any point off a
    # line is collinear with all three of its points.
    lines = [(0, 1, 3), (1, 2, 4), (2, 3, 5), (3, 4, 6), (4, 5, 0), (5, 6, 1), (6, 0, 2)]
    report = verify_pq_axioms(IncidenceStructure.from_lines(7, lines))
    assert report.violated_axiom == "iii"
    assert len(report.witness["collinear_points"]) == 3


def test_axiom_iv_violation_hexagon():
    lines = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)]
    report = verify_pq_axioms(IncidenceStructure.from_lines(6, lines))
    assert report.violated_axiom == "iv"


def test_verify_pq_axioms_requires_a_line():
    with pytest.raises(GeometryError):
        verify_pq_axioms(IncidenceStructure.from_lines(3, []))


def test_incidence_validation():
    with pytest.raises(GeometryError):
        IncidenceStructure.from_lines(3, [(0, 5)])
    with pytest.raises(GeometryError):
        IncidenceStructure.from_lines(3, [(0, 0, 1)])
    with pytest.raises(GeometryError):
        IncidenceStructure.from_lines(3, [(0, 1), (1, 0)])


def test_incidence_text_round_trip(rook):
    inc = graph_to_pq(rook)
    text = format_incidence(inc)
    parsed = parse_incidence(text)
    assert parsed.num_points == inc.num_points
    assert sorted(parsed.lines) == sorted(inc.lines)


def test_parse_incidence_comments_and_errors():
    inc = parse_incidence("# comment\n3 2\n0 1\n\n1 2\n")
    assert inc.num_points == 3 and len(inc.lines) == 2
    with pytest.raises(GeometryError):
        parse_incidence("")
    with pytest.raises(GeometryError):
        parse_incidence("3\n0 1\n")
    with pytest.raises(GeometryError):
        parse_incidence("3 2\n0 1\n")  # line count mismatch
    with pytest.raises(GeometryError):
        parse_incidence("3 1\n0 x\n")


def test_builders_are_deterministic():
    assert build_rook4() == build_rook4()
    assert build_shrikhande() == build_shrikhande()
    assert build_gq35() == build_gq35()
