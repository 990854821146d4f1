"""Smoke tests for the ksgraph python module against the bundled fixtures."""

import json
import os
from fractions import Fraction
from pathlib import Path

import pytest

import ksgraph

FIXTURES = Path(os.environ.get("KSGRAPH_FIXTURES",
                               Path(__file__).resolve().parents[1] / "fixtures"))


def read_fixture(name: str) -> str:
    return (FIXTURES / name).read_text()


@pytest.fixture(scope="module")
def quad_doc() -> str:
    return read_fixture("square_diagonal.json")


@pytest.fixture(scope="module")
def quad_graph(quad_doc):
    return ksgraph.load_graph(quad_doc)


def test_load_graph(quad_graph):
    assert quad_graph.num_vertices == 4
    assert quad_graph.num_edges == 5
    assert quad_graph.vertices == ["v1", "v2", "v3", "v4"]
    assert quad_graph.edges[0] == ("e1", "v1", "v2")


def test_invalid_graph_raises():
    with pytest.raises(ksgraph.KsgraphError):
        ksgraph.load_graph(json.dumps({"vertices": ["a", "b"], "edges": []}))


def test_trees(quad_doc, quad_graph):
    assert ksgraph.default_tree(quad_graph) == ["e1", "e3", "e4"]
    tree, chords = ksgraph.validate_tree(quad_graph, ["e1", "e2", "e3"])
    assert tree == ["e1", "e2", "e3"]
    assert chords == ["e4", "e5"]
    assert sorted(ksgraph.document_tree(quad_doc)) == ["e1", "e2", "e3"]


def test_analyze_reproduces_reference_matrices(quad_graph):
    result = ksgraph.analyze(quad_graph, tree=["e1", "e2", "e3"])
    assert result["pass"] is True
    assert result["K"] == [[3, -1], [-1, 3]]
    assert result["Kstar"] == [[2, -1, 0], [-1, 3, 1], [0, 1, 2]]
    assert result["cycles"] == [[0, 1, 1, 1, 0], [1, -1, 0, 0, 1]]
    # ascending coefficients: x^2 - 6x + 8
    assert result["char_poly_K"] == [8, -6, 1]
    assert result["char_poly_Kstar"] == [-8, 14, -7, 1]
    assert all(ok for _, ok, _ in result["checks"])


def test_matrices_are_exact_fractions(quad_graph):
    result = ksgraph.analyze(quad_graph)
    assert isinstance(result["K"][0][0], Fraction)


def test_count_spanning_trees(quad_graph):
    assert ksgraph.count_spanning_trees(quad_graph) == 8


def test_dual(quad_doc):
    result = ksgraph.dual(quad_doc, tree=["e1", "e2", "e3"])
    assert result["pass"] is True
    assert result["flipped"] is False
    dual_doc = json.loads(result["dual_json"])
    assert len(dual_doc["vertices"]) == 3
    # emitted dual round-trips through the loader and dualizes again
    redual = ksgraph.dual(result["dual_json"])
    assert redual["pass"] is True


def test_thermo(quad_graph):
    state = read_fixture("square_diagonal_state_cycle.json")
    result = ksgraph.thermo(quad_graph, state, tree=["e1", "e2", "e3"])
    assert result["sigma"] == Fraction(3)
    assert result["vortex_part"] == Fraction(3)
    assert result["tidal_part"] == Fraction(0)
    assert result["kcl"] is True
    assert result["linear_regime_equal"] is True


def test_thermo_unit_edge_current(quad_graph):
    state = read_fixture("square_diagonal_state_edge.json")
    result = ksgraph.thermo(quad_graph, state, tree=["e1", "e2", "e3"])
    assert result["sigma"] == Fraction(1)
    assert result["kcl"] is False
    assert result["linear_regime_equal"] is True


def test_laplacian(quad_graph):
    lap = ksgraph.laplacian(quad_graph)
    assert lap[0] == [2, -1, -1, 0]
    assert ksgraph.laplacian_shift_check(quad_graph) is True


def test_random_oblique_projection_is_deterministic():
    first = ksgraph.random_oblique_projection(5, 2, 42)
    second = ksgraph.random_oblique_projection(5, 2, 42)
    assert first["P"] == second["P"]
    assert first["rank"] == 2


def test_verify_random_small():
    result = ksgraph.verify_random(cases=5, seed=11)
    assert result["pass"] is True, result["failures"]
    assert result["graph_cases"] == 5
