"""Brute-force closed-graph oracle, cross-checked against the engine.

Claims checked here:
  * the oracle's loop graph gives d and its theta graph gives lambda d
    (hand-checkable expansions);
  * for every element with <= 14 edges in its closed diagram, the
    oracle's raw value matches the engine's coefficient after the lambda
    and d normalizations, in both closure modes;
  * the oracle refuses graphs above its edge limit.
"""

from __future__ import annotations

import pytest

from wysiwyg.oracle import (
    MAX_ORACLE_EDGES, TrivalentGraph, brute_force_eval, closed_pair_graph,
    loop_graph, theta_graph,
)
from wysiwyg.rep import coeff
from wysiwyg.scalars import EXACT, RationalFunction
from wysiwyg.thompson import (
    element_D, generator_A, generator_B, inverse, multiply, parse_element,
    power_A,
)

D = RationalFunction.d()
LAM = RationalFunction.vertex_norm()


def test_loop_graph_is_d():
    assert brute_force_eval(loop_graph()).as_rational() == D


def test_theta_graph_is_lambda_d():
    assert brute_force_eval(theta_graph()).as_rational() == LAM * D


def test_oracle_edge_limit():
    g = multiply(power_A(3), generator_B())
    graph = closed_pair_graph(g, "omega")
    assert graph.edge_count > MAX_ORACLE_EDGES
    with pytest.raises(ValueError):
        brute_force_eval(graph)


def test_graph_validation():
    with pytest.raises(ValueError):
        TrivalentGraph([(0, 1, 2)], [(0, 1)])  # dangling half-edge
    with pytest.raises(ValueError):
        TrivalentGraph([(0, 1, 2, 3)], [(0, 1), (2, 3)])  # degree 4


def _check_against_engine(g, mode):
    graph = closed_pair_graph(g, mode)
    raw = brute_force_eval(graph).as_rational()
    normalized = raw / LAM ** (graph.vertex_count // 2)
    assert graph.vertex_count % 2 == 0
    assert normalized == D * coeff(EXACT, mode, g)


@pytest.mark.parametrize("word", ["A", "A^-1", "D", "B", "A^2"])
def test_closed_pair_graphs_match_engine_psi(word):
    _check_against_engine(parse_element(word), "psi")


@pytest.mark.parametrize("word", ["A", "D", "B"])
def test_closed_pair_graphs_match_engine_omega(word):
    _check_against_engine(parse_element(word), "omega")


def test_d_element_graph_statistics():
    g = element_D()
    psi = closed_pair_graph(g, "psi")
    assert (psi.vertex_count, psi.edge_count) == (4, 6)
    tied = closed_pair_graph(g, "omega")
    assert (tied.vertex_count, tied.edge_count) == (6, 9)


def test_inverse_symmetry():
    g = element_D()
    for mode in ("psi", "omega"):
        a = brute_force_eval(closed_pair_graph(g, mode))
        b = brute_force_eval(closed_pair_graph(inverse(g), mode))
        assert a == b
