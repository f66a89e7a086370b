"""Weighted graphs on polygon vertices and their mass bookkeeping."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tropclust.errors import InvariantViolation, NonIntegral, SizeMismatch
from tropclust.polygon import Segment, all_segments, diagonals
from tropclust.weighted_graphs import (
    GraphStats,
    WeightedGraph,
    common_part,
    depth,
    dominates,
    graph_from_cut_stats,
    stats,
    wrap_vertex,
)


def graph(n, weights):
    return WeightedGraph.from_weights(n, {Segment(i, j): w for (i, j), w in weights.items()})


@st.composite
def graphs(draw, n_min=4, n_max=6, lo=0, hi=3):
    n = draw(st.integers(n_min, n_max))
    weights = {}
    for seg in all_segments(n):
        if seg.is_diagonal(n):
            w = draw(st.integers(max(lo, 0), hi))
        else:
            w = draw(st.integers(-hi, hi))
        if w:
            weights[tuple(seg)] = w
    return graph(n, weights)


def test_wrap_vertex_is_cyclic():
    assert wrap_vertex(6, 5) == 1
    assert wrap_vertex(0, 5) == 5
    assert wrap_vertex(-4, 5) == 1
    assert wrap_vertex(3, 5) == 3


def test_construction_and_lookup():
    g = graph(5, {(1, 3): 2, (2, 3): -1})
    assert g.weight(1, 3) == 2
    assert g.weight(3, 1) == 2
    assert g[Segment(2, 3)] == -1
    assert g.weight(1, 4) == 0
    assert set(g.sparse_items()) == {(1, 3, 2), (2, 3, -1)}
    assert not g.is_trivial()
    assert WeightedGraph.zeros(4).is_trivial()
    assert g.is_integral()
    assert not graph(5, {(1, 2): Fraction(1, 2)}).is_integral()


def test_validation_rejects_bad_matrices():
    with pytest.raises(InvariantViolation):
        WeightedGraph(4, ((0, 1), (1, 0)))
    with pytest.raises(InvariantViolation):
        graph(5, {(1, 3): -1})  # diagonals must stay nonnegative
    with pytest.raises(InvariantViolation):
        graph(5, {(1, 2): 0.5})
    graph(5, {(1, 2): -3})  # side weights may be negative


def test_addition_subtraction_common_part():
    a = graph(5, {(1, 3): 2, (1, 2): -1})
    b = graph(5, {(1, 3): 1, (2, 4): 1, (1, 2): 1})
    assert (a + b).weight(1, 3) == 3
    assert (a + b).weight(1, 2) == 0
    assert (a - graph(5, {(1, 3): 1})).weight(1, 3) == 1
    with pytest.raises(InvariantViolation):
        b - a  # would leave -1 on the diagonal {2,4}
    c = common_part(a, b)
    assert c.weight(1, 3) == 1
    assert c.weight(2, 4) == 0
    assert c.weight(1, 2) == -1
    with pytest.raises(SizeMismatch):
        a + graph(6, {})


def test_stats_small_example_by_hand():
    g = graph(5, {(1, 3): 1, (1, 4): 2})
    s = stats(g)
    assert s.vertex(1) == 3
    assert s.vertex(3) == 1
    assert s.vertex(4) == 2
    assert s.vertex(2) == 0
    # interval {2,3} picks up nothing internal
    assert s.interval(2, 3) == 0
    assert s.interval(1, 3) == 1
    assert s.interval(1, 4) == 3
    # cut across {1,3} separates {2,3} from the rest
    assert s.cut(1, 3) == 1
    assert s.cut(1, 4) == 3
    assert s.cut(2, 4) == 3
    assert s.cut(6, 3) == s.cut(1, 3)
    assert s.cut(2, 2) == 0


@settings(max_examples=40)
@given(graphs())
def test_vertex_masses_sum_to_twice_total(g):
    s = stats(g)
    total = sum(w for _, _, w in g.sparse_items())
    assert sum(s.vertex_mass) == 2 * total
    assert s.interval(1, g.n_gon) == total


@settings(max_examples=40)
@given(graphs())
def test_cut_mass_symmetry(g):
    """Both sides of a cut see the same crossing mass."""
    s = stats(g)
    n = g.n_gon
    for seg in diagonals(n):
        complement_inside = sum(s.vertex_mass) - 2 * s.interval(seg.i + 1, seg.j)
        outside = [v for v in range(1, n + 1) if not seg.i < v <= seg.j]
        direct = sum(
            w
            for i, j, w in g.sparse_items()
            for _ in (0,)
            if (i in outside) != (j in outside)
        )
        assert s.cut(seg.i, seg.j) == direct
        outside_mass = sum(
            g.weight(i, j) for i in outside for j in outside if i < j
        )
        assert complement_inside - 2 * s.cut(seg.i, seg.j) == 2 * outside_mass


def test_depth_is_shortest_loaded_length():
    assert depth(WeightedGraph.zeros(5)) is None
    assert depth(graph(5, {(1, 3): 1})) == 2
    assert depth(graph(6, {(1, 4): 1})) == 3
    assert depth(graph(6, {(1, 4): 1, (5, 6): 2})) == 1
    assert depth(graph(6, {(1, 6): 1})) == 1  # wrap side has cyclic length 1


def test_dominates_requires_equal_vertex_masses():
    a = graph(5, {(1, 3): 1})
    b = graph(5, {(1, 3): 2})
    assert not dominates(a, b)
    assert dominates(a, a)


def test_dominates_orders_cut_masses():
    # same vertex masses, one graph concentrates crossings
    a = graph(6, {(1, 4): 1, (2, 5): 1})
    b = graph(6, {(1, 5): 1, (2, 4): 1})
    sa, sb = stats(a), stats(b)
    assert sa.vertex_mass == sb.vertex_mass
    lesser = dominates(b, a)
    greater = dominates(a, b)
    assert lesser != greater  # strictly comparable pair
    with pytest.raises(SizeMismatch):
        dominates(a, graph(5, {}))


@settings(max_examples=40)
@given(graphs())
def test_cut_stats_roundtrip(g):
    cut = {seg: stats(g).cut_mass[seg] for seg in all_segments(g.n_gon)}
    assert graph_from_cut_stats(cut, g.n_gon) == g


def test_cut_stats_rejects_half_integers():
    cut = {seg: 0 for seg in all_segments(5)}
    cut[Segment(1, 3)] = 1
    cut[Segment(2, 4)] = 0
    with pytest.raises((NonIntegral, InvariantViolation)):
        graph_from_cut_stats(cut, 5)


def test_cut_stats_missing_entries():
    with pytest.raises(InvariantViolation):
        graph_from_cut_stats({Segment(1, 3): 0}, 5)


def test_stats_type():
    s = stats(WeightedGraph.zeros(4))
    assert isinstance(s, GraphStats)
    assert s.n_gon == 4
