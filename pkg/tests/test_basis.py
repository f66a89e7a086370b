"""Canonical basis functions, product expansion, and the pentagon closed form."""

import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tropclust.basis import (
    Expansion,
    a2_coefficient,
    basis_laurent,
    crossing_measure,
    product_expand,
    product_graph,
    support,
    verify_positive_basis,
)
from tropclust.errors import (
    BudgetExceeded,
    EmptyInput,
    InvariantViolation,
    NonIntegral,
    SizeMismatch,
)
from tropclust.laminations import Lamination, TropicalCoords, lamination_from_coords
from tropclust.laurent import LaurentPolynomial
from tropclust.polygon import Segment, fan_triangulation
from tropclust.weighted_graphs import WeightedGraph

V2 = ("X1", "X2")


def pt(n_gon, vec):
    fan = fan_triangulation(n_gon)
    return lamination_from_coords(
        TropicalCoords.of(fan, dict(zip(fan.sorted_diagonals(), vec)))
    )


# The five pentagon unit curves in cyclic order: consecutive entries share a
# polygon vertex, entries two apart cross once.
UNITS = {
    1: pt(5, (-1, 0)),  # curve along {1,4}
    2: pt(5, (0, 1)),  # curve along {1,3}
    3: pt(5, (1, 1)),  # curve along {3,5}
    4: pt(5, (1, 0)),  # curve along {2,5}
    5: pt(5, (0, -1)),  # curve along {2,4}
}


def L(terms):
    return LaurentPolynomial(V2, terms)


def test_unit_curves_have_the_expected_chords():
    loaded = {
        i: [Segment(a, b) for a, b, w in UNITS[i].graph.sparse_items() if Segment(a, b).is_diagonal(5)]
        for i in UNITS
    }
    assert loaded[1] == [Segment(1, 4)]
    assert loaded[2] == [Segment(1, 3)]
    assert loaded[3] == [Segment(3, 5)]
    assert loaded[4] == [Segment(2, 5)]
    assert loaded[5] == [Segment(2, 4)]


def test_basis_function_table():
    assert basis_laurent(Lamination.zero(5)) == LaurentPolynomial.one(V2)
    assert basis_laurent(UNITS[1]) == L({(-1, 0): 1})
    assert basis_laurent(UNITS[2]) == L({(0, 1): 1})
    assert basis_laurent(UNITS[3]) == L({(1, 1): 1, (1, 0): 1})
    assert basis_laurent(UNITS[4]) == L({(1, 0): 1, (1, -1): 1, (0, -1): 1})
    assert basis_laurent(UNITS[5]) == L({(0, -1): 1, (-1, -1): 1})


def test_basis_recurrence_all_rotations():
    """Neighbours of each unit multiply to one plus the unit itself."""
    one = LaurentPolynomial.one(V2)
    for i in range(1, 6):
        prev = UNITS[(i - 2) % 5 + 1]
        nxt = UNITS[i % 5 + 1]
        assert basis_laurent(prev) * basis_laurent(nxt) == one + basis_laurent(
            UNITS[i]
        )


def test_basis_rejects_fractional_laminations():
    half = UNITS[1] * __import__("fractions").Fraction(1, 2)
    with pytest.raises(NonIntegral):
        basis_laurent(half)


def test_noncrossing_products_merge():
    a, b = UNITS[1], UNITS[2]  # chords {1,4}, {1,3} do not cross
    exp = product_expand([a, b])
    assert exp.terms == ((a + b, 1),)
    assert basis_laurent(a) * basis_laurent(b) == basis_laurent(a + b)


def test_crossing_product_splits_once():
    a, b = UNITS[1], UNITS[3]  # chords {1,4}, {3,5} cross once
    exp = product_expand([a, b])
    supports = exp.support()
    assert Lamination.zero(5) in supports
    assert UNITS[2] in supports
    assert all(exp.coefficient(l) == 1 for l in supports)
    assert len(supports) == 2


def test_crossing_measure():
    assert crossing_measure(WeightedGraph.zeros(5)) == 0
    assert crossing_measure(product_graph([UNITS[1], UNITS[2]])) == 0
    assert crossing_measure(product_graph([UNITS[1], UNITS[3]])) == 1
    assert crossing_measure(product_graph([2 * UNITS[1], UNITS[3]])) == 2


def test_product_graph_guards():
    with pytest.raises(EmptyInput):
        product_graph([])
    with pytest.raises(SizeMismatch):
        product_graph([UNITS[1], Lamination.zero(6)])


def test_expansion_validation():
    with pytest.raises(InvariantViolation):
        Expansion(((UNITS[1], 0),))
    with pytest.raises(InvariantViolation):
        Expansion(((UNITS[1], -2),))
    with pytest.raises(InvariantViolation):
        Expansion(((UNITS[1], 1), (UNITS[1], 1)))
    e = Expansion(((UNITS[1], 2),))
    assert e.coefficient(UNITS[1]) == 2
    assert e.coefficient(UNITS[2]) == 0
    assert len(e) == 1


def test_policy_confluence():
    points = [UNITS[1], UNITS[3], UNITS[3], UNITS[5]]
    a = product_expand(points, policy="smallest")
    b = product_expand(points, policy="largest")
    assert a == b
    with pytest.raises(InvariantViolation):
        product_expand(points, policy="middling")


def test_product_expansion_matches_symbolic_identity():
    """The defining property: products of basis functions expand positively."""
    samples = [
        [UNITS[1], UNITS[3]],
        [UNITS[2], UNITS[5]],
        [UNITS[4], UNITS[4], UNITS[1]],
        [UNITS[1], UNITS[2], UNITS[3], UNITS[4], UNITS[5]],
    ]
    for points in samples:
        lhs = LaurentPolynomial.one(V2)
        for p in points:
            lhs = lhs * basis_laurent(p)
        rhs = LaurentPolynomial.zero(V2)
        for lam, coeff in product_expand(points):
            rhs = rhs + coeff * basis_laurent(lam)
        assert lhs == rhs


def test_symbolic_identity_hexagon():
    a = pt(6, (1, 0, 0))
    b = pt(6, (0, 0, 1))
    c = pt(6, (0, 1, 1))
    v3 = ("X1", "X2", "X3")
    for points in [[a, b], [a, c], [a, b, c]]:
        lhs = LaurentPolynomial.one(v3)
        for p in points:
            lhs = lhs * basis_laurent(p)
        rhs = LaurentPolynomial.zero(v3)
        for lam, coeff in product_expand(points):
            rhs = rhs + coeff * basis_laurent(lam)
        assert lhs == rhs


def test_support_is_sorted_and_deterministic():
    points = [UNITS[2], UNITS[4], UNITS[5]]
    s1 = support(points)
    s2 = support(list(reversed(points)))
    assert s1 == s2
    fan = fan_triangulation(5)
    from tropclust.laminations import chart_coords

    vectors = [chart_coords(l, fan).vector() for l in s1]
    assert vectors == sorted(vectors)


def test_budget_enforcement():
    # memoised graphs cost nothing, so exercise the budget on fresh products
    with pytest.raises(BudgetExceeded) as info:
        product_expand([pt(6, (0, 1, 0)), pt(6, (1, 0, 0))], budget=0)
    assert info.value.budget == 0
    assert info.value.expanded >= 0
    # one fresh expansion suffices for a single crossing
    exp = product_expand([pt(6, (0, 1, 0)), pt(6, (0, 0, 1))], budget=1)
    assert len(exp) == 2


def test_nonintegral_products_rejected():
    import fractions

    half = UNITS[1] * fractions.Fraction(1, 2)
    with pytest.raises(NonIntegral):
        product_expand([half, half])


def test_a2_coefficient_validation():
    with pytest.raises(SizeMismatch):
        a2_coefficient((1, 0, 0), 1, 0, 0)
    with pytest.raises(InvariantViolation):
        a2_coefficient((1, 0, 0, 0, -1), 1, 0, 0)
    with pytest.raises(InvariantViolation):
        a2_coefficient((1, 0, 0, 0, 0), 0, 0, 0)
    with pytest.raises(InvariantViolation):
        a2_coefficient((1, 0, 0, 0, 0), 1, -1, 0)


def test_a2_coefficient_single_crossing():
    # product of units 1 and 3: expansion is (unit 2) + (empty)
    d = (1, 0, 1, 0, 0)
    assert a2_coefficient(d, 2, 1, 0) == 1
    assert a2_coefficient(d, 1, 0, 0) == 1
    assert a2_coefficient(d, 2, 2, 0) == 0
    assert a2_coefficient(d, 3, 0, 1) == 0


@settings(max_examples=15, deadline=None)
@given(st.data())
def test_a2_coefficient_matches_splitting(data):
    d = tuple(data.draw(st.integers(0, 2)) for _ in range(5))
    if sum(d) == 0:
        return
    points = []
    for i, m in enumerate(d):
        points.extend([UNITS[i + 1]] * m)
    exp = product_expand(points)
    total = sum(d)
    accounted = 0
    for i in range(1, 6):
        for b in range(total + 1):
            for c in range(total + 1):
                target = b * UNITS[i] + c * UNITS[i % 5 + 1]
                assert exp.coefficient(target) == a2_coefficient(d, i, b, c)
                if b > 0:  # count each support point in exactly one sector
                    accounted += a2_coefficient(d, i, b, c)
    accounted += a2_coefficient(d, 1, 0, 0)  # the origin, once
    assert accounted == sum(coeff for _, coeff in exp)


def test_verify_positive_basis_samples():
    assert verify_positive_basis(UNITS[4])
    assert verify_positive_basis(2 * UNITS[3] + UNITS[2])
    assert verify_positive_basis(pt(6, (1, -2, 1)))
    assert verify_positive_basis(Lamination.zero(5))
