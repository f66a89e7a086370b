"""Basis functions labeled by laminations, their products and supports.

Every integral lamination names one global Laurent function: the monomial
its weights cut out in a chart with boundary variables, rewritten through
the exponent lattice into the boundary-free chart coordinates.  Products of
basis functions expand back into the basis with nonnegative integer
coefficients; combinatorially the expansion repeatedly splits one crossing
of the summed weighted graph into the two ways of rerouting it, until only
laminations remain.

``support`` collects the laminations that appear; ``a2_coefficient`` is the
closed binomial formula for the rank-two case, used as an independent check
of the splitting process.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .atlas import (
    MonomialLattice,
    atlas_seed,
    chart_segments,
    expand_cluster_variable,
    expand_in_x_chart,
    mutation_words,
    type_a_seed,
)
from .errors import (
    BudgetExceeded,
    EmptyInput,
    InvariantViolation,
    NonIntegral,
    NotInImageLattice,
    SizeMismatch,
)
from .laminations import Lamination, chart_coords
from .laurent import LaurentPolynomial
from .polygon import Segment, Triangulation, crosses, fan_triangulation, triangulations
from .weighted_graphs import WeightedGraph

DEFAULT_BUDGET = 1_000_000

POLICIES = ("smallest", "largest")


@lru_cache(maxsize=None)
def _fan_lattice(n_gon: int) -> MonomialLattice:
    return MonomialLattice(atlas_seed(fan_triangulation(n_gon), "with_coefficients"))


def basis_laurent(lam: Lamination) -> LaurentPolynomial:
    """The basis function of an integral lamination, in fan chart coordinates.

    The lamination's weights give a monomial over all segments; expanding
    its off-chart diagonals and pulling each resulting monomial back through
    the exponent lattice yields a Laurent polynomial in the chart variables
    X1..Xn (one per fan diagonal, in order).
    """
    if not lam.graph.is_integral():
        raise NonIntegral("basis functions are indexed by integral laminations")
    n_gon = lam.n_gon
    fan = fan_triangulation(n_gon)
    segs = chart_segments(fan, "with_coefficients")
    chart_index = {s: i for i, s in enumerate(segs)}
    chart_exps = [0] * len(segs)
    product = None
    for i, j, w in lam.graph.sparse_items():
        s = Segment(i, j)
        if s in chart_index:
            chart_exps[chart_index[s]] += w
            continue
        factor = expand_cluster_variable(s, fan, "with_coefficients") ** w
        product = factor if product is None else product * factor
    names = tuple(
        expand_cluster_variable(segs[0], fan, "with_coefficients").vars
    )
    mono = LaurentPolynomial.monomial(names, tuple(chart_exps))
    product = mono if product is None else product * mono
    lattice = _fan_lattice(n_gon)
    out_names = type_a_seed(n_gon - 3).x_names()
    out = LaurentPolynomial.zero(out_names)
    for exps, coeff in product.terms_sorted():
        b = lattice.preimage(exps)
        if b is None:
            raise NotInImageLattice(
                "a product monomial misses the exponent lattice; the input "
                "graph cannot be a lamination"
            )
        out = out + LaurentPolynomial.monomial(out_names, b, coeff)
    return out


@dataclass(frozen=True)
class Expansion:
    """A finite nonnegative integer combination of laminations."""

    terms: tuple

    def __post_init__(self):
        terms = tuple(self.terms)
        for lam, coeff in terms:
            if not isinstance(lam, Lamination):
                raise InvariantViolation("expansion terms must be laminations")
            if not isinstance(coeff, int) or isinstance(coeff, bool) or coeff <= 0:
                raise InvariantViolation("expansion coefficients must be positive integers")
        graphs = [lam.graph for lam, _ in terms]
        if len(set(graphs)) != len(graphs):
            raise InvariantViolation("expansion terms must be distinct laminations")
        object.__setattr__(self, "terms", terms)

    def __iter__(self):
        return iter(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def coefficient(self, lam: Lamination) -> int:
        for l, c in self.terms:
            if l.graph == lam.graph:
                return c
        return 0

    def support(self) -> list[Lamination]:
        return [l for l, _ in self.terms]


def _sort_key(lam: Lamination):
    return chart_coords(lam, fan_triangulation(lam.n_gon)).vector()


def _loaded_diagonals(graph: WeightedGraph) -> list[Segment]:
    n = graph.n_gon
    return [
        Segment(i, j)
        for i, j, w in graph.sparse_items()
        if Segment(i, j).is_diagonal(n) and w > 0
    ]


def _crossing_quads(graph: WeightedGraph) -> list[tuple[int, int, int, int]]:
    loaded = _loaded_diagonals(graph)
    return [
        tuple(sorted((s.i, s.j, t.i, t.j)))
        for s, t in itertools.combinations(loaded, 2)
        if crosses(s, t)
    ]


def crossing_measure(graph: WeightedGraph) -> int:
    """Sum of weight products over crossing diagonal pairs; zero exactly
    when the graph has noncrossing support."""
    loaded = _loaded_diagonals(graph)
    return sum(
        graph[s] * graph[t]
        for s, t in itertools.combinations(loaded, 2)
        if crosses(s, t)
    )


def _reroute(graph: WeightedGraph, quad, sides) -> WeightedGraph:
    p, q, r, s = quad
    m = [list(row) for row in graph.w]

    def bump(a: int, b: int, step: int) -> None:
        m[a - 1][b - 1] += step
        m[b - 1][a - 1] += step

    bump(p, r, -1)
    bump(q, s, -1)
    for a, b in sides:
        bump(a, b, 1)
    return WeightedGraph(graph.n_gon, tuple(tuple(row) for row in m))


_SPLIT_MEMO: dict[tuple, dict] = {}


def _split_leaves(graph: WeightedGraph, policy: str, state: dict) -> dict:
    key = (graph, policy)
    hit = _SPLIT_MEMO.get(key)
    if hit is not None:
        return hit
    quads = _crossing_quads(graph)
    if not quads:
        result = {graph: 1}
        _SPLIT_MEMO[key] = result
        return result
    state["expanded"] += 1
    if state["expanded"] > state["budget"]:
        raise BudgetExceeded(state["budget"], state["expanded"])
    quad = min(quads) if policy == "smallest" else max(quads)
    p, q, r, s = quad
    measure = crossing_measure(graph)
    result: dict[WeightedGraph, int] = {}
    for sides in (((p, s), (q, r)), ((p, q), (r, s))):
        child = _reroute(graph, quad, sides)
        assert crossing_measure(child) < measure, "crossing measure must drop"
        for leaf, count in _split_leaves(child, policy, state).items():
            result[leaf] = result.get(leaf, 0) + count
    _SPLIT_MEMO[key] = result
    return result


def product_graph(points: Sequence[Lamination]) -> WeightedGraph:
    """The summed weighted graph of a multiset of laminations."""
    points = list(points)
    if not points:
        raise EmptyInput("need at least one lamination")
    n = points[0].n_gon
    total = WeightedGraph.zeros(n)
    for p in points:
        if p.n_gon != n:
            raise SizeMismatch("laminations live on different polygons")
        total = total + p.graph
    return total


def product_expand(
    points: Sequence[Lamination],
    budget: int = DEFAULT_BUDGET,
    policy: str = "smallest",
) -> Expansion:
    """Expand a product of basis functions back into the basis.

    Splits one crossing at a time, each split replacing the two crossing
    chords by a pair of opposite sides of their quadrilateral, in both ways;
    the leaves of this recursion are laminations counted with multiplicity.
    The result does not depend on which crossing is chosen; ``policy``
    selects the quadruple ("smallest"/"largest" in lexicographic order) so
    independence can be exercised.  ``budget`` caps the number of fresh
    node expansions; previously solved graphs are free.
    """
    if policy not in POLICIES:
        raise InvariantViolation(f"policy must be one of {POLICIES}, got {policy!r}")
    total = product_graph(points)
    if not total.is_integral():
        raise NonIntegral("product expansion needs integral laminations")
    for p in points:
        if p.domain != "int":
            raise NonIntegral("product expansion needs integral laminations")
    state = {"expanded": 0, "budget": budget}
    leaves = _split_leaves(total, policy, state)
    terms = sorted(
        ((Lamination(g), c) for g, c in leaves.items()),
        key=lambda pair: _sort_key(pair[0]),
    )
    return Expansion(tuple(terms))


def support(
    points: Sequence[Lamination],
    budget: int = DEFAULT_BUDGET,
) -> list[Lamination]:
    """The laminations appearing in the expansion of a product."""
    return product_expand(points, budget).support()


def a2_coefficient(d: Sequence[int], i: int, b: int, c: int) -> int:
    """Closed form for pentagon product coefficients.

    ``d`` lists how often each of the five unit laminations occurs in the
    product (indexed 1..5 cyclically); the returned value is the
    multiplicity of the lamination b*(unit i) + c*(unit i+1) in its
    expansion.  Binomials with arguments out of range contribute zero.
    """
    d = tuple(d)
    if len(d) != 5:
        raise SizeMismatch("need exactly five multiplicities")
    if any(not isinstance(x, int) or x < 0 for x in d):
        raise InvariantViolation("multiplicities must be nonnegative integers")
    if not isinstance(i, int) or not 1 <= i <= 5:
        raise InvariantViolation("sector index must be in 1..5")
    if b < 0 or c < 0:
        raise InvariantViolation("sector coordinates must be nonnegative")

    def at(j: int) -> int:
        return d[(j - 1) % 5]

    def binom(n: int, k: int) -> int:
        if n < 0 or k < 0 or k > n:
            return 0
        return math.comb(n, k)

    total = 0
    for k in range(at(i + 3) + 1):
        total += (
            binom(at(i + 3), k)
            * binom(at(i + 4) + k, at(i + 2) + at(i + 3) - at(i) + b)
            * binom(at(i + 2), at(i + 4) - at(i + 1) + c + k)
        )
    return total


def verify_positive_basis(lam: Lamination) -> bool:
    """Check that a basis function stays a nonnegative Laurent polynomial
    in every chart of the atlas."""
    f = basis_laurent(lam)
    n = lam.n_gon - 3
    for word in mutation_words(n).values():
        g = expand_in_x_chart(f, word)
        if not g.is_positive():
            return False
    return True
