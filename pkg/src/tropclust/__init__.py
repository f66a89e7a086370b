"""Exact combinatorics of polygon charts, laminations, and their polytopes.

The package computes with integer and rational arithmetic only: Laurent
polynomials over chart variables, weighted graphs on polygon vertices,
lamination coordinates, polytope specs bounded diagonal by diagonal, and
basis-function products expanded by crossing splits.
"""
from .errors import (
    BudgetExceeded,
    DimensionMismatch,
    EmptyInput,
    FrozenDirection,
    IncompleteTriangulation,
    InputFormatError,
    InvalidPolygon,
    InvalidVertex,
    InvariantViolation,
    NonIntegral,
    NotADiagonal,
    NotALamination,
    NotDivisible,
    NotInImageLattice,
    NotPositive,
    NotStasheff,
    RankDeficient,
    SizeMismatch,
    TropclustError,
    Unbounded,
)
from .polygon import (
    Segment,
    Triangulation,
    compatibility_degree,
    crosses,
    diagonals,
    edges,
    fan_triangulation,
    flip,
    flip_path,
    segment_length,
    supplement,
    triangulations,
)
from .laurent import (
    LaurentPolynomial,
    RationalFunction,
    TropicalFunction,
    evaluate_at,
)
from .weighted_graphs import (
    GraphStats,
    WeightedGraph,
    common_part,
    depth,
    dominates,
    graph_from_cut_stats,
    stats,
)
from .atlas import (
    MonomialLattice,
    Seed,
    a_substitution,
    atlas_seed,
    chart_segments,
    expand_cluster_variable,
    expand_in_x_chart,
    mutate_seed,
    mutation_words,
    type_a_seed,
    x_pullback_monomial,
    x_substitution,
)
from .laminations import (
    Lamination,
    TropicalCoords,
    chart_change,
    chart_coords,
    lamination_from_coords,
    tropical_coordinate,
)
from .polytopes import (
    Face,
    StasheffSpec,
    contains,
    face_membership,
    hull_membership,
    is_nondegenerate,
    is_stasheff,
    lattice_points,
    minkowski_spec,
    minkowski_sum,
    quadruple_slack,
    shift_to_negative_part,
    vertex,
)
from .basis import (
    DEFAULT_BUDGET,
    Expansion,
    a2_coefficient,
    basis_laurent,
    crossing_measure,
    product_expand,
    product_graph,
    support,
    verify_positive_basis,
)

__version__ = "0.1.0"
