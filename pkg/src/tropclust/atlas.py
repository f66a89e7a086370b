"""Seeds, mutations, and symbolic expansion in triangulation charts.

A seed is an index set with a frozen subset, a skew-symmetrizable integer
exchange matrix, and positive skew-symmetrizers.  Mutation rewrites the
matrix in one unfrozen direction and is involutive.  Each complete
triangulation of the polygon produces a seed whose directions are the chart
segments and whose matrix is read off the triangles.

The chart machinery lives here too:

* ``expand_cluster_variable`` writes any segment variable as a positive
  Laurent polynomial in a chosen chart, by repeatedly applying the exchange
  relation on crossing quadrilaterals;
* ``MonomialLattice`` translates between monomials in chart variables of the
  two coordinate systems attached to a seed;
* ``expand_in_x_chart`` pushes a Laurent polynomial through a word of
  mutations via exact substitution and division;
* ``mutation_words`` gives one mutation word per complete triangulation,
  so every chart can be reached deterministically.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Hashable, Mapping, Sequence

from .errors import (
    DimensionMismatch,
    FrozenDirection,
    InvariantViolation,
    NotInImageLattice,
    RankDeficient,
)
from .laurent import LaurentPolynomial, RationalFunction
from .polygon import (
    Segment,
    Triangulation,
    crosses,
    edges as polygon_edges,
    fan_triangulation,
    flip,
)

SPACES = ("reduced", "with_coefficients")


def label_text(label) -> str:
    if isinstance(label, Segment):
        return f"{label.i}_{label.j}"
    return str(label)


def x_variable_name(label) -> str:
    return "X" + label_text(label)


def a_variable_name(label) -> str:
    return "A" + label_text(label)


def _check_space(space: str) -> None:
    if space not in SPACES:
        raise InvariantViolation(f"space must be one of {SPACES}, got {space!r}")


@dataclass(frozen=True)
class Seed:
    """Exchange data: direction labels, frozen subset, matrix, symmetrizers."""

    labels: tuple
    frozen: frozenset
    eps: tuple[tuple[int, ...], ...]
    d: tuple

    def __post_init__(self):
        labels = tuple(self.labels)
        if len(set(labels)) != len(labels):
            raise InvariantViolation("duplicate direction labels")
        frozen = frozenset(self.frozen)
        if not frozen <= set(labels):
            raise InvariantViolation("frozen directions must be a subset of labels")
        n = len(labels)
        eps = tuple(tuple(row) for row in self.eps)
        if len(eps) != n or any(len(row) != n for row in eps):
            raise InvariantViolation(f"exchange matrix must be {n}x{n}")
        if any(not isinstance(x, int) for row in eps for x in row):
            raise InvariantViolation("exchange matrix entries must be integers")
        d = tuple(self.d)
        if len(d) != n or any(Fraction(x) <= 0 for x in d):
            raise InvariantViolation("need one positive symmetrizer per direction")
        for i in range(n):
            for j in range(n):
                if Fraction(eps[i][j], 1) / Fraction(d[j]) != -Fraction(eps[j][i], 1) / Fraction(d[i]):
                    raise InvariantViolation(
                        f"matrix not skew-symmetrizable at ({labels[i]},{labels[j]})"
                    )
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "frozen", frozen)
        object.__setattr__(self, "eps", eps)
        object.__setattr__(self, "d", d)

    # -- access ------------------------------------------------------------

    def index(self, label) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise InvariantViolation(f"{label!r} is not a direction of this seed") from None

    def is_frozen(self, label) -> bool:
        return label in self.frozen

    @property
    def unfrozen(self) -> tuple:
        return tuple(l for l in self.labels if l not in self.frozen)

    def eps_entry(self, a, b) -> int:
        return self.eps[self.index(a)][self.index(b)]

    def x_names(self) -> tuple[str, ...]:
        return tuple(x_variable_name(l) for l in self.labels)

    def a_names(self) -> tuple[str, ...]:
        return tuple(a_variable_name(l) for l in self.labels)


def type_a_seed(n: int) -> Seed:
    """The rank-n chain seed: consecutive directions linked by a single arrow.

    Entry (i, i+1) is -1 and (i+1, i) is +1; this is the seed of the fan
    chart of the (n+3)-gon after dropping boundary directions.
    """
    if not isinstance(n, int) or n < 1:
        raise InvariantViolation(f"rank must be a positive integer, got {n!r}")
    eps = [[0] * n for _ in range(n)]
    for i in range(n - 1):
        eps[i][i + 1] = -1
        eps[i + 1][i] = 1
    return Seed(tuple(range(1, n + 1)), frozenset(), tuple(map(tuple, eps)), (1,) * n)


def mutate_seed(seed: Seed, k) -> Seed:
    """Mutate the exchange matrix in direction k (three-case rule)."""
    ki = seed.index(k)
    if seed.is_frozen(k):
        raise FrozenDirection(f"cannot mutate frozen direction {k!r}")
    n = len(seed.labels)
    e = seed.eps
    new = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            if i == ki or j == ki:
                new[i][j] = -e[i][j]
            elif e[i][ki] * e[ki][j] > 0:
                new[i][j] = e[i][j] + abs(e[i][ki]) * e[ki][j]
            else:
                new[i][j] = e[i][j]
    return Seed(seed.labels, seed.frozen, tuple(map(tuple, new)), seed.d)


def x_substitution(seed: Seed, k) -> dict:
    """New x-chart coordinates written in the old ones, after mutating at k.

    Direction k inverts; any other direction i picks up the subtraction-free
    factor (1 + X_k^(-sgn e))^(-e) with e the matrix entry at (i, k).
    """
    ki = seed.index(k)
    if seed.is_frozen(k):
        raise FrozenDirection(f"cannot mutate frozen direction {k!r}")
    names = seed.x_names()
    out = {}
    for i, label in enumerate(seed.labels):
        xi = RationalFunction.variable(names, names[i])
        if i == ki:
            out[label] = xi ** (-1)
            continue
        e = seed.eps[i][ki]
        if e == 0:
            out[label] = xi
            continue
        sign = 1 if e > 0 else -1
        base = 1 + LaurentPolynomial.variable(names, names[ki], -sign)
        out[label] = xi * RationalFunction.from_poly(base) ** (-e)
    return out


def a_substitution(seed: Seed, k) -> dict:
    """New a-chart coordinates in the old ones: the exchange relation at k."""
    ki = seed.index(k)
    if seed.is_frozen(k):
        raise FrozenDirection(f"cannot mutate frozen direction {k!r}")
    names = seed.a_names()
    out = {}
    for i, label in enumerate(seed.labels):
        ai = RationalFunction.variable(names, names[i])
        if i != ki:
            out[label] = ai
            continue
        pos = [0] * len(names)
        neg = [0] * len(names)
        for j, e in enumerate(seed.eps[ki]):
            if e > 0:
                pos[j] = e
            elif e < 0:
                neg[j] = -e
        numer = LaurentPolynomial.monomial(names, pos) + LaurentPolynomial.monomial(
            names, neg
        )
        out[label] = RationalFunction.from_poly(numer) * ai ** (-1)
    return out


def x_pullback_monomial(seed: Seed, k) -> LaurentPolynomial:
    """The a-chart monomial that the x-coordinate of direction k pulls back to.

    Its exponents are the k-th row of the exchange matrix across all
    directions, frozen ones included.
    """
    ki = seed.index(k)
    if seed.is_frozen(k):
        raise FrozenDirection(f"{k!r} is frozen and carries no x-coordinate")
    return LaurentPolynomial.monomial(seed.a_names(), seed.eps[ki])


def chart_segments(tri: Triangulation, space: str = "reduced") -> tuple[Segment, ...]:
    """Ordered variable segments of a chart: diagonals first, then edges."""
    _check_space(space)
    tri.require_complete()
    diags = tuple(tri.sorted_diagonals())
    if space == "reduced":
        return diags
    return diags + tuple(polygon_edges(tri.n_gon))


def atlas_seed(tri: Triangulation, space: str = "with_coefficients") -> Seed:
    """Seed of a complete triangulation: one direction per chart segment.

    Every triangle contributes a 3-cycle of arrows between its sides, taken
    clockwise; edges (absent in the reduced space) are frozen.
    """
    segs = chart_segments(tri, space)
    index = {s: i for i, s in enumerate(segs)}
    n = len(segs)
    eps = [[0] * n for _ in range(n)]
    for a, b, c in tri.triangles():
        sides = (Segment(a, b), Segment(b, c), Segment(a, c))
        for s, t in ((0, 1), (1, 2), (2, 0)):
            si, ti = index.get(sides[s]), index.get(sides[t])
            if si is None or ti is None:
                continue
            eps[si][ti] += 1
            eps[ti][si] -= 1
    frozen = frozenset() if space == "reduced" else frozenset(
        s for s in segs if s.is_edge(tri.n_gon)
    )
    return Seed(segs, frozen, tuple(map(tuple, eps)), (1,) * n)


class MonomialLattice:
    """Exponent translation between the two chart monoids of one seed.

    ``image`` maps an exponent vector over the unfrozen directions to its
    monomial exponents over all directions; ``preimage`` inverts that when
    possible, returning None for vectors outside the image lattice.
    """

    def __init__(self, seed: Seed):
        self.seed = seed
        self.unfrozen = seed.unfrozen
        rows = [seed.eps[seed.index(l)] for l in self.unfrozen]
        self._rows = tuple(tuple(r) for r in rows)
        self._width = len(seed.labels)
        self._rank = self._compute_rank()
        self._cache: dict[tuple, tuple | None] = {}

    def _compute_rank(self) -> int:
        m = [list(map(Fraction, row)) for row in self._rows]
        rank = 0
        cols = self._width
        for col in range(cols):
            pivot = next((r for r in range(rank, len(m)) if m[r][col] != 0), None)
            if pivot is None:
                continue
            m[rank], m[pivot] = m[pivot], m[rank]
            inv = m[rank][col]
            m[rank] = [x / inv for x in m[rank]]
            for r in range(len(m)):
                if r != rank and m[r][col] != 0:
                    f = m[r][col]
                    m[r] = [a - f * b for a, b in zip(m[r], m[rank])]
            rank += 1
        return rank

    def image(self, b: Sequence[int]) -> tuple[int, ...]:
        b = tuple(b)
        if len(b) != len(self.unfrozen):
            raise DimensionMismatch(
                f"need {len(self.unfrozen)} exponents, got {len(b)}"
            )
        return tuple(
            sum(bi * row[j] for bi, row in zip(b, self._rows))
            for j in range(self._width)
        )

    def preimage(self, a: Sequence[int]):
        """Solve image(b) == a exactly; None when no integer solution exists."""
        if self._rank < len(self.unfrozen):
            raise RankDeficient(
                "the monomial map of this seed is not injective; "
                "preimages are not unique"
            )
        a = tuple(a)
        if len(a) != self._width:
            raise DimensionMismatch(f"need {self._width} exponents, got {len(a)}")
        if a in self._cache:
            return self._cache[a]
        m = len(self.unfrozen)
        aug = [
            [Fraction(self._rows[i][j]) for i in range(m)] + [Fraction(a[j])]
            for j in range(self._width)
        ]
        rank = 0
        pivots = []
        for col in range(m):
            pivot = next((r for r in range(rank, len(aug)) if aug[r][col] != 0), None)
            if pivot is None:
                continue
            aug[rank], aug[pivot] = aug[pivot], aug[rank]
            inv = aug[rank][col]
            aug[rank] = [x / inv for x in aug[rank]]
            for r in range(len(aug)):
                if r != rank and aug[r][col] != 0:
                    f = aug[r][col]
                    aug[r] = [x - f * y for x, y in zip(aug[r], aug[rank])]
            pivots.append(col)
            rank += 1
        result: tuple | None
        if any(row[m] != 0 for row in aug[rank:]):
            result = None
        else:
            sol = [Fraction(0)] * m
            for r, col in enumerate(pivots):
                sol[col] = aug[r][m]
            if all(x.denominator == 1 for x in sol):
                result = tuple(int(x) for x in sol)
            else:
                result = None
        self._cache[a] = result
        return result


# -- chart expansion of segment variables ----------------------------------

_EXPAND_CACHE: dict[tuple, LaurentPolynomial] = {}


def expand_cluster_variable(
    seg: Segment, tri: Triangulation, space: str = "reduced"
) -> LaurentPolynomial:
    """Write the variable of a segment as a Laurent polynomial in one chart.

    Chart members map to themselves; edges map to 1 in the reduced space.
    Everything else resolves through the exchange relation on the
    quadrilateral formed with the chart diagonal that the segment exits
    through at its lower endpoint.  Results carry positive coefficients.
    """
    _check_space(space)
    tri.require_complete()
    seg.validate(tri.n_gon)
    return _expand(seg, tri, space)


def _crossing_count(seg: Segment, tri: Triangulation) -> int:
    return sum(1 for t in tri.diagonals if crosses(seg, t))


def _expand(seg: Segment, tri: Triangulation, space: str) -> LaurentPolynomial:
    key = (tri.n_gon, tri.key(), space, seg)
    hit = _EXPAND_CACHE.get(key)
    if hit is not None:
        return hit
    n = tri.n_gon
    names = tuple(a_variable_name(s) for s in chart_segments(tri, space))
    if seg.is_edge(n):
        poly = (
            LaurentPolynomial.one(names)
            if space == "reduced"
            else LaurentPolynomial.variable(names, a_variable_name(seg))
        )
    elif seg in tri.diagonals:
        poly = LaurentPolynomial.variable(names, a_variable_name(seg))
    else:
        a = seg.i
        ear = None
        for p, q, r in tri.triangles():
            if a in (p, q, r):
                opposite = Segment(*(v for v in (p, q, r) if v != a))
                if crosses(opposite, seg):
                    assert ear is None, "segment exits through two triangles"
                    ear = opposite
        assert ear is not None, "no chart diagonal crosses the segment"
        own = _crossing_count(seg, tri)
        quad = sorted((seg.i, seg.j, ear.i, ear.j))
        sides = (
            (Segment(quad[0], quad[1]), Segment(quad[2], quad[3])),
            (Segment(quad[0], quad[3]), Segment(quad[1], quad[2])),
        )
        numer = LaurentPolynomial.zero(names)
        for s1, s2 in sides:
            assert _crossing_count(s1, tri) < own
            assert _crossing_count(s2, tri) < own
            numer = numer + _expand(s1, tri, space) * _expand(s2, tri, space)
        poly = numer * LaurentPolynomial.variable(names, a_variable_name(ear), -1)
    _EXPAND_CACHE[key] = poly
    return poly


# -- pushing x-chart functions through mutations ----------------------------


def _push_through_mutation(
    f: LaurentPolynomial, seed: Seed, k
) -> LaurentPolynomial:
    """Rewrite f (a Laurent polynomial in the old chart) in the mutated chart.

    Each old monomial becomes a new monomial times a power of (1 + X_k); the
    negative powers are cleared by one exact division, which fails with
    NotDivisible exactly when f is not Laurent in the new chart.
    """
    ki = seed.index(k)
    if f.is_zero():
        return f
    names = f.vars
    col = [seed.eps[i][ki] for i in range(len(seed.labels))]
    shifted = []
    exponents = []
    for exps, coeff in f.terms_sorted():
        e_b = sum(exps[i] * col[i] for i in range(len(exps)) if i != ki)
        new_k = -exps[ki] + sum(
            exps[i] * max(0, -col[i]) for i in range(len(exps)) if i != ki
        )
        nexp = exps[:ki] + (new_k,) + exps[ki + 1 :]
        shifted.append((nexp, coeff))
        exponents.append(e_b)
    lift = max(0, -min(exponents))
    binom = 1 + LaurentPolynomial.variable(names, names[ki])
    total = LaurentPolynomial.zero(names)
    for (nexp, coeff), e_b in zip(shifted, exponents):
        total = total + LaurentPolynomial.monomial(names, nexp, coeff) * binom ** (
            e_b + lift
        )
    if lift == 0:
        return total
    return total.exact_div(binom**lift)


def expand_in_x_chart(
    f: LaurentPolynomial, word: Sequence, seed: Seed | None = None
) -> LaurentPolynomial:
    """Express f in the x-chart reached by a mutation word.

    The input is read in the chart of the given seed (default: the chain
    seed matching the variable count).  Raises NotDivisible when f fails to
    be Laurent in some intermediate chart.
    """
    if seed is None:
        seed = type_a_seed(len(f.vars))
    if seed.frozen:
        raise InvariantViolation("x-chart expansion expects a seed with no frozen directions")
    if f.vars != seed.x_names():
        raise DimensionMismatch(
            f"polynomial variables {f.vars} do not match seed chart {seed.x_names()}"
        )
    cur = f
    for k in word:
        cur = _push_through_mutation(cur, seed, k)
        seed = mutate_seed(seed, k)
    return cur


@lru_cache(maxsize=None)
def mutation_words(n: int) -> dict:
    """One mutation word per complete triangulation of the (n+3)-gon.

    Directions are numbered 1..n and start on the fan chart; direction k
    tracks the diagonal it currently labels, so words compose flips.
    Returned as {triangulation key: word tuple}, found breadth-first.
    """
    n_gon = n + 3
    start = fan_triangulation(n_gon)
    start_labels = tuple(start.sorted_diagonals())
    words: dict[tuple, tuple] = {start.key(): ()}
    queue = deque([(start, start_labels, ())])
    while queue:
        tri, labels, word = queue.popleft()
        for k in range(n):
            new_tri, new_diag, _quad = flip(tri, labels[k])
            if new_tri.key() in words:
                continue
            new_labels = labels[:k] + (new_diag,) + labels[k + 1 :]
            new_word = word + (k + 1,)
            words[new_tri.key()] = new_word
            queue.append((new_tri, new_labels, new_word))
    return words
