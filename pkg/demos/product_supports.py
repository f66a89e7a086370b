"""From a crossing pair of curves to a basis expansion.

Takes the two pentagon unit curves that cross once, multiplies their basis
functions as honest Laurent polynomials, expands the product back into the
basis by repeatedly splitting crossings, and shows that the support of the
expansion is exactly the lattice of the Minkowski bound spec.  Finishes by
reading the same coefficients off the pentagon closed form.
"""

from tropclust.basis import (
    a2_coefficient,
    basis_laurent,
    crossing_measure,
    product_expand,
    product_graph,
)
from tropclust.laminations import TropicalCoords, chart_coords, lamination_from_coords
from tropclust.polygon import Segment, fan_triangulation
from tropclust.polytopes import lattice_points, minkowski_spec

FAN = fan_triangulation(5)


def pt(vec):
    return lamination_from_coords(
        TropicalCoords.of(FAN, dict(zip(FAN.sorted_diagonals(), vec)))
    )


def loaded_chords(lam):
    return [
        f"{a}-{b}:{w}"
        for a, b, w in lam.graph.sparse_items()
        if Segment(a, b).is_diagonal(5)
    ] or ["none"]


def main():
    along_13 = pt((0, 1))  # unit curve along chord {1,3}
    along_25 = pt((1, 0))  # unit curve along chord {2,5}; crosses {1,3} once
    merged = product_graph([along_13, along_25])
    print(f"factors load chords {loaded_chords(along_13)} and {loaded_chords(along_25)}")
    print(f"crossing measure of the merged graph: {crossing_measure(merged)}")

    f = basis_laurent(along_13)
    g = basis_laurent(along_25)
    print(f"\nbasis function of the first curve : {f}")
    print(f"basis function of the second curve: {g}")
    print(f"their product                     : {f * g}")

    expansion = product_expand([along_13, along_25])
    print("\nexpansion back into the basis (fan coordinates of each term):")
    rebuilt = None
    for lam, coeff in expansion:
        vec = chart_coords(lam, FAN).vector()
        piece = coeff * basis_laurent(lam)
        rebuilt = piece if rebuilt is None else rebuilt + piece
        print(f"  {coeff} * basis{vec}   chords {loaded_chords(lam)}")
    print(f"terms rebuild the product exactly: {rebuilt == f * g}")

    spec = minkowski_spec([along_13, along_25])
    census = lattice_points(spec)
    print(f"\nMinkowski bound spec lattice census: {len(census)} points")
    print(f"census equals the support: {set(census) == set(expansion.support())}")

    # The same numbers from the closed form: multiplicity vector d counts how
    # often each of the five unit curves occurs in the product.
    d = (0, 1, 0, 1, 0)
    print("\nclosed-form coefficients for the same product:")
    print(f"  the origin                          : {a2_coefficient(d, 1, 0, 0)}")
    print(f"  the curve between the two factors   : {a2_coefficient(d, 3, 1, 0)}")
    print(f"  one of the factors itself (absent)  : {a2_coefficient(d, 2, 1, 0)}")


if __name__ == "__main__":
    main()
