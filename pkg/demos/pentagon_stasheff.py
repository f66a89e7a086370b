"""Tour of one pentagon bound spec.

Builds the bound vector (20, 10, 20, 20, 30) over the five pentagon
diagonals, confirms it cuts out a Stasheff polytope, walks its five corners
(one per triangulation), and counts lattice points in every chart to show
the census does not depend on the coordinates used.
"""

from tropclust.laminations import chart_coords, lamination_from_coords
from tropclust.polygon import fan_triangulation, triangulations
from tropclust.polytopes import (
    StasheffSpec,
    contains,
    is_nondegenerate,
    is_stasheff,
    lattice_points,
    shift_to_negative_part,
    vertex,
)


def label(tri):
    return ",".join(f"{i}-{j}" for i, j in tri.sorted_diagonals())


def main():
    spec = StasheffSpec.of(
        5, {(1, 3): 20, (1, 4): 10, (2, 4): 20, (2, 5): 20, (3, 5): 30}
    )
    print("bound spec over the pentagon diagonals:")
    for seg, bound in sorted(spec.as_dict().items()):
        print(f"  a_{seg.i}_{seg.j} <= {bound}")
    print(f"stasheff: {is_stasheff(spec)}")
    print(f"nondegenerate (five distinct corners): {is_nondegenerate(spec)}")

    print("\ncorners, one per triangulation (coordinates in that chart):")
    fan = fan_triangulation(5)
    corners = []
    for tri in triangulations(5):
        v = vertex(spec, tri)
        lam = lamination_from_coords(v)
        corners.append(lam)
        inside = contains(spec, lam)
        fan_vec = chart_coords(lam, fan).vector()
        print(
            f"  chart {label(tri):9s}  corner {v.vector()}  "
            f"fan view {fan_vec}  satisfies all bounds: {inside}"
        )

    print("\nlattice census per chart (the count must agree everywhere):")
    reference = None
    for tri in triangulations(5):
        pts = lattice_points(spec, tri)
        if reference is None:
            reference = set(pts)
        same = set(pts) == reference
        print(f"  chart {label(tri):9s}  {len(pts)} points  same set: {same}")

    vectors = sorted(chart_coords(p, fan).vector() for p in reference)
    lo = [min(v[k] for v in vectors) for k in range(2)]
    hi = [max(v[k] for v in vectors) for k in range(2)]
    print(f"\nfan-chart bounding box of the census: a_1_3 in [{lo[0]}, {hi[0]}], "
          f"a_1_4 in [{lo[1]}, {hi[1]}]")

    shift, shifted = shift_to_negative_part(spec)
    fan_vec = chart_coords(shift, fan).vector()
    print(f"\nshift by {fan_vec} moves the polytope into the negative part:")
    for seg, bound in sorted(shifted.as_dict().items()):
        print(f"  a_{seg.i}_{seg.j} <= {bound}")
    print(f"shifted spec still stasheff: {is_stasheff(shifted)}")


if __name__ == "__main__":
    main()
