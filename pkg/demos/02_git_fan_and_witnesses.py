"""Chamber fan of the 2-torus weight matrix, certified by witness points.

The fan of the ambient coordinate space is computed from the definition
(angular chamber decomposition); two explicit points on the Grassmannian
cone realize both full chambers as orbit cones, so the subvariety has the
same fan.
"""

from coxpres import Params, git_fan, weight_matrices, witness_points
from coxpres.collineation import plucker_residuals

for c, d in [(2, 2), (3, 3), (4, 5)]:
    p = Params(c, d)
    q, _ = weight_matrices(p)
    print(f"(c, d) = ({c}, {d}): weight columns "
          f"{p.a_plus} x (1,1), {p.a_zero} x (1,0), {p.a_minus} x (1,-1)")
    fan = git_fan(q)
    for mc in fan.maximal_cones:
        print(f"  chamber cone{tuple(fan.rays[i] for i in mc)}")
    x1, x2, w1, w2 = witness_points(p)
    for k, (x, w) in enumerate(((x1, w1), (x2, w2)), start=1):
        coords = {f"T_{i}_{j}": str(v) for (i, j), v in x.coords}
        residuals = plucker_residuals(p, x)
        print(f"  witness {k}: {coords} "
              f"-> all {len(residuals)} quadratic relations vanish: "
              f"{all(r == 0 for r in residuals)}; orbit cone rays "
              f"{w.generators}")
    print()
