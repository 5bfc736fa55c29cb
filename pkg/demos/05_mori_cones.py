"""Effective and movable cones from the generator degrees.

The effective cone is spanned by all generator degrees; the movable cone
intersects, over each single generator, the cone spanned by the others.
Only degrees of multiplicity one can cut anything out, which here means
the lone degree of the blow-up variable.
"""

from coxpres import Params, mori_cones, weight_matrices

for c, d in [(3, 3), (3, 4), (5, 5)]:
    p = Params(c, d)
    _, qinf = weight_matrices(p)
    degrees = qinf.columns()
    eff, mov = mori_cones(degrees)
    print(f"(c, d) = ({c}, {d}): {len(degrees)} generator degrees")
    print(f"  effective cone rays: {eff.generators}")
    print(f"  movable cone rays:   {mov.generators}")
    print(f"  movable inside effective: "
          f"{all(eff.contains(g) for g in mov.generators)}")

# sanity: (1,0,0) is interior to the effective cone, 2*(1,0,0) being the
# sum of the three extremal rays
eff, _ = mori_cones(weight_matrices(Params(3, 3))[1].columns())
print(f"\n(1,0,0) inside the effective cone: "
      f"{eff.contains((1, 0, 0), relative_interior=True)}")

# small degenerate inputs
eff, mov = mori_cones([(1, 0, 0)])
print(f"single degree: effective {eff.generators}, movable {mov.generators}")
