"""Build Cox-ring presentations for several (c, d) and inspect them."""

from coxpres import Params, cox_presentation

# The interesting case: both dimensions above two.
p = Params(3, 3)
pres = cox_presentation(p)

print(f"(c, d) = (3, 3): regime {pres.regime}, "
      f"class group rank {pres.class_group_rank}")
print(f"{len(pres.variables)} generators: {' '.join(pres.variables)}")
print(f"{len(pres.relations)} relations; those carrying the blow-up "
      "variable Tinf pair a coordinate from the first index block with one "
      "from the last:")
for r in pres.relations:
    marker = " (*)" if "Tinf" in str(r) else ""
    print(f"  {r}{marker}")

print("\ndegrees (columns of the 3-row weight matrix):")
for i, name in enumerate(pres.variables):
    print(f"  deg {name} = {tuple(pres.grading.matrix.col(i))}")

# Degenerate regimes are first-class outputs, not errors.
for c, d in [(3, 2), (2, 4), (2, 2)]:
    q = cox_presentation(Params(c, d))
    print(f"\n(c, d) = ({c}, {d}): regime {q.regime}, "
          f"{len(q.variables)} variables, {len(q.relations)} relations, "
          f"grading rows {q.grading.matrix.rows}")
