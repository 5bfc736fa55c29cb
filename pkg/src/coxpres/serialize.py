"""Lossless JSON forms for presentations, cones, fans and reports, plus a
plain-text ring-and-ideal export for external computer algebra systems.

All ideal coefficients in this package are integers, so JSON terms carry
plain ints; a non-integer coefficient raises instead of losing precision.
"""

from __future__ import annotations

from fractions import Fraction

from .collineation import CoxPresentation, Params
from .geometry import Cone, Fan
from .intlinalg import IntMatrix
from .polyring import GREVLEX, Grading, Polynomial, PolyRing


def polynomial_to_obj(f: Polynomial) -> list:
    out = []
    for e, c in f.terms:
        if c.denominator != 1:
            raise ValueError(f"non-integer coefficient {c} cannot be exported")
        mono = {name: k for name, k in zip(f.ring.names, e) if k}
        out.append({"coeff": c.numerator, "monomial": mono})
    return out


def polynomial_from_obj(ring: PolyRing, obj: list) -> Polynomial:
    terms = []
    for t in obj:
        e = [0] * ring.nvars
        for name, k in t["monomial"].items():
            e[ring.index[name]] = int(k)
        terms.append((tuple(e), Fraction(int(t["coeff"]))))
    return ring.from_terms(terms)


def presentation_to_obj(pres: CoxPresentation) -> dict:
    degrees = {name: list(pres.grading.matrix.col(i))
               for i, name in enumerate(pres.ring.names)}
    return {
        "c": pres.params.c,
        "d": pres.params.d,
        "regime": pres.regime,
        "class_group_rank": pres.class_group_rank,
        "variables": list(pres.ring.names),
        "degrees": degrees,
        "relations": [polynomial_to_obj(r) for r in pres.relations],
    }


def presentation_from_obj(obj: dict) -> CoxPresentation:
    params = Params(int(obj["c"]), int(obj["d"]))
    ring = PolyRing(tuple(obj["variables"]), GREVLEX)
    grading = Grading(IntMatrix.from_cols(
        [obj["degrees"][name] for name in ring.names]))
    rels = tuple(polynomial_from_obj(ring, r) for r in obj["relations"])
    return CoxPresentation(params, ring, rels, grading,
                           int(obj["class_group_rank"]), obj["regime"])


def cone_to_obj(cone: Cone) -> dict:
    return {"ambient": cone.ambient, "generators": [list(g) for g in cone.generators]}


def cone_from_obj(obj: dict) -> Cone:
    return Cone(int(obj["ambient"]),
                tuple(tuple(int(x) for x in g) for g in obj["generators"]))


def fan_to_obj(fan: Fan) -> dict:
    return {
        "ambient": fan.ambient,
        "rays": [list(r) for r in fan.rays],
        "maximal_cones": [list(mc) for mc in fan.maximal_cones],
        "simplicial": fan.simplicial,
    }


def fan_from_obj(obj: dict) -> Fan:
    return Fan(int(obj["ambient"]),
               tuple(tuple(int(x) for x in r) for r in obj["rays"]),
               tuple(tuple(int(i) for i in mc) for mc in obj["maximal_cones"]),
               bool(obj["simplicial"]))


def cas_export(pres: CoxPresentation) -> str:
    """Ring-and-ideal script in Singular syntax.

    Variables are declared from largest to smallest, so the script's `dp`
    (degree reverse lexicographic) order coincides with this library's
    internal order and reduced Groebner bases agree verbatim.
    """
    names = list(reversed(pres.ring.names))
    alias = {name: f"x{i+1}" for i, name in enumerate(names)}
    lines = [
        f"// Cox ring presentation, c={pres.params.c} d={pres.params.d}"
        f" (regime {pres.regime})",
        "// variable map (declared largest to smallest):",
    ]
    for name in names:
        col = pres.grading.matrix.col(pres.ring.index[name])
        lines.append(f"//   {alias[name]} = {name}   degree {tuple(col)}")
    decl = ",".join(alias[n] for n in names)
    lines.append(f"ring R = 0, ({decl}), dp;")
    if pres.relations:
        rendered = []
        for r in pres.relations:
            parts = []
            for e, c in r.terms:
                mono = "*".join(
                    alias[nm] if k == 1 else f"{alias[nm]}^{k}"
                    for nm, k in zip(pres.ring.names, e) if k)
                body = mono if abs(c) == 1 else f"{abs(c.numerator)}*{mono}"
                parts.append(("-" if c < 0 else "+") + body)
            s = "".join(parts)
            rendered.append(s[1:] if s.startswith("+") else s)
        lines.append("ideal I =")
        lines.append(",\n".join("  " + s for s in rendered) + ";")
    else:
        lines.append("ideal I = 0;")
    lines.append("// std(I); computes the reduced Groebner basis")
    return "\n".join(lines) + "\n"
