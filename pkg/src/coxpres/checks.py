"""Registered verification checks over the full construction.

Every check computes an `expected` value from closed-form block counts or
frozen reference data and an `actual` value from the library, passing on
equality. Groebner-heavy checks respect a pair budget and report
"skipped" when it runs out; checks that need c,d > 2 report "skipped" on
degenerate parameters.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass
from typing import Callable, Iterable, Optional

from . import collineation as col
from . import geometry as geo
from .groebner import BudgetExceeded, DEFAULT_PAIR_BUDGET, Ideal, ideal_equal, \
    krull_dimension, normal_form, saturate, toric_kernel
from .intlinalg import kernel_basis, rank, row_space_hnf
from .polyring import multidegree


class Skip(Exception):
    """Raised inside a check to mark it skipped, with a reason."""


@dataclass(frozen=True)
class CheckResult:
    check_id: str
    status: str  # "pass" | "fail" | "skipped"
    expected: object
    actual: object
    seconds: float


@dataclass(frozen=True)
class VerificationReport:
    c: int
    d: int
    results: tuple[CheckResult, ...]

    @property
    def failed(self) -> list[CheckResult]:
        return [r for r in self.results if r.status == "fail"]

    @property
    def skipped(self) -> list[CheckResult]:
        return [r for r in self.results if r.status == "skipped"]

    def exit_code(self, strict: bool = False) -> int:
        if self.failed:
            return 1
        if strict and self.skipped:
            return 1
        return 0


def report_to_obj(report: VerificationReport) -> dict:
    return {
        "c": report.c,
        "d": report.d,
        "checks": [
            {"id": r.check_id, "status": r.status, "expected": r.expected,
             "actual": r.actual, "seconds": r.seconds}
            for r in report.results
        ],
    }


def report_from_obj(obj: dict) -> VerificationReport:
    return VerificationReport(int(obj["c"]), int(obj["d"]), tuple(
        CheckResult(r["id"], r["status"], r["expected"], r["actual"],
                    float(r["seconds"]))
        for r in obj["checks"]))


# ---------------------------------------------------------------------------
# individual checks; each returns (expected, actual)


def _require_general(p: col.Params):
    if p.regime != "general":
        raise Skip("requires c > 2 and d > 2")


def check_presentation(p: col.Params, budget: int):
    pres = col.cox_presentation(p)
    if p.regime == "p3":
        expected = {"variables": 4, "relations": 0, "degrees": [[1]] * 4}
        actual = {"variables": len(pres.variables),
                  "relations": len(pres.relations),
                  "degrees": [list(pres.grading.matrix.col(i)) for i in range(4)]}
        return expected, actual
    m = p.c + p.d
    n_rel = 0 if m < 4 else m * (m - 1) * (m - 2) * (m - 3) // 24
    if p.regime != "general":
        expected = {"variables": p.n, "relations": n_rel, "grading_rows": 2}
        actual = {"variables": len(pres.variables),
                  "relations": len(pres.relations),
                  "grading_rows": pres.grading.matrix.rows}
        return expected, actual
    deg = {"plus": [1, 1, -1], "zero": [1, 0, 0], "minus": [1, -1, 0]}
    expected_degrees = [deg[col.pair_block(p, i, j)] for i, j in col.block_pairs(p)]
    expected_degrees.append([0, 0, 1])
    split_pairs = sorted(
        (col.pair_name(i, j), col.pair_name(k, l))
        for i, j in itertools.combinations(range(1, p.c + 1), 2)
        for k, l in itertools.combinations(range(p.c + 1, m + 1), 2))
    expected = {"variables": p.n + 1, "relations": n_rel,
                "with_factor": p.a_plus * p.a_minus,
                "factor_pairs": split_pairs,
                "degrees": expected_degrees}
    tpos = pres.ring.index[col.TINF]
    factor_rels = [r for r in pres.relations if any(e[tpos] for e, _ in r.terms)]
    pairs = []
    for r in factor_rels:
        e = next(e for e, _ in r.terms if e[tpos])
        names = [nm for nm, k in zip(pres.ring.names, e) if k and nm != col.TINF]
        pairs.append(tuple(sorted(names, key=pres.ring.index.__getitem__)))
    actual = {"variables": len(pres.variables), "relations": len(pres.relations),
              "with_factor": len(factor_rels),
              "factor_pairs": sorted(pairs),
              "degrees": [list(pres.grading.matrix.col(i))
                          for i in range(pres.grading.matrix.cols)]}
    return expected, actual


def check_grading(p: col.Params, budget: int):
    pres = col.cox_presentation(p)
    homogeneous = all(multidegree(r, pres.grading) is not None
                      for r in pres.relations)
    return {"homogeneous": True}, {"homogeneous": homogeneous}


def check_gale(p: col.Params, budget: int):
    q, _ = col.weight_matrices(p)
    pm = col.gale_matrix_P(p)
    n = p.n
    prod_zero = (pm @ q.transpose()).is_zero()
    rk = rank(pm)
    rows_match = row_space_hnf(pm) == row_space_hnf(kernel_basis(q))
    s = [0] * pm.rows
    for j in range(n - p.a_minus, n):
        for i, x in enumerate(pm.col(j)):
            s[i] += x
    expected = {"pq_zero": True, "rank": n - 2, "rowspace_matches_kernel": True,
                "last_block_sum": [0] * (pm.rows - 1) + [1]}
    actual = {"pq_zero": prod_zero, "rank": rk,
              "rowspace_matches_kernel": rows_match, "last_block_sum": s}
    return expected, actual


def check_pullback(p: col.Params, budget: int):
    _require_general(p)
    pres = col.cox_presentation(p)
    phi = col.pullback_map(p)
    cancelled = []
    eps_ok = True
    for quad in itertools.combinations(range(1, p.c + p.d + 1), 4):
        eps, r = col.pullback_and_cancel(p, quad, _map=phi)
        t = sum(1 for x in quad if x <= p.c)
        eps_ok = eps_ok and eps == {4: 2, 3: 1}.get(t, 0)
        cancelled.append(r)
    set_equal = set(cancelled) == set(pres.relations)
    bijective = len(cancelled) == len(pres.relations)
    return ({"set_equal": True, "eps_matches_common_factor": True, "bijective": True},
            {"set_equal": set_equal, "eps_matches_common_factor": eps_ok,
             "bijective": bijective})


def check_gitfan(p: col.Params, budget: int):
    q, _ = col.weight_matrices(p)
    fan = geo.git_fan(q)
    chambers = sorted(sorted(fan.rays[i] for i in mc) for mc in fan.maximal_cones)
    x1, x2, w1, w2 = col.witness_points(p)
    lam1 = geo.Cone.from_generators(2, [(1, 1), (1, 0)])
    lam2 = geo.Cone.from_generators(2, [(1, 0), (1, -1)])
    expected = {"chambers": [sorted([(1, 0), (1, 1)]), sorted([(1, -1), (1, 0)])],
                "witness_residuals_zero": True,
                "orbit_cones_are_chambers": True}
    actual = {"chambers": sorted(chambers),
              "witness_residuals_zero":
                  all(r == 0 for r in col.plucker_residuals(p, x1))
                  and all(r == 0 for r in col.plucker_residuals(p, x2)),
              "orbit_cones_are_chambers": w1 == lam1 and w2 == lam2}
    expected["chambers"] = sorted(expected["chambers"])
    return expected, actual


def check_fancomb(p: col.Params, budget: int):
    q, _ = col.weight_matrices(p)
    pm = col.gale_matrix_P(p)
    n = p.n
    acc1 = [pair for pair in itertools.combinations(range(n), 2)
            if geo.gale_cone_test(pm, q, (2, 1), pair)]
    acc2 = [pair for pair in itertools.combinations(range(n), 2)
            if geo.gale_cone_test(pm, q, (2, -1), pair)]
    ap, a0, am = p.a_plus, p.a_zero, p.a_minus
    expected = {"accepted_1": ap * (a0 + am), "accepted_2": am * (a0 + ap)}
    actual = {"accepted_1": len(acc1), "accepted_2": len(acc2)}
    if p.regime == "general":
        # the subdivision at the last-block face needs a_minus >= 2
        rays = tuple(pm.columns())
        fan1 = geo.Fan(n - 2, rays,
                       tuple(tuple(i for i in range(n) if i not in pair)
                             for pair in acc1), simplicial=True)
        target = tuple(range(n - p.a_minus, n))
        rho = col.barycenter_ray(p)
        sub = geo.stellar_subdivide(fan1, target, rho)
        expected.update({"subdivided_cones": ap * am + ap * a0 * am,
                         "inserted_ray": [0] * (n - 3) + [1]})
        actual.update({"subdivided_cones": len(sub.maximal_cones),
                       "inserted_ray": list(rho)})
    return expected, actual


def check_segre(p: col.Params, budget: int):
    _require_general(p)
    pi = col.proof_ideals(p)
    sigma = col.segre_map(p)
    grading = col.segre_grading(p)
    g_vanish = all(not sigma(f) for f in pi.g)
    table = all(img == col.expected_sigma_image(p, quad)
                for quad, img in zip(pi.h_quadruples, pi.sigma_images))
    degree_zero = all(multidegree(img, grading) == (0,)
                      for img in pi.sigma_images if img)
    bp = set(pi.b_prime_renamed) == set(
        col.plucker_relations(p.c + 1, pi.b_prime_renamed_ring))
    bs = set(pi.b_second_renamed) == set(
        col.plucker_relations(p.d + 1, pi.b_second_renamed_ring))
    expected = {"sigma_g_zero": True, "four_case_table": True,
                "images_degree_zero": True,
                "first_block_is_plucker": True, "second_block_is_plucker": True}
    actual = {"sigma_g_zero": g_vanish, "four_case_table": table,
              "images_degree_zero": degree_zero,
              "first_block_is_plucker": bp, "second_block_is_plucker": bs}
    return expected, actual


def check_mori(p: col.Params, budget: int):
    _require_general(p)
    _, qinf = col.weight_matrices(p)
    eff, mov = geo.mori_cones(qinf.columns())
    w1, w2, w3, w4 = (1, 1, -1), (1, 0, 0), (1, -1, 0), (0, 0, 1)
    expected = {"eff": sorted([w1, w3, w4]), "mov": sorted([w1, w2, w3]),
                "w2_in_eff": True}
    actual = {"eff": [tuple(g) for g in eff.generators],
              "mov": [tuple(g) for g in mov.generators],
              "w2_in_eff": eff.contains(w2)}
    return expected, actual


def check_localeq(p: col.Params, budget: int):
    _require_general(p)
    return ({"invariant": True, "degree": (0, 0, 0)},
            {"invariant": col.local_equation_invariance(p),
             "degree": col.laurent_degree(p, col.local_equation_exponents(p))})


def check_degenerate(p: col.Params, budget: int):
    pres = col.cox_presentation(p)
    if p.regime == "p3":
        expected = {"regime": "p3", "variables": 4, "relations": 0,
                    "degrees_all_one": True}
        actual = {"regime": pres.regime, "variables": len(pres.variables),
                  "relations": len(pres.relations),
                  "degrees_all_one": all(
                      pres.grading.matrix.col(i) == (1,) for i in range(4))}
        return expected, actual
    if p.regime in ("c2", "d2"):
        ring = pres.ring
        expected_rels = set(col.plucker_relations(p.c + p.d, ring))
        q, _ = col.weight_matrices(p)
        expected = {"regime": p.regime, "is_plucker_ideal": True,
                    "grading_is_q": True}
        actual = {"regime": pres.regime,
                  "is_plucker_ideal": set(pres.relations) == expected_rels,
                  "grading_is_q": pres.grading.matrix == q}
        return expected, actual
    expected = {"regime": "general", "has_factor_variable": True}
    actual = {"regime": pres.regime,
              "has_factor_variable": col.TINF in pres.variables}
    return expected, actual


def check_dimension(p: col.Params, budget: int):
    _require_general(p)
    pres = col.cox_presentation(p)
    ring = pres.ring
    i_ideal = Ideal(ring, pres.relations)
    j_ideal = Ideal(ring, pres.relations + (ring.var(col.TINF),))
    pi = col.proof_ideals(p)
    bp_ideal = Ideal(pi.b_prime_ring, pi.b_prime)
    m = p.c + p.d
    expected = {"dim_j": 2 * m - 3, "dim_i": 2 * m - 2,
                "dim_first_block": 2 * p.c - 1}
    actual = {"dim_j": krull_dimension(j_ideal, budget),
              "dim_i": krull_dimension(i_ideal, budget),
              "dim_first_block": krull_dimension(bp_ideal, budget)}
    return expected, actual


def check_saturation(p: col.Params, budget: int):
    _require_general(p)
    pres = col.cox_presentation(p)
    ring = pres.ring
    i_ideal = Ideal(ring, pres.relations)
    tinf = ring.var(col.TINF)
    sat = saturate(i_ideal, tinf, budget)
    expected = {"saturation_is_identity": True, "factor_var_outside": True}
    actual = {"saturation_is_identity": ideal_equal(sat, i_ideal, budget),
              "factor_var_outside":
                  bool(normal_form(tinf, i_ideal.groebner(budget)))}
    return expected, actual


def check_torickernel(p: col.Params, budget: int):
    _require_general(p)
    pi = col.proof_ideals(p)
    sigma = col.segre_map(p)
    kernel = toric_kernel(sigma.exponent_matrix(), ring=col.ambient_ring(p),
                          budget=budget)
    g_ideal = Ideal(col.ambient_ring(p), pi.g)
    return ({"kernel_equals_binomials": True},
            {"kernel_equals_binomials": ideal_equal(kernel, g_ideal, budget)})


CHECKS: dict[str, Callable] = {
    "presentation": check_presentation,
    "grading": check_grading,
    "gale": check_gale,
    "pullback": check_pullback,
    "gitfan": check_gitfan,
    "fancomb": check_fancomb,
    "segre": check_segre,
    "mori": check_mori,
    "localeq": check_localeq,
    "degenerate": check_degenerate,
    "dimension": check_dimension,
    "saturation": check_saturation,
    "torickernel": check_torickernel,
}

GROEBNER_CHECKS = frozenset({"dimension", "saturation", "torickernel"})

# default cut-off: Groebner-heavy checks run only up to (c,d) = (3,4)
GROEBNER_DEFAULT_MAX = 7


def default_check_ids(p: col.Params) -> list[str]:
    ids = [k for k in CHECKS if k not in GROEBNER_CHECKS]
    if p.c + p.d <= GROEBNER_DEFAULT_MAX:
        ids += sorted(GROEBNER_CHECKS)
    return sorted(ids)


def run_checks(p: col.Params, ids: Optional[Iterable[str]] = None,
               budget: int = DEFAULT_PAIR_BUDGET) -> VerificationReport:
    """Run selected checks (default set when ids is None); deterministic
    report order by check id."""
    if ids is None:
        selected = default_check_ids(p)
    else:
        selected = sorted(dict.fromkeys(ids))
        unknown = [i for i in selected if i not in CHECKS]
        if unknown:
            raise KeyError(f"unknown checks: {', '.join(unknown)}")
    results = []
    for check_id in selected:
        fn = CHECKS[check_id]
        t0 = time.perf_counter()
        try:
            expected, actual = fn(col.Params(p.c, p.d), budget)
            status = "pass" if expected == actual else "fail"
        except Skip as s:
            status, expected, actual = "skipped", None, str(s)
        except BudgetExceeded as b:
            status, expected, actual = "skipped", None, str(b)
        except Exception as e:  # a crashing check is a failing check
            status, expected, actual = "fail", None, f"{type(e).__name__}: {e}"
        results.append(CheckResult(check_id, status, _plain(expected),
                                   _plain(actual), time.perf_counter() - t0))
    return VerificationReport(p.c, p.d, tuple(results))


def _plain(x):
    """Down-convert to JSON-native values for lossless report round-trips."""
    if isinstance(x, dict):
        return {k: _plain(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_plain(v) for v in x]
    if isinstance(x, bool) or x is None:
        return x
    if isinstance(x, int):
        return x
    return str(x) if not isinstance(x, (str, float)) else x
