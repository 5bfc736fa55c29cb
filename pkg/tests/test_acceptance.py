"""Acceptance suite: one test per headline claim, exact arithmetic
throughout, each with its runtime bound. Run with `pytest -s` to see the
per-criterion PASS/FAIL lines."""

import itertools
import subprocess
import sys
from contextlib import contextmanager
from pathlib import Path
from time import perf_counter

import pytest

from coxpres.collineation import (Params, TINF, cox_presentation,
                                  expected_sigma_image, gale_matrix_P,
                                  pair_name, plucker_relations,
                                  plucker_residuals, proof_ideals,
                                  pullback_and_cancel, pullback_map,
                                  segre_map, weight_matrices, witness_points,
                                  barycenter_ray)
from coxpres.geometry import (Cone, Fan, gale_cone_test, git_fan, mori_cones,
                              stellar_subdivide)
from coxpres.groebner import (BudgetExceeded, Ideal, ideal_equal,
                              krull_dimension, normal_form, saturate,
                              toric_kernel)
from coxpres.intlinalg import kernel_basis, rank, row_space_hnf
from coxpres.polyring import multidegree

W1, W2, W3, W4 = (1, 1, -1), (1, 0, 0), (1, -1, 0), (0, 0, 1)
LAM1 = Cone.from_generators(2, [(1, 1), (1, 0)])
LAM2 = Cone.from_generators(2, [(1, 0), (1, -1)])


@contextmanager
def criterion(num, label, limit_seconds):
    t0 = perf_counter()
    try:
        yield
    except BudgetExceeded as e:
        print(f"ACCEPTANCE {num:02d} {label}: SKIPPED (pair budget: {e})")
        pytest.skip(str(e))
    except BaseException:
        print(f"ACCEPTANCE {num:02d} {label}: FAIL "
              f"({perf_counter() - t0:.3f}s)")
        raise
    elapsed = perf_counter() - t0
    print(f"ACCEPTANCE {num:02d} {label}: PASS "
          f"({elapsed:.3f}s, limit {limit_seconds}s)")
    assert elapsed < limit_seconds


@pytest.fixture(scope="module")
def ideal33():
    pres = cox_presentation(Params(3, 3))
    return Ideal(pres.ring, pres.relations)


def test_criterion_01_presentation_golden():
    with criterion(1, "presentation golden (3,3)", 1.0):
        pres = cox_presentation(Params(3, 3))
        assert len(pres.variables) == 16
        assert len(pres.relations) == 15
        ring = pres.ring
        tpos = ring.index[TINF]
        with_factor = [r for r in pres.relations
                       if any(e[tpos] for e, _ in r.terms)]
        assert len(with_factor) == 9
        pairs = set()
        for r in with_factor:
            e = next(e for e, _ in r.terms if e[tpos])
            pairs.add(frozenset(nm for nm, k in zip(ring.names, e)
                                if k and nm != TINF))
        assert pairs == {
            frozenset({pair_name(i, j), pair_name(k, l)})
            for (i, j) in [(1, 2), (1, 3), (2, 3)]
            for (k, l) in [(4, 5), (4, 6), (5, 6)]}
        deg = pres.grading.degree_of_var
        for i, j in [(1, 2), (1, 3), (2, 3)]:
            assert deg(ring.index[pair_name(i, j)]) == W1
        for i in (1, 2, 3):
            for j in (4, 5, 6):
                assert deg(ring.index[pair_name(i, j)]) == W2
        for i, j in [(4, 5), (4, 6), (5, 6)]:
            assert deg(ring.index[pair_name(i, j)]) == W3
        assert deg(ring.index[TINF]) == W4


def test_criterion_02_grading_homogeneous():
    with criterion(2, "grading homogeneity {3,4,5}^2", 5.0):
        for c, d in itertools.product((3, 4, 5), repeat=2):
            pres = cox_presentation(Params(c, d))
            for r in pres.relations:
                assert multidegree(r, pres.grading) is not None


def test_criterion_03_gale_pair():
    with criterion(3, "Gale pair {3,4,5}^2", 10.0):
        for c, d in itertools.product((3, 4, 5), repeat=2):
            p = Params(c, d)
            q, _ = weight_matrices(p)
            pm = gale_matrix_P(p)
            assert (pm @ q.transpose()).is_zero()
            assert rank(pm) == p.n - 2
            assert row_space_hnf(pm) == row_space_hnf(kernel_basis(q))
            s = [0] * pm.rows
            for j in range(p.n - p.a_minus, p.n):
                for i, x in enumerate(pm.col(j)):
                    s[i] += x
            assert s == [0] * (pm.rows - 1) + [1]


def test_criterion_04_pullback_cancel():
    with criterion(4, "pullback-cancel {(3,3),(3,4),(4,4)}", 5.0):
        for c, d in [(3, 3), (3, 4), (4, 4)]:
            p = Params(c, d)
            pres = cox_presentation(p)
            phi = pullback_map(p)
            cancelled = []
            for quad in itertools.combinations(range(1, c + d + 1), 4):
                eps, r = pullback_and_cancel(p, quad, _map=phi)
                # eps is the common factor; it also matches the count of
                # indices at most c via 4 -> 2, 3 -> 1, else 0
                t = sum(1 for x in quad if x <= c)
                assert eps == {4: 2, 3: 1}.get(t, 0)
                image = phi(phi.source.parse(
                    f"T_{quad[0]}_{quad[1]}*T_{quad[2]}_{quad[3]}"
                    f" - T_{quad[0]}_{quad[2]}*T_{quad[1]}_{quad[3]}"
                    f" + T_{quad[0]}_{quad[3]}*T_{quad[1]}_{quad[2]}"))
                tinf = pres.ring.var(TINF)
                assert image == r * tinf ** eps
                cancelled.append(r)
            assert set(cancelled) == set(pres.relations)
            assert len(cancelled) == len(pres.relations)


def test_criterion_05_git_fan():
    with criterion(5, "GIT fan and witnesses {2..5}^2", 5.0):
        for c, d in itertools.product((2, 3, 4, 5), repeat=2):
            p = Params(c, d)
            q, _ = weight_matrices(p)
            fan = git_fan(q)
            chambers = {fan.cone(mc) for mc in fan.maximal_cones}
            assert chambers == {LAM1, LAM2}
            x1, x2, w1, w2 = witness_points(p)
            assert all(r == 0 for r in plucker_residuals(p, x1))
            assert all(r == 0 for r in plucker_residuals(p, x2))
            assert w1 == LAM1
            assert w2 == LAM2


def test_criterion_06_fan_combinatorics():
    with criterion(6, "quotient-fan combinatorics (3,3)", 10.0):
        p = Params(3, 3)
        q, _ = weight_matrices(p)
        pm = gale_matrix_P(p)
        all_pairs = list(itertools.combinations(range(15), 2))
        assert len(all_pairs) == 105
        acc1 = [pr for pr in all_pairs if gale_cone_test(pm, q, (2, 1), pr)]
        acc2 = [pr for pr in all_pairs if gale_cone_test(pm, q, (2, -1), pr)]
        assert len(acc1) == 36
        assert len(acc2) == 36
        # predicted supports: one column inside the first block, the other
        # outside it (and mirrored for the second chamber)
        assert all(pr[0] < 3 <= pr[1] for pr in acc1)
        assert all(pr[1] >= 12 and pr[0] < 12 for pr in acc2)
        fan1 = Fan(13, tuple(pm.columns()),
                   tuple(tuple(i for i in range(15) if i not in pr)
                         for pr in acc1), simplicial=True)
        fan1.validate()
        sub = stellar_subdivide(fan1, tuple(range(12, 15)), barycenter_ray(p))
        assert len(sub.maximal_cones) == 90
        sub.validate()


def test_criterion_07_segre_structure():
    with criterion(7, "Segre structure {3,4}^2", 5.0):
        for c, d in itertools.product((3, 4), repeat=2):
            p = Params(c, d)
            pi = proof_ideals(p)
            sigma = segre_map(p)
            for g in pi.g:
                assert not sigma(g)
            for quad, img in zip(pi.h_quadruples, pi.sigma_images):
                assert img == expected_sigma_image(p, quad)
            assert set(pi.b_prime_renamed) == set(
                plucker_relations(c + 1, pi.b_prime_renamed_ring))
            assert set(pi.b_second_renamed) == set(
                plucker_relations(d + 1, pi.b_second_renamed_ring))


def test_criterion_08_dimension_counts(ideal33):
    with criterion(8, "Krull dimensions (3,3)", 120.0):
        ring = ideal33.ring
        j = Ideal(ring, ideal33.gens + (ring.var(TINF),))
        assert krull_dimension(j) == 9
        assert krull_dimension(ideal33) == 10
        pi = proof_ideals(Params(3, 3))
        bp = Ideal(pi.b_prime_ring, pi.b_prime)
        assert krull_dimension(bp) == 5


def test_criterion_09_saturation_radicality(ideal33):
    with criterion(9, "saturation and radicality skeleton (3,3)", 120.0):
        tinf = ideal33.ring.var(TINF)
        assert normal_form(tinf, ideal33.groebner())
        sat = saturate(ideal33, tinf)
        assert ideal_equal(sat, ideal33)


def test_criterion_10_toric_kernel():
    with criterion(10, "toric kernel of the Segre map (3,3)", 120.0):
        p = Params(3, 3)
        pi = proof_ideals(p)
        sigma = segre_map(p)
        kernel = toric_kernel(sigma.exponent_matrix(), ring=sigma.source)
        assert ideal_equal(kernel, Ideal(sigma.source, pi.g))


def test_criterion_11_mori_cones():
    with criterion(11, "effective and movable cones {3,4,5}^2", 1.0):
        for c, d in itertools.product((3, 4, 5), repeat=2):
            _, qinf = weight_matrices(Params(c, d))
            eff, mov = mori_cones(qinf.columns())
            assert eff == Cone.from_generators(3, [W1, W3, W4])
            assert mov == Cone.from_generators(3, [W1, W2, W3])
            assert tuple(2 * x for x in W2) == tuple(
                a + b + c_ for a, b, c_ in zip(W1, W3, W4))
            assert eff.contains(W2)


def test_criterion_12_degenerate_regimes():
    with criterion(12, "degenerate regimes (3,2) and (2,2)", 1.0):
        pres = cox_presentation(Params(3, 2))
        assert pres.regime == "c2"
        assert set(pres.relations) == set(plucker_relations(5, pres.ring))
        q, _ = weight_matrices(Params(3, 2))
        assert pres.grading.matrix == q
        free = cox_presentation(Params(2, 2))
        assert free.regime == "p3"
        assert free.variables == ("T_0", "T_1", "T_2", "T_3")
        assert free.relations == ()
        assert all(free.grading.degree_of_var(i) == (1,) for i in range(4))


def test_criterion_13_property_suites():
    with criterion(13, "randomized property suites", 300.0):
        target = Path(__file__).parent / "test_properties.py"
        proc = subprocess.run(
            [sys.executable, "-m", "pytest", "-q", str(target)],
            capture_output=True, text=True)
        assert proc.returncode == 0, proc.stdout + proc.stderr
