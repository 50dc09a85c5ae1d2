"""Acceptance criteria 1-8, each at its stated tolerance.

All criteria are evaluated once (module fixture) so that the total runtime
can be checked as part of criterion 7.  One PASS/FAIL line per criterion is
printed in the terminal summary; run this file directly to print them alone.
"""
from __future__ import annotations

import random
import time
from fractions import Fraction

import numpy as np
import pytest

RESULTS: dict = {}


def _line(num, ok, parts):
    detail = "; ".join(f"{name}: {'ok' if p else 'FAIL'} ({info})" for name, p, info in parts)
    return f"ACCEPTANCE {num}: {'PASS' if ok else 'FAIL'} | {detail}"


def criterion_1():
    from quatds.lie import killing_matrix

    t = time.perf_counter()
    ksu, ksp = killing_matrix("su2"), killing_matrix("sp11")
    dt = time.perf_counter() - t
    target = [-12] * 6 + [24] * 4
    su_ok = all(ksu[i, j] == (-8 if i == j else 0) for i in range(3) for j in range(3))
    sp_ok = all(ksp[i, j] == (target[i] if i == j else 0) for i in range(10) for j in range(10))
    return [("su(2) = -8 I_3", su_ok, "exact"), ("sp(1,1) = diag(-12 I_6, 24 I_4)", sp_ok, "exact"),
            ("runtime < 1 s", dt < 1.0, f"{dt:.3f} s")]


def criterion_2():
    from quatds import lie

    bad_b = sum(lie.c_killing(lie.root_vector(m), lie.root_vector((-n[0], -n[1]))) != (1 if m == n else 0)
                for m in lie.ROOTS for n in lie.ROOTS)
    bad_h = sum(lie.c_bracket(lie.root_vector(m), lie.root_vector((-m[0], -m[1]))) != lie.cartan_element(m)
                for m in lie.ROOTS)
    return [("B(E_mu, E_-nu) = delta", bad_b == 0, f"{bad_b}/64 mismatches"),
            ("[E_mu, E_-mu] = H_mu", bad_h == 0, f"{bad_h}/8 mismatches")]


def criterion_3():
    from quatds.group import (frac_linear, j_factor, one_minus_norm_factor, random_ball_exact, random_sp11_exact,
                              random_sp11_float, sigma)
    from quatds.quaternion import random_float

    rng = random.Random(3)
    pts = 200
    bad_n = bad_s = 0
    for _ in range(pts):
        g, q = random_sp11_exact(rng), random_ball_exact(rng)
        bad_n += one_minus_norm_factor(g, q) != 0
        bad_s += not (sigma(q) * sigma(-q)).is_identity()
    res = 0.0
    for _ in range(pts):
        g, h, q = random_sp11_float(rng), random_sp11_float(rng), random_float(rng)
        lhs = j_factor(g * h, q).as_matrix()
        rhs = j_factor(g, frac_linear(h, q)).as_matrix() * j_factor(h, q).as_matrix()
        res = max(res, (lhs - rhs).maxabs())
    return [("Lemma Ngamma exact", bad_n == 0, f"{bad_n}/{pts} failures"),
            ("sigma(q)^-1 = sigma(-q) exact", bad_s == 0, f"{bad_s}/{pts} failures"),
            ("j-cocycle < 1e-10", res < 1e-10, f"max {res:.2e}")]


def criterion_4():
    from quatds import fueter as fu

    bad_crf = bad_q = 0
    for n in range(6):
        for k in range(n + 1):
            for l in range(n + 1):
                a, b = fu.crf_residuals(n, k, l)
                bad_crf += bool(a) + bool(b)
                bad_q += not fu.is_left_regular(fu.q_kl(n, k, l))
    bad_h = sum(not fu.is_left_regular(c) for n in range(1, 6) for k in range(n + 1)
                for c in fu.minimal_ktype(n, k)[1])
    rng = random.Random(4)
    bad_d = 0
    for _ in range(50):
        f = fu.random_vn_function(rng, rng.randint(1, 3))
        bad_d += not all((x - y).is_zero() for x, y in zip(fu._dirac_path_tensor(f), fu._dirac_path_fueter(f)))
    return [("CRF n <= 5", bad_crf == 0, f"{bad_crf} nonzero"), ("dl_bar Q^n_kl = 0", bad_q == 0, f"{bad_q} nonzero"),
            ("dl_bar h_k^n coords = 0", bad_h == 0, f"{bad_h} nonzero"),
            ("d2prop paths agree (50)", bad_d == 0, f"{bad_d}/50 mismatches")]


def criterion_5():
    from quatds import forms as fm
    from quatds.fueter import random_regular
    from quatds.group import random_sp11_float
    from quatds.polynomial import random_qpolynomial
    from quatds.quaternion import random_float

    rng = random.Random(5)
    bad_minus = bad_plus = 0
    for _ in range(100):
        f, g = random_qpolynomial(rng, 3), random_qpolynomial(rng, 3)
        bad_minus += not fm.closedness_defect(g, f, -1).is_zero()
        bad_plus += not fm.closedness_defect(g, f, +1).is_zero()
    bad_om = 0
    for _ in range(10):
        f, g = random_regular(rng, rng.randint(0, 3)), random_regular(rng, rng.randint(0, 3))
        bad_om += not fm.exterior_d(fm.automorphic_forms_build([f], [g], "omega")[0][0]).is_zero()
    names = ("dq", "dqbar_dq_as_printed", "Dq", "dqbar_dq")
    base = {"dq": fm.dq(), "dqbar_dq_as_printed": fm.dqbar_dq(), "Dq": fm.Dq(), "dqbar_dq": fm.dqbar_dq()}
    worst = dict.fromkeys(names, 0.0)
    for _ in range(100):
        gm, q = random_sp11_float(rng), random_float(rng)
        for nm in names:
            worst[nm] = max(worst[nm], fm.form_residual(fm.mobius_pullback_numeric(gm, base[nm], q),
                                                        fm.mobius_pullback_closed_form(gm, nm, q)))
    return [("d(g Dq f) with '-' (100 cubic pairs)", bad_minus == 0,
             f"{bad_minus}/100 fail; '+' sign: {bad_plus}/100 fail"),
            ("d omega_{f,g} = 0 regular pairs", bad_om == 0, f"{bad_om}/10 nonzero"),
            ("formdform (a) < 1e-10", worst["dq"] < 1e-10, f"max {worst['dq']:.2e}"),
            ("formdform (b) as displayed < 1e-10", worst["dqbar_dq_as_printed"] < 1e-10,
             f"max {worst['dqbar_dq_as_printed']:.2e}; with N(cq+d)^-1: {worst['dqbar_dq']:.2e}"),
            ("formdform (c) < 1e-10", worst["Dq"] < 1e-10, f"max {worst['Dq']:.2e}")]


def criterion_6():
    from quatds.group import frac_linear, random_sp11_float
    from quatds.quaternion import random_float, random_unit
    from quatds.representations import jn_solve, mat_residual, mu_matrix, rn_rows, z_matrix
    from quatds.scalars import GaussianRational

    rng = random.Random(6)

    def gr():
        return GaussianRational(Fraction(rng.randint(-6, 6), rng.randint(1, 5)), Fraction(rng.randint(-6, 6), 3))

    bad_rn = 0
    for n in range(5):
        for _ in range(10):
            a = np.array([[gr(), gr()], [gr(), gr()]], dtype=object)
            b = np.array([[gr(), gr()], [gr(), gr()]], dtype=object)
            bad_rn += any(v != 0 for v in (rn_rows(a.dot(b), n) - rn_rows(a, n).dot(rn_rows(b, n))).flat)
    res_j = 0.0
    for n in range(5):
        jn = jn_solve(n).data
        for _ in range(100):
            r = rn_rows(random_unit(rng), n).astype(complex)
            res_j = max(res_j, mat_residual(r.T @ jn @ np.conj(r), jn))
    mu_res, z_res = {}, {}
    for n in range(1, 5):
        mu_res[n] = z_res[n] = 0.0
        for _ in range(100):
            g, h = random_sp11_float(rng), random_sp11_float(rng)
            mu_res[n] = max(mu_res[n], mat_residual(mu_matrix(g * h, n).data,
                                                    mu_matrix(g, n).data @ mu_matrix(h, n).data))
            q = random_float(rng, 0.75)
            lhs = z_matrix(frac_linear(g, q), n).data @ rn_rows(g.c * q + g.d, n)
            z_res[n] = max(z_res[n], mat_residual(lhs, mu_matrix(g, n).data @ z_matrix(q, n).data))
    fmt = ", ".join
    return [("R_n homomorphism exact", bad_rn == 0, f"{bad_rn}/50 failures"),
            ("mu homomorphism < 1e-10", max(mu_res.values()) < 1e-10,
             fmt(f"n={n}: {v:.1e}" for n, v in mu_res.items())),
            ("J_n invariance < 1e-10", res_j < 1e-10, f"max {res_j:.2e}"),
            ("Z(gq) R_n(cq+d) = mu(g) Z(q) < 1e-9", max(z_res.values()) < 1e-9,
             fmt(f"n={n}: {v:.1e}" for n, v in z_res.items()))]


def criterion_7(total_elapsed):
    from quatds.fueter import random_regular
    from quatds.quadrature import cauchy_fueter_value, sphere_Dq_f
    from quatds.quaternion import Quaternion

    rng = random.Random(7)
    rel = dq = 0.0
    for deg in range(5):
        for _ in range(4):
            f = random_regular(rng, deg)
            q0 = Quaternion(*(rng.uniform(-0.3, 0.3) for _ in range(4)))
            ex = f.evaluate(q0).to_float()
            rel = max(rel, (cauchy_fueter_value(f, q0, 0.5, 5) - ex).abs() / max(ex.abs(), 1e-300))
            c = tuple(rng.uniform(-0.2, 0.2) for _ in range(4))
            dq = max(dq, sphere_Dq_f(f, c, rng.uniform(0.3, 0.7), 5).abs())
    return [("Cauchy reproduction rel < 1e-5 (level 5)", rel < 1e-5, f"max {rel:.2e}"),
            ("int Dq f = 0, |res| < 1e-7", dq < 1e-7, f"max {dq:.2e}"),
            ("total suite runtime < 60 s", total_elapsed() < 60.0, f"{total_elapsed():.1f} s")]


def criterion_8():
    from quatds.arithmetic import gammaN_int, gammaN_int_mod, search_gz

    found = search_gz(4)
    dec = [gammaN_int(g, 2) for g in found]
    bad = sum(d != gammaN_int_mod(g, 2) for d, g in zip(dec, found))
    return [("Gamma(2) vs mod-2O reduction", bad == 0 and len(found) > 0,
             f"{len(found)} elements, {sum(dec)} in Gamma(2), {bad} disagreements")]


def evaluate_all() -> dict:
    start = time.perf_counter()
    out = {}
    for num, fn in enumerate((criterion_1, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6), 1):
        out[num] = fn()
    out[8] = criterion_8()
    out[7] = criterion_7(lambda: time.perf_counter() - start)
    for num in sorted(out):
        parts = out[num]
        RESULTS[num] = (all(p for _, p, _ in parts), _line(num, all(p for _, p, _ in parts), parts))
    return RESULTS


@pytest.fixture(scope="module")
def results():
    return evaluate_all()


@pytest.mark.parametrize("num", range(1, 9))
def test_acceptance(results, num):
    ok, line = results[num]
    print(line)
    assert ok, line


if __name__ == "__main__":
    for _, (_, line) in sorted(evaluate_all().items()):
        print(line)
