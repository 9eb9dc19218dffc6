"""Acceptance criteria 1-12, one test each."""
import json
import math
import time

import numpy as np
from conftest import check, rel_err

from bethe_qsl import cli
from bethe_qsl.awop import QParam, aw_A, aw_D, ibp_sides, phi_poly
from bethe_qsl.bethe import extract_lambdas, xxz_residuals
from bethe_qsl.heine import SolverOptions, heine_bound
from bethe_qsl.poly import Poly, elem_sym, from_roots
from bethe_qsl.qsl import (
    QslProblem,
    XxzParams,
    apply_L,
    aw_eigenvalue,
    aw_poly,
    aw_zeros,
    build_pi_phi,
    heine_stieltjes_solve,
    pi_phi_product_form,
    recover_params,
)
from bethe_qsl.heine import multiset_distance
from bethe_qsl.singular import indicial_exponents, indicial_function
from bethe_qsl.weights import log_gamma, orthogonality_check, xxx_weight, xxx_weight_closed
from bethe_qsl.wilson import (
    WilsonProblem,
    display_normalization,
    xxx_ground_config,
    xxx_heine_solve,
)

THM_SPINS = (-0.5, -0.5, -0.7, -0.9)
THM_ETA = 0.3j


def _random_poly(rng, deg):
    return Poly(rng.normal(size=deg + 1) + 1j * rng.normal(size=deg + 1))


def _random_q(rng):
    # moduli away from 1 and phases away from roots of unity of low order
    r = rng.uniform(0.3, 0.85)
    return QParam.from_q(r * np.exp(1j * rng.uniform(-0.6, 0.6)))


def test_criterion_01_operator_identities(rng):
    start = time.perf_counter()
    worst = 0.0
    instances = 200
    for _ in range(instances):
        q = _random_q(rng)
        f = _random_poly(rng, int(rng.integers(0, 9)))
        g = _random_poly(rng, int(rng.integers(0, 9)))
        # product rule in both forms
        lhs = aw_D(f * g, q)
        worst = max(worst, rel_err(lhs.coeffs, (aw_A(f, q) * aw_D(g, q) + aw_A(g, q) * aw_D(f, q)).coeffs))
        # invariance under q -> 1/q
        worst = max(worst, rel_err(aw_D(f, q).coeffs, aw_D(f, q.inverse()).coeffs))
        worst = max(worst, rel_err(aw_A(f, q).coeffs, aw_A(f, q.inverse()).coeffs))
        # Chebyshev actions
        n = int(rng.integers(1, 9))
        qn2 = q.power(n / 2)
        dt = Poly.chebyshev_u(n - 1) * ((qn2 - 1 / qn2) / (q.half - 1 / q.half))
        worst = max(worst, rel_err(aw_D(Poly.chebyshev_t(n), q).coeffs, dt.coeffs))
        at = Poly.chebyshev_t(n) * ((qn2 + 1 / qn2) / 2)
        worst = max(worst, rel_err(aw_A(Poly.chebyshev_t(n), q).coeffs, at.coeffs))
        # phi ladders
        a = complex(rng.uniform(-0.9, 0.9), rng.uniform(-0.9, 0.9))
        p, pm = phi_poly(n, a, q), phi_poly(n - 1, a * q.half, q)
        qn = q.q**n
        worst = max(worst, rel_err(aw_D(p, q).coeffs, (pm * (2 * a * (1 - qn) / (q.q - 1))).coeffs))
        lin = Poly([1 + a * a * q.q ** (n - 1), -a / q.half * (1 + qn)])
        worst = max(worst, rel_err(aw_A(p, q).coeffs, (pm * lin).coeffs))
        two_a = phi_poly(n, a * q.half, q) * (1 + 1 / qn) + pm * ((1 - 1 / qn) * (1 - a * a * q.q ** (2 * n - 1)))
        worst = max(worst, rel_err((aw_A(p, q) * 2).coeffs, two_a.coeffs))
    elapsed = time.perf_counter() - start
    check("criterion 1", worst < 1e-10 and elapsed < 10,
          f"{instances} instances, worst rel err {worst:.2e}, {elapsed:.2f} s")


def test_criterion_02_pi_phi_equivalence(rng):
    worst, worst_rt = 0.0, 0.0
    for N in (2, 3, 4):
        a = tuple(rng.uniform(-0.9, 0.9, 2 * N) + 1j * rng.uniform(-0.3, 0.3, 2 * N))
        params = XxzParams(_random_q(rng), a)
        Pi, Phi = build_pi_phi(params)
        x = rng.uniform(-0.99, 0.99, 50)
        pi_p, phi_p = pi_phi_product_form(x, params)
        worst = max(worst, rel_err(Pi(x), pi_p), rel_err(Phi(x), phi_p))
        back = recover_params(Pi, Phi, params.q)
        worst_rt = max(worst_rt, multiset_distance(back, np.array(a)))
    check("criterion 2", worst < 1e-10 and worst_rt < 1e-8,
          f"pointwise rel err {worst:.2e}, recovery error {worst_rt:.2e}")


def test_criterion_03_askey_wilson_path():
    start = time.perf_counter()
    params = XxzParams.from_spins(THM_SPINS, THM_ETA)
    coef_err, res_max, all_real = 0.0, 0.0, True
    for n in range(1, 11):
        sols, _ = heine_stieltjes_solve(QslProblem.from_params(params, n), SolverOptions(starts=8))
        ref = aw_poly(n, THM_SPINS, THM_ETA).monic()
        sol = min(sols, key=lambda s: rel_err(s.y.monic().coeffs, ref.coeffs))
        coef_err = max(coef_err, float(np.max(np.abs(sol.y.monic().coeffs - ref.coeffs))))
        x = sol.roots
        all_real &= bool(np.all(np.abs(x.imag) < 1e-10) and np.all(np.abs(x.real) < 1))
        lam = extract_lambdas(sol.y).lambdas
        res_max = max(res_max, float(np.max(np.abs(xxz_residuals(lam, THM_SPINS, THM_ETA)))))
    elapsed = time.perf_counter() - start
    check("criterion 3", coef_err < 1e-8 and all_real and res_max < 1e-7 and elapsed < 30,
          f"coef err {coef_err:.2e}, zeros real in (-1,1): {all_real}, "
          f"max residual {res_max:.2e}, {elapsed:.2f} s")


def test_criterion_04_eigenvalue_formula():
    # With apply_L = Pi D^2 + Phi A D the polynomial p_n satisfies apply_L(p_n) = -lambda_n p_n
    params = XxzParams.from_spins(THM_SPINS, THM_ETA)
    sigma4 = complex(np.prod(params.a))
    worst = 0.0
    for n in range(0, 9):
        problem = QslProblem.from_params(params, n)
        p = aw_poly(n, THM_SPINS, THM_ETA)
        lam = aw_eigenvalue(n, sigma4, params.q)
        worst = max(worst, rel_err(apply_L(problem, p).coeffs, (p * (-lam)).coeffs))
    check("criterion 4", worst < 1e-8, f"apply_L(p_n) = -lambda_n p_n, n <= 8, rel err {worst:.2e}")


def test_criterion_05_heine_bound():
    a = (0.3 + 0.1j, -0.5, 0.7, 0.2 - 0.4j, -0.6 + 0.2j, 0.45)
    params = XxzParams(QParam.from_q(0.55 + 0.25j), a)
    problem = QslProblem.from_params(params, 2)
    opts = SolverOptions(starts=64, seed=3)
    sols, diag = heine_stieltjes_solve(problem, opts)
    bound = heine_bound(2, 1)
    verified = all(
        float(np.max(np.abs((apply_L(problem, s.y) - s.r * s.y).coeffs))) < 1e-8 for s in sols
    )
    report = diag.as_dict()
    check("criterion 5", 0 < len(sols) <= bound == 3 and verified and report["starts_tried"] == 64,
          f"{len(sols)} distinct solutions (bound {bound}), residual-verified: {verified}, "
          f"diagnostics {json.dumps(report)}")


def test_criterion_06_xxx_L2_eigenvalues():
    params, _ = xxx_ground_config(2)
    worst = 0.0
    for n in range(1, 6):
        problem = WilsonProblem.from_params(params, n)
        scale = display_normalization(problem.P, problem.Q)
        sols, _ = xxx_heine_solve(problem)
        assert sols
        expected = 4 * n * (2 * n - 1)
        for s in sols:
            lead = scale * s.r.padded(problem.r_degree + 1)[-1]
            worst = max(worst, abs(lead - expected))
    check("criterion 6", worst < 1e-8, f"eigenvalues 4n(2n-1), n = 1..5, max abs error {worst:.2e}")


def test_criterion_07_xxx_L4_fixture():
    params, _ = xxx_ground_config(4)
    problem = WilsonProblem.from_params(params, 1)
    scale = display_normalization(problem.P, problem.Q)
    sols, _ = xxx_heine_solve(problem)
    target = Poly([0.25, 1.0])
    match = [s for s in sols if s.y.monic().allclose(target, rtol=1e-10)]
    ok = len(match) == 1
    lam = mu = float("nan")
    if ok:
        r = match[0].r.padded(2) * scale
        mu, lam = r[0], r[1]
        ok = abs(lam - 48) < 1e-8 and abs(mu - (-4)) < 1e-8
    check("criterion 7", ok, f"f = x + 1/4 found, lambda = {complex(lam).real:.10g}, mu = {complex(mu).real:.10g}")


def test_criterion_08_weight_closed_forms():
    ys = (0.15, 0.4, 0.8, 1.3, 2.1)
    worst = 0.0
    for L in (2, 4, 8):
        params, _ = xxx_ground_config(L)
        for y in ys:
            worst = max(worst, abs(xxx_weight(y, params.s) / xxx_weight_closed(y, L) - 1))
    gam = 0.0
    for y in ys:
        g0 = math.exp(2 * log_gamma(1j * y).real)
        gam = max(gam, abs(g0 / (math.pi / (y * math.sinh(math.pi * y))) - 1))
        g1 = math.exp(2 * log_gamma(-0.5 + 1j * y).real)
        gam = max(gam, abs(g1 / (math.pi / ((y * y + 0.25) * math.cosh(math.pi * y))) - 1))
    check("criterion 8", worst < 1e-8 and gam < 1e-10,
          f"closed forms rel err {worst:.2e}, Gamma identities rel err {gam:.2e}")


def test_criterion_09_ibp_and_orthogonality(rng):
    ibp = 0.0
    for _ in range(10):
        q = QParam.from_q(rng.uniform(0.2, 0.8))
        f = _random_poly(rng, int(rng.integers(1, 7)))
        g = _random_poly(rng, int(rng.integers(0, 7)))
        lhs, rhs = ibp_sides(f, g, q)
        ibp = max(ibp, abs(lhs - rhs) / max(abs(lhs), 1.0))
    params = XxzParams.from_a((0.1, 0.2, -0.15, 0.05), QParam.from_q(0.36))
    gram = orthogonality_check(params, 4)
    off = float(np.max(np.abs(gram - np.diag(np.diag(gram)))))
    check("criterion 9", ibp < 1e-10 and off < 1e-7,
          f"IBP residual {ibp:.2e}, Gram off-diagonal {off:.2e}")


def test_criterion_10_indicial_exponents(rng):
    worst_set, worst_res, discriminates = 0.0, 0.0, True
    for _ in range(20):
        r = rng.uniform(0.1, 1.0, 4)
        a = tuple(r * np.exp(1j * rng.uniform(-np.pi, np.pi, 4)))
        q = QParam.from_q(rng.uniform(0.2, 0.8) * np.exp(1j * rng.uniform(-0.5, 0.5)))
        params = XxzParams(q, a)
        res = indicial_exponents(params, 1)
        expected = np.array([1.0] + [q.q / (a[0] * aj) for aj in a[1:]])
        worst_set = max(worst_set, multiset_distance(res.exponents, expected))
        worst_res = max(worst_res, float(np.max(res.residual)))
        # a generic t is not an exponent
        discriminates &= abs(indicial_function(0.5 + 0.3j, params, 1)) > 1e-6
    check("criterion 10", worst_set < 1e-12 and worst_res < 1e-9 and discriminates,
          f"set error {worst_set:.2e}, max residual {worst_res:.2e}")


def test_criterion_11_arcsine_distribution():
    x = aw_zeros(200, THM_SPINS, THM_ETA).real
    ks = cli.arcsine_ks(x)
    check("criterion 11", ks < 0.05, f"n = 200 KS distance to arcsine {ks:.4f} (threshold 0.05)")


def test_criterion_12_determinism(tmp_path):
    runs = [
        ["solve", "--model", "xxz", "--eta-imag", "0.3", "--spins", "-0.5,-0.5,-0.7,-0.9", "--n", "4"],
        ["solve", "--model", "xxx", "--L", "2", "--n", "3"],
        ["solve", "--model", "heine-ode", "--pi", "1,0,-1", "--phi", "0,-2", "--n", "2"],
    ]
    same = True
    for k, argv in enumerate(runs):
        outs = []
        for rep in range(2):
            path = tmp_path / f"run{k}_{rep}.json"
            assert cli.main(argv + ["--seed", "7", "--out", str(path)]) == 0
            outs.append(path.read_bytes())
        same &= outs[0] == outs[1]
    check("criterion 12", same, f"{len(runs)} configurations, byte-identical JSON: {same}")
