"""End-to-end acceptance checks, one per advertised guarantee.

Each test prints exactly one [PASS]/[FAIL] line containing the measured
numbers and the wall time against the budget. Two of the checks encode
targets the mathematics does not meet at these parameters; they fail
with the measured evidence on the line rather than with a loosened
tolerance.

Run with `pytest tests/test_acceptance.py -q -s` to see all 12 lines.
"""

import math
import subprocess
import sys
import time
from fractions import Fraction as F

import numpy as np
import pytest

from qms import operators, parabola, surfaces, torusdegree
from qms.exactmath import Poly


def _finish(ok: bool, name: str, detail: str, t: float, limit: float):
    line = (f"[{'PASS' if ok else 'FAIL'}] {name}: {detail} "
            f"[t={t:.4g}s, limit {limit:g}s]")
    print(line)
    if not ok:
        pytest.fail(line, pytrace=False)


# 1 -------------------------------------------------------------------

def test_reference_orbit_sign_change_exact():
    t0 = time.perf_counter()
    orbit = parabola.v_iterate(F(1), F(1, 2), 10)
    t = time.perf_counter() - t0
    ok = (orbit.v[:4] == [F(1, 2), F(1), F(1, 2), F(4)]
          and orbit.v[4] == F(-1, 2)
          and orbit.first_failure == 4
          and t < 1e-3)
    _finish(ok, "parabola reference orbit",
            f"v={[str(v) for v in orbit.v]} "
            f"first_failure={orbit.first_failure}", t, 1e-3)


# 2 -------------------------------------------------------------------

def test_shooting_value_and_orbit_survival():
    t0 = time.perf_counter()
    dbl = parabola.vhat_bisect(1.0, 1e-14)
    ext = parabola.vhat_bisect(1, 1e-40, n_max=400, precision=400)
    t = time.perf_counter() - t0
    vhat = dbl.vhat
    ok = (vhat >= 0.5 and abs(vhat - 9 / 16) <= 0.05
          and dbl.survived_steps >= 40 and ext.survived_steps >= 200
          and t < 1.0)
    _finish(ok, "unique positive orbit",
            f"vhat={vhat:.12f}, |vhat-9/16|={abs(vhat - 9 / 16):.4f}, "
            f"survived double={dbl.survived_steps} (>=40) "
            f"extended={ext.survived_steps} (>=200)", t, 1.0)


# 3 -------------------------------------------------------------------

def test_small_eps_series_convergence_rate():
    t0 = time.perf_counter()
    gap = {}
    for eps in (0.02, 0.01, 0.005):
        res = parabola.vhat_bisect(eps, 1e-14)
        gap[eps] = abs(res.vhat - parabola.vhat_series(eps))
    t = time.perf_counter() - t0
    r1 = gap[0.02] / gap[0.01]
    r2 = gap[0.01] / gap[0.005]
    ok = 8 <= r1 <= 32 and 8 <= r2 <= 32 and t < 5.0
    _finish(ok, "cubic-series remainder order",
            f"halving ratios {r1:.4f}, {r2:.4f}, want [8, 32]; measured "
            f"gap/eps^3 = {gap[0.02] / 0.02 ** 3:.3f}, "
            f"{gap[0.01] / 0.01 ** 3:.3f}, {gap[0.005] / 0.005 ** 3:.3f}: "
            f"the remainder over eps - 2 eps^2 + 8 eps^3 scales as "
            f"~4 eps^3 (1 + O(eps)) - a third-order offset - so the ratio "
            f"climbs toward 8 from below and never reaches the band an "
            f"O(eps^4) remainder would give", t, 5.0)


# 4 -------------------------------------------------------------------

def _u_reference(e):
    x = Poly.x()
    return [
        x,
        Poly.const(e) - x,
        x ** 2 + (1 + e) * x - Poly.const(e),
        -e * (4 * x ** 2 + (1 - 2 * e) * x - Poly.const(e)),
        -e * ((3 - 2 * e) * x ** 2 - 2 * e * (e + 4) * x
              + Poly.const(5 * e * e)),
        -3 * e * ((1 + 6 * e) * x ** 3 + (1 + 3 * e + 4 * e * e) * x ** 2
                  - e * (2 + 3 * e + 2 * e * e) * x
                  + Poly.const(e * e * (1 - e))),
    ]


def test_exact_polynomial_table_and_identities():
    t0 = time.perf_counter()
    bad = []
    for eps in (F(1), F(1, 2), F(1, 3), F(2), F(1, 7)):
        if parabola.u_exact(eps, 5) != _u_reference(eps):
            bad.append(f"u table at eps={eps}")
        # tau_table certifies tau_n = u_{n-1} u_{n-2} u_{n-3} internally
        table = parabola.tau_table(eps, 12)
        for n in range(2, 11):
            ra, rb = parabola.conserved_residual(table, n)
            if ra.num.degree != -1 or rb.num.degree != -1:
                bad.append(f"identity at eps={eps}, n={n}")
    t = time.perf_counter() - t0
    ok = not bad and t < 10.0
    _finish(ok, "exact polynomial table + conserved identities",
            "u_0..u_5 and both identities exact at 5 eps values, n=2..10"
            if not bad else "; ".join(bad), t, 10.0)


# 5 -------------------------------------------------------------------

def test_hyperbola_residual_grid_and_hym():
    t0 = time.perf_counter()
    worst_r = worst_h = 0.0
    for eps in (0.05, 0.1, 0.2, 0.5, 1.0):
        for delta in (-1.0, -0.3, 0.0, 0.3, 1.0):
            par = surfaces.HyperbolaParams(eps=eps, delta=delta,
                                           c_abs=1.0)
            for n in range(-500, 501):
                worst_r = max(worst_r,
                              abs(surfaces.hyperbola_residual(par, n)))
            z1, z2 = operators.embed("hyperbola", par, 64)
            rep = operators.hym_residual(z1, z2, eps, margin=2)
            worst_h = max(worst_h, rep.interior_norm)
    t = time.perf_counter() - t0
    ok = worst_r <= 1e-12 and worst_h <= 1e-12 and t < 1.0
    _finish(ok, "hyperbola recursion + HYM truncation",
            f"worst recursion residual {worst_r:.3e} (|n|<=500, 5x5 "
            f"grid), worst HYM interior {worst_h:.3e} at N=64", t, 1.0)


# 6 -------------------------------------------------------------------

def test_catenoid_invariants_and_exact_residual():
    t0 = time.perf_counter()
    rng = np.random.default_rng(20260823)
    passed = 0
    trials = 10_000
    for _ in range(trials):
        c = 0.1 + 3.9 * rng.random()
        r0 = 0.2 + 4.8 * rng.random()
        r1 = r0 + rng.random() * 2 * c * c / (r0 * r0)
        sol = surfaces.catenoid_build(c, r0, r1, 0.0, -15, 15)
        rs = [sol.r[n] for n in range(-15, 16)]
        if min(rs) <= 0:
            continue
        n0 = rs.index(min(rs))
        if all(rs[i + 1] >= rs[i] - 1e-12 for i in range(n0, 30)) and \
                all(rs[i] >= rs[i + 1] - 1e-12 for i in range(n0)):
            passed += 1
    # exact clause: measure the coefficient blowup, then attempt the
    # literal run under a hard deadline
    probe = surfaces.catenoid_build(F(1), F(1), F(2), F(0), -11, 11,
                                    exact=True)
    bits = [probe.r[n].denominator.bit_length() for n in range(1, 12)]
    script = (
        "from fractions import Fraction as F\n"
        "from qms import surfaces\n"
        "s = surfaces.catenoid_build(F(1), F(1), F(2), F(0), -100, 100,"
        " exact=True)\n"
        "assert all(s.residual(n) == (0, 0) for n in range(-99, 100))\n"
        "print('DONE')\n"
    )
    try:
        proc = subprocess.run([sys.executable, "-c", script],
                              capture_output=True, text=True,
                              timeout=5.5)
        exact_done = proc.returncode == 0 and "DONE" in proc.stdout
    except subprocess.TimeoutExpired:
        exact_done = False
    t = time.perf_counter() - t0
    ok = passed == trials and exact_done and t < 10.0
    if exact_done:
        tail = "exact |n|<=100 residual check completed"
    else:
        tail = (f"exact |n|<=100 cannot terminate: denominator bits "
                f"per step {bits[:6]} -> {bits[-1]} at n=11 (x3.0 per "
                f"step), extrapolating to ~1e47 bits at n=100; the "
                f"subprocess attempt was killed at its 5.5 s deadline "
                f"(exact residual == 0 is verified at |n| <= 4 in the "
                f"unit suite)")
    _finish(ok, "catenoid invariants + exact residual",
            f"invariants {passed}/{trials} on |n|<=15; {tail}", t, 10.0)


# 7 -------------------------------------------------------------------

def test_discretization_residual_orders():
    t0 = time.perf_counter()

    def shape_residual(h):
        n = round(1.0 / h)
        rm, zm = surfaces.catenoid_closed(1.0, h, n - 1)
        r0, z0 = surfaces.catenoid_closed(1.0, h, n)
        rp, _ = surfaces.catenoid_closed(1.0, h, n + 1)
        return 2 * (z0 - zm) ** 2 - (rp + rm - 2 * r0)

    r = [shape_residual(h) for h in (1 / 8, 1 / 16, 1 / 32)]
    p1 = math.log2(abs(r[0] / r[1]))
    p2 = math.log2(abs(r[1] / r[2]))
    hres = [abs(surfaces.helicoid_residual(1.0, h))
            for h in (0.2, 0.1, 0.05)]
    q1 = math.log2(hres[0] / hres[1])
    q2 = math.log2(hres[1] / hres[2])
    t = time.perf_counter() - t0
    ok = (all(2.5 <= p <= 3.5 for p in (p1, p2))
          and all(3.5 <= q <= 4.5 for q in (q1, q2)) and t < 1.0)
    _finish(ok, "closed-form discretization orders",
            f"catenoid orders {p1:.4f}, {p2:.4f} in [2.5, 3.5] at fixed "
            f"n*hbar=1; helicoid orders {q1:.4f}, {q2:.4f} in [3.5, 4.5]",
            t, 1.0)


# 8 -------------------------------------------------------------------

def test_catenoid_asymptotic_gap_bounded():
    t0 = time.perf_counter()
    ns = sorted(set(list(range(1, 21))
                    + [int(x) for x in np.geomspace(20, 1e5, 40)]))
    gaps = []
    for n in ns:
        r, _ = surfaces.catenoid_closed(1.0, 1.0, n)
        gaps.append(r - surfaces.catenoid_asymptotic(1.0, 1.0, n))
    limit_val = 0.5 - 1.5 * math.log(2.0)
    t = time.perf_counter() - t0
    ok = (max(abs(g) for g in gaps) <= 1.0
          and abs(gaps[-1] - limit_val) <= 1e-3 and t < 1.0)
    _finish(ok, "catenoid asymptotic gap",
            f"max |r_n - (2 hbar n - (a^2/2) ln n)| = "
            f"{max(abs(g) for g in gaps):.4f} over n<=1e5, "
            f"gap(1e5)={gaps[-1]:.6f} vs limit 1/2 - (3/2) ln 2 = "
            f"{limit_val:.6f}", t, 1.0)


# 9 -------------------------------------------------------------------

def test_enneper_growth_slope_and_embedding():
    t0 = time.perf_counter()
    mono = all(
        all(b > a for a, b in zip(seq.sigma, seq.sigma[1:]))
        for seq in (surfaces.enneper_sigma(h, 500)
                    for h in (0.01, 0.1, 0.5))
    )
    slope_devs = {h: abs(surfaces.enneper_sigma(h, 1).sigma[1] / (2 * h)
                         - 1)
                  for h in (0.01, 0.02, 0.05)}
    slopes_ok = all(d <= 3 * h for h, d in slope_devs.items())
    norms = []
    for h in (0.08, 0.04, 0.02, 0.01):
        seq = surfaces.enneper_sigma(h, 39)
        w, x3 = operators.embed("enneper", seq, 40)
        norms.append(operators.wz_residual(w, x3,
                                           margin=10).interior_norm)
    ratios = [b / a for a, b in zip(norms, norms[1:])]
    t = time.perf_counter() - t0
    ok = mono and slopes_ok and all(rt < 0.6 for rt in ratios) and t < 5.0
    _finish(ok, "Enneper growth + embedding",
            f"strictly increasing 500 steps at hbar=0.01/0.1/0.5: {mono}; "
            f"|sigma_1/(2h)-1| <= 3h for h<=0.05: {slopes_ok}; embedded "
            f"residual halving ratios {[f'{x:.3f}' for x in ratios]} "
            f"all < 0.6", t, 5.0)


# 10 ------------------------------------------------------------------

def test_torus_degree_action_eom():
    t0 = time.perf_counter()
    worst_dev = worst_eom = worst_gap = 0.0
    ks, k2s = [], []
    for n in (16, 32, 64, 128):
        pair = torusdegree.clock_shift(n)
        s, c = pair.matrices
        rep = torusdegree.torus_degree(s, c)
        ks.append(rep.k_estimate)
        k2s.append(torusdegree.torus_degree(s, c @ c).k_estimate)
        worst_dev = max(worst_dev,
                        abs(rep.trace_value - 2j * np.pi) * n / 20)
        _, norms = torusdegree.torus_eom_residual(pair)
        worst_eom = max(worst_eom, max(norms))
        act = torusdegree.unitary_schild(pair)
        worst_gap = max(worst_gap,
                        abs(act - 4 * np.pi ** 2) * n ** 2 / 200)
    t = time.perf_counter() - t0
    ok = (ks == [1, 1, 1, 1] and k2s == [2, 2, 2, 2]
          and worst_dev <= 1.0 and worst_eom <= 1e-13
          and worst_gap <= 1.0 and t < 1.0)
    _finish(ok, "torus degree + action + EOM",
            f"N=16..128: k={ks}, doubled-flux k={k2s}, "
            f"max dev/(20/N)={worst_dev:.3f}, max EOM={worst_eom:.2e}, "
            f"max |S-4pi^2|/(200/N^2)={worst_gap:.3f}", t, 1.0)


# 11 ------------------------------------------------------------------

def test_sphere_degree_and_defect():
    t0 = time.perf_counter()
    ks, devs, defects = [], [], []
    ok = True
    for n in (9, 25, 101):
        rep = torusdegree.sphere_degree(*torusdegree.fuzzy_sphere(n))
        ks.append(rep.k_estimate)
        devs.append(abs(rep.trace_value.imag - 2 / 3))
        defects.append(rep.defect)
        ok = ok and devs[-1] <= 1 / n ** 2 and rep.defect <= 2.1 / n
    t = time.perf_counter() - t0
    ok = ok and ks == [1, 1, 1] and t < 2.0
    _finish(ok, "sphere degree + defect",
            f"N=9/25/101: k={ks}, |Tr/i - 2/3|="
            f"{['%.2e' % d for d in devs]} (<=1/N^2), defect="
            f"{['%.4f' % d for d in defects]} (<=2.1/N)", t, 2.0)


# 12 ------------------------------------------------------------------

def test_cross_module_embedding_and_moments():
    t0 = time.perf_counter()
    sol = surfaces.catenoid_build(1.0, 1.0, 2.0, 0.0, -64, 63)
    w, z = operators.embed("catenoid", sol, 128)
    wz = operators.wz_residual(w, z, margin=4)
    wa, za = operators.as_array(w), operators.as_array(z)
    ym = operators.ym_residual(
        [(wa + wa.conj().T) / 2, (wa - wa.conj().T) / 2j, za], margin=4)
    shot = parabola.vhat_bisect(1.0, 1e-14)
    orbit = parabola.v_iterate(1.0, shot.vhat, 14)
    z1, _ = operators.embed("parabola", orbit, 8)
    table = parabola.tau_table(F(1), 8)
    worst = 0.0
    for n in range(1, 6):
        mom = operators.moment(z1, n)
        tau_val = float(table.get_tau(n)(shot.vhat))
        worst = max(worst, abs(mom - tau_val))
    t = time.perf_counter() - t0
    ok = (wz.interior_norm <= 1e-12 and ym.interior_norm <= 1e-12
          and worst <= 1e-10 and t < 2.0)
    _finish(ok, "cross-module embedding + moments",
            f"catenoid N=128: wz interior {wz.interior_norm:.3e}, ym "
            f"interior {ym.interior_norm:.3e} (<=1e-12); vacuum moments "
            f"vs telescoped tau ratios, n<=5: max diff {worst:.2e} "
            f"(<=1e-10)", t, 2.0)
