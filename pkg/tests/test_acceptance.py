"""Acceptance gate: one test per published criterion, at stated tolerances.

Each test is self-contained and seeded; the conftest terminal hook prints a
one-line PASS/FAIL verdict per criterion after the run.
"""
import math
import time

import numpy as np
import pytest

from tetra.autgroup import (
    DiscAut,
    act_left,
    act_right,
    diamond,
    flip,
    normalize_triangular,
    schwarz_pick_triangular,
    tau,
    upsilon_star,
)
from tetra.interpolate import (
    SchwarzWorkspace,
    all_solutions_params,
    big_m,
    scalar_np2,
    schwarz_feasible,
    solve_schwarz,
    uv_vectors,
    verify_interpolant,
)
from tetra.linalg import eigvals_herm2, mat2, op_norm, pi_map, principal_sqrt
from tetra.metrics import pseudohyperbolic
from tetra.musyn import (
    SynthesisInstance,
    bft_lower_bound,
    mu_diag,
    mu_scaling_oracle,
    synth_two_point,
)
from tetra.tetrablock import (
    criterion_max,
    d_of,
    in_distinguished_boundary,
    membership,
    membership_grid_oracle,
    peak_function,
    real_slice_member,
    separating_polynomial,
)

from conftest import (
    random_contraction,
    random_exterior_point,
    random_feasible_instance,
    random_point_in_e,
    random_point_in_ebar,
    random_unitary,
)

GOLD_X = (0.5, 0.25, 0.5)
GOLD_L0 = -0.8


def sample_disc(rng):
    return math.sqrt(rng.uniform()) * np.exp(2j * np.pi * rng.uniform())


def closed_margin(x):
    rep = membership(x, closed=True)
    return min(rep.m3, rep.m3p)


def test_criterion_01_golden_reproduction():
    start = time.monotonic()
    ok, margin = schwarz_feasible(GOLD_L0, GOLD_X)
    assert ok and abs(margin) <= 1e-12
    assert abs(float(d_of(GOLD_X)) - 0.8) <= 1e-12

    phi0 = solve_schwarz(GOLD_L0, GOLD_X, t=0.0)
    Z = phi0.Z
    assert abs(op_norm(Z) - 1.0) <= 1e-10
    lo, hi = eigvals_herm2(Z)  # this Z is real symmetric
    assert abs(lo + 1.0) <= 1e-10 and abs(hi - 0.625) <= 1e-10

    _, g0, l0r, s, _ = phi0._scalar_params
    assert abs(g0 - 0.3) <= 1e-10
    assert abs(s - 0.625) <= 1e-10
    assert abs(pseudohyperbolic(0.3, 0.625) - 0.4) <= 1e-12

    phi1 = solve_schwarz(GOLD_L0, GOLD_X, t=0.5)
    diff = max(
        abs(a - b) for a, b in zip(phi0.evaluate(0.3), phi1.evaluate(0.3))
    )
    assert diff > 1e-6

    rng = np.random.default_rng(401)
    for phi in (phi0, phi1):
        assert max(abs(c) for c in phi.evaluate(0.0)) < 1e-9
        assert (
            max(abs(a - b) for a, b in zip(phi.evaluate(GOLD_L0), GOLD_X))
            < 1e-9
        )
        for _ in range(2000):
            lam = sample_disc(rng)
            assert closed_margin(phi.evaluate(lam)) >= -1e-9
    assert time.monotonic() - start < 5.0


def test_criterion_02_synthesis_thresholds():
    corner = np.array([[0.0, 1.0], [0.0, 0.0]], dtype=complex)
    zero = np.zeros((2, 2), dtype=complex)
    a2 = np.array([[0.5, 0.5], [-0.5, 0.5]], dtype=complex)  # pi = (.5,.5,.5)

    for l0, expect in [(2 / 3 + 1e-3, True), (2 / 3 - 1e-3, False)]:
        got, _ = synth_two_point(SynthesisInstance(l0, corner, a2))
        assert got == expect
    r = 1.0 / math.sqrt(2.0)
    for l0, expect in [(r + 1e-3, True), (r - 1e-3, False)]:
        got, _ = synth_two_point(SynthesisInstance(l0, zero, a2))
        assert got == expect
    assert abs(float(d_of((0.5, 0.5, 0.5))) - 2 / 3) <= 1e-12


def test_criterion_03_criteria_agreement():
    start = time.monotonic()
    rng = np.random.default_rng(403)

    def rand_box():
        return tuple(
            rng.uniform(-1.2, 1.2) + 1j * rng.uniform(-1.2, 1.2)
            for _ in range(3)
        )

    filtered = []
    while len(filtered) < 10_000:
        x = rand_box()
        rep = membership(x)
        if abs(rep.m3) <= 1e-3:
            continue
        filtered.append((x, rep))
        assert len(set(rep.verdicts())) == 1, (x, rep.verdicts())

    for x, rep in filtered[:500]:
        assert membership_grid_oracle(x, n=200) == rep.in_set, x
    assert time.monotonic() - start < 60.0


def test_criterion_04_real_slice():
    rng = np.random.default_rng(404)
    for _ in range(10_000):
        x = tuple(rng.uniform(-1.5, 1.5, 3))
        assert real_slice_member(x) == membership(x).in_set, x

    for v in [(1, 1, 1), (1, -1, -1), (-1, 1, -1), (-1, -1, 1)]:
        rep = membership(v, closed=True)
        assert rep.in_set, v
        margins = (rep.m3, rep.m3p, rep.m4, rep.m4p, rep.m5, rep.m6)
        assert min(abs(m) for m in margins) <= 1e-12, v

    mid = ((1 - 1j) / 2, (1 + 1j) / 2, 0.0)
    assert not membership(mid, closed=True).in_set


def test_criterion_05_interpolation_properties():
    rng = np.random.default_rng(405)
    I2 = np.eye(2)
    for k in range(500):
        l0, x = random_feasible_instance(rng, slack=0.9)
        phi = solve_schwarz(l0, x)
        assert max(abs(c) for c in phi.evaluate(0.0)) < 1e-9
        assert max(abs(a - b) for a, b in zip(phi.evaluate(l0), x)) < 1e-9
        assert verify_interpolant(phi, samples=500, seed=k, tol=1e-9).passed
        for _ in range(50):
            lam = sample_disc(rng)
            assert mu_diag(phi.lift_evaluate(lam)) <= 1.0 + 1e-8

        # the two transcription identities on the pivot matrix
        a, b, p = x
        if abs(a) < abs(b):
            a, b = b, a
        Z = SchwarzWorkspace.build(l0, (a, b, p)).Z
        rho = abs(l0)
        M = big_m(Z, rho)
        alpha = np.array(
            [
                rng.standard_normal() + 1j * rng.standard_normal(),
                rng.standard_normal() + 1j * rng.standard_normal(),
            ]
        )
        u, v = uv_vectors(Z, alpha)
        quad = (
            np.vdot(v, v).real
            - rho * rho * np.vdot(u, u).real
            - np.vdot(alpha, M @ alpha).real
        )
        assert abs(quad) <= 1e-9

        par = all_solutions_params(l0, (a, b, p))
        r = abs(a * b - p)
        y = 2.0 * r  # the sigma = 1 member of the family
        detfac = np.linalg.det(I2 - Z.conj().T @ Z).real
        det_lhs = np.linalg.det(M).real * detfac * detfac
        det_rhs = -(y - r * par.Y1) * (y - r * par.Y2)
        assert abs(det_lhs - det_rhs) <= 1e-9


def test_criterion_06_solution_family():
    rng = np.random.default_rng(406)
    n = 0
    while n < 200:
        l0, x = random_feasible_instance(rng, slack=0.9)
        a, b, p = x
        if abs(a) < abs(b):
            a, b = b, a
        par = all_solutions_params(l0, (a, b, p))
        n += 1
        assert abs(par.xi1 * par.xi2 - 1.0) <= 1e-10
        assert par.K > 1.0
        assert par.Y2 > 2.0
        assert par.K + 1.0 / par.K > par.Y2
        assert par.Y1 >= par.Y2 - 1e-12

        w = principal_sqrt((a * b - p) / l0)
        for s2 in np.linspace(par.xi1, par.xi2, 22)[1:-1]:
            sig = math.sqrt(s2)
            Zs = mat2(a / l0, sig * w, w / sig, b)
            assert op_norm(Zs) < 1.0, (l0, x, s2)
        sig_out = math.sqrt(par.xi2 * 1.01)
        Zout = mat2(a / l0, sig_out * w, w / sig_out, b)
        assert op_norm(Zout) >= 1.0


def test_criterion_07_automorphism_laws():
    rng = np.random.default_rng(407)
    tol = 1e-11

    def rand_aut():
        return DiscAut(
            np.exp(2j * np.pi * rng.uniform()),
            0.9 * math.sqrt(rng.uniform()) * np.exp(2j * np.pi * rng.uniform()),
        )

    def close(u, v):
        return max(abs(a - b) for a, b in zip(u, v)) < tol

    e = (0.0, 0.0, -1.0)
    for _ in range(1000):
        v1, v2 = rand_aut(), rand_aut()
        x, y, z = tau(rand_aut()), tau(rand_aut()), tau(rand_aut())
        w = random_point_in_e(rng)
        assert close(diamond(diamond(x, y), z), diamond(x, diamond(y, z)))
        assert close(tau(v1.compose(v2)), diamond(tau(v1), tau(v2)))
        assert close(diamond(e, x), x) and close(diamond(x, e), x)
        assert close(
            act_right(act_left(v1, w), v2), act_left(v1, act_right(w, v2))
        )
        assert close(flip(diamond(x, y)), diamond(flip(y), flip(x)))
        assert close(flip(act_left(v1, w)), act_right(flip(w), upsilon_star(v1)))
        a, b = 0.9 * sample_disc(rng), 0.9 * sample_disc(rng)
        v, chi = normalize_triangular((a, b, a * b))
        assert close(act_right(act_left(v, (a, b, a * b)), chi), (0, 0, 0))


def test_criterion_08_schwarz_pick():
    rng = np.random.default_rng(408)
    for _ in range(1000):
        a, b = 0.85 * sample_disc(rng), 0.85 * sample_disc(rng)
        xt = (a, b, a * b)
        y = random_point_in_e(rng)
        l1, l2 = 0.2 * sample_disc(rng), 0.4 + 0.5 * rng.uniform()
        res = schwarz_pick_triangular(l1, l2, xt, y)
        v, chi = normalize_triangular(xt)
        moved = act_right(act_left(v, y), chi)
        assert abs(res.lhs - criterion_max(moved)) <= 1e-9
        res0 = schwarz_pick_triangular(l1, l2, (0.0, 0.0, 0.0), y)
        assert abs(res0.lhs - criterion_max(y)) <= 1e-12


def test_criterion_09_boundary_suite():
    rng = np.random.default_rng(409)
    for _ in range(1000):
        assert in_distinguished_boundary(pi_map(random_unitary(rng)))

    for seed in range(10):
        local = np.random.default_rng(1000 + seed)
        x0 = pi_map(random_unitary(local))
        g = peak_function(x0)
        assert abs(abs(g(x0)) - 1.0) <= 1e-12
        for _ in range(1000):
            assert abs(g(random_point_in_ebar(local))) <= 1.0 + 1e-10

    for k in range(100):
        local = np.random.default_rng(2000 + k)
        x = random_exterior_point(local)
        f, cert = separating_polynomial(x)
        assert abs(f(x)) > 1.0, (x, cert)
        sup = max(abs(f(random_point_in_ebar(local))) for _ in range(200))
        assert sup <= 1.0 + 1e-6, (x, cert, sup)


def test_criterion_10_mu_suite():
    rng = np.random.default_rng(410)
    for _ in range(1000):
        A = random_contraction(rng, lo=0.1, hi=2.0)
        assert abs(mu_diag(A) - mu_scaling_oracle(A)) <= 1e-6

    gold = 0.5 * np.array([[1.0, 1j], [1j, 1.0]])
    assert abs(mu_diag(gold) - 1.0 / math.sqrt(2.0)) <= 1e-8

    for _ in range(100):
        assert abs(mu_diag(random_unitary(rng)) - 1.0) <= 1e-8

    checked = 0
    while checked < 300:
        A = random_contraction(rng, lo=0.3, hi=1.4)
        rep = membership(pi_map(A))
        if abs(rep.m3) < 1e-3 or abs(rep.m3p) < 1e-3:
            continue
        checked += 1
        assert (mu_diag(A) < 1.0) == rep.in_set


def test_criterion_11_bft_crosscheck():
    start = time.monotonic()
    rng = np.random.default_rng(411)
    for _ in range(100):
        A = random_contraction(rng, lo=0.2, hi=1.3)
        lam = 0.6 * sample_disc(rng)
        assert abs(bft_lower_bound([lam], [A]) - mu_diag(A)) <= 1e-4

    l0 = 2 / 3 + 1e-3
    corner = np.array([[0.0, 1.0], [0.0, 0.0]], dtype=complex)
    a2 = np.array([[0.5, 0.5], [-0.5, 0.5]], dtype=complex)
    assert bft_lower_bound([0.0, l0], [corner, a2]) <= 1.05
    assert time.monotonic() - start < 120.0
