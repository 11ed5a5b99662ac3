"""Shared generators for the test suite, plus the acceptance summary hook.

All random data is drawn from seeded numpy generators so failures are
reproducible; tests receive a fresh generator via the ``rng`` fixture or
construct their own with an explicit seed.
"""
from __future__ import annotations

import numpy as np
import pytest

from tetra.linalg import op_norm
from tetra.tetrablock import criterion_max, membership


@pytest.fixture
def rng():
    return np.random.default_rng(20260815)


def random_contraction(rng, lo=0.05, hi=0.97):
    """A 2x2 complex matrix with operator norm uniform-ish in (lo, hi)."""
    G = rng.standard_normal((2, 2)) + 1j * rng.standard_normal((2, 2))
    return G * (rng.uniform(lo, hi) / op_norm(G))


def random_point_in_e(rng, hi=0.95):
    """pi-image of a random strict contraction, rejected into the open set."""
    while True:
        A = random_contraction(rng, hi=hi)
        x = (A[0, 0], A[1, 1], A[0, 0] * A[1, 1] - A[0, 1] * A[1, 0])
        if membership(x).in_set:
            return x


def random_point_in_ebar(rng):
    """pi-image of a random contraction with norm up to 1 (closure samples)."""
    G = rng.standard_normal((2, 2)) + 1j * rng.standard_normal((2, 2))
    A = G * (rng.uniform(0.0, 1.0) / op_norm(G))
    return (A[0, 0], A[1, 1], A[0, 0] * A[1, 1] - A[0, 1] * A[1, 0])


def random_exterior_point(rng):
    """A point outside the closed tetrablock, by outward scaling."""
    while True:
        y = random_point_in_ebar(rng)
        s = rng.uniform(1.05, 2.2)
        cand = (s * y[0], s * y[1], s * s * y[2])
        if not membership(cand, closed=True).in_set:
            return cand


def random_unitary(rng):
    G = rng.standard_normal((2, 2)) + 1j * rng.standard_normal((2, 2))
    Q, R = np.linalg.qr(G)
    d = np.diag(R)
    return Q * (d / np.abs(d))


def random_disc(rng, r=0.95):
    """Uniform-area sample of the disc of radius r."""
    return r * np.sqrt(rng.uniform()) * np.exp(2j * np.pi * rng.uniform())


def random_feasible_instance(rng, slack=0.9):
    """(lambda0, x) with x interior and criterion_max(x) <= slack * |lambda0|."""
    while True:
        x = random_point_in_e(rng, hi=0.85)
        cm = criterion_max(x)
        if cm <= 1e-6 or cm > 0.85:
            continue
        mag = rng.uniform(cm / slack, 0.999)
        if mag >= 1.0:
            continue
        return mag * np.exp(2j * np.pi * rng.uniform()), x


# --- acceptance summary -------------------------------------------------

ACCEPTANCE_LINES = {
    "test_criterion_01_golden_reproduction":
        "golden two-point instance: margins, Z spectrum, scalar reduction, t-family",
    "test_criterion_02_synthesis_thresholds":
        "corner-shape synthesis feasibility thresholds 2/3 and 1/sqrt(2)",
    "test_criterion_03_criteria_agreement":
        "nine membership criteria agree on 10^4 points; grid oracle on 500",
    "test_criterion_04_real_slice":
        "real-slice tetrahedron, vertex margins, complex midpoint exclusion",
    "test_criterion_05_interpolation_properties":
        "500 solved instances: residuals, verification, mu audit, form identities",
    "test_criterion_06_solution_family":
        "one-parameter family invariants and the sigma admissibility window",
    "test_criterion_07_automorphism_laws":
        "diamond semigroup, tau homomorphism, flip anticommutation, normalization",
    "test_criterion_08_schwarz_pick":
        "triangular Schwarz-Pick two-term max vs normalization oracle",
    "test_criterion_09_boundary_suite":
        "distinguished boundary membership, peak functions, separating certificates",
    "test_criterion_10_mu_suite":
        "mu_diag vs scaling oracle, golden value, unitaries, membership equivalence",
    "test_criterion_11_bft_crosscheck":
        "commutant-lifting lower bound vs mu (n=1) and the two-point instance",
}


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    results = {}
    for outcome in ("passed", "failed", "error"):
        for rep in terminalreporter.stats.get(outcome, ()):
            nodeid = getattr(rep, "nodeid", "")
            if "test_acceptance.py::" not in nodeid:
                continue
            name = nodeid.split("::")[-1].split("[")[0]
            if name in ACCEPTANCE_LINES:
                ok = outcome == "passed" and results.get(name, True)
                results[name] = ok
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(ACCEPTANCE_LINES):
        if name not in results:
            continue
        num = int(name.split("_")[2])
        verdict = "PASS" if results[name] else "FAIL"
        terminalreporter.write_line(
            f"ACCEPTANCE {num}: {verdict} — {ACCEPTANCE_LINES[name]}"
        )
