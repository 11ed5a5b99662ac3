import cmath
import math

import numpy as np
import pytest

from tetra.errors import (
    BadBeta,
    InsideClosure,
    NotPeak,
    NotReal,
    OnTorus,
    Outside,
    OutsideDisc,
    PoleAtZ,
)
from tetra.linalg import op_norm, pi_map
from tetra.tetrablock import (
    DValue,
    GeodesicDisc,
    beta_params,
    construct_matrix_rep,
    criterion_max,
    d_of,
    geodesic_eval,
    in_distinguished_boundary,
    is_triangular,
    membership,
    membership_grid_oracle,
    peak_function,
    psi,
    real_slice_member,
    separating_polynomial,
    upsilon_fn,
)

from conftest import (
    random_contraction,
    random_exterior_point,
    random_point_in_e,
    random_point_in_ebar,
    random_unitary,
)

VERTICES = [(1, 1, 1), (1, -1, -1), (-1, 1, -1), (-1, -1, 1)]


# --- D and the linear fractional maps ------------------------------------

def test_d_known_values():
    assert float(d_of((0.5, 0.25, 0.5))) == pytest.approx(0.8, abs=1e-14)
    assert float(d_of((0.5, 0.5, 0.5))) == pytest.approx(2 / 3, abs=1e-14)
    # triangular branch: D = |x1|
    assert float(d_of((0.3, 0.2, 0.06))) == pytest.approx(0.3, abs=1e-14)
    # |x2| >= 1 and not triangular: infinite
    dv = d_of((0.5, 1.0, 0.1))
    assert not dv.finite and math.isinf(float(dv))
    assert isinstance(dv, DValue)


def test_d_is_sup_of_psi_on_circle(rng):
    # D(x) is the sup of |Psi(z, x)| over the closed disc, attained on |z| = 1
    for _ in range(50):
        x = random_point_in_e(rng)
        dv = float(d_of(x))
        sup = max(
            abs(psi(cmath.exp(2j * math.pi * k / 720), x)) for k in range(720)
        )
        assert sup <= dv + 1e-9
        assert sup == pytest.approx(dv, abs=1e-3)


def test_psi_upsilon_swap_and_pole():
    x = (0.5, 0.25, 0.5)
    z = 0.3 + 0.1j
    assert upsilon_fn(z, x) == pytest.approx(psi(z, (0.25, 0.5, 0.5)), abs=1e-14)
    with pytest.raises(PoleAtZ):
        psi(1 / 0.25, x)
    # triangular x: Psi is the constant x1
    assert psi(0.7j, (0.3, 0.2, 0.06)) == pytest.approx(0.3, abs=1e-14)


def test_criterion_max_flip_symmetric(rng):
    for _ in range(100):
        x = random_point_in_e(rng)
        flipped = (x[1], x[0], x[2])
        assert criterion_max(x) == pytest.approx(criterion_max(flipped), abs=1e-12)


# --- membership ----------------------------------------------------------

def test_membership_inside_point():
    rep = membership((0.5, 0.25, 0.5))
    assert rep.in_set and not rep.triangular
    assert set(rep.verdicts()) == {True}
    assert rep.m3 == pytest.approx(0.1875, abs=1e-14)


def test_membership_outside_point():
    rep = membership((2.0, 0.0, 0.0))
    assert not rep.in_set
    assert set(rep.verdicts()) == {False}


def test_membership_criteria_agree_on_random_points(rng):
    # every criterion gives the same verdict away from the boundary
    checked = 0
    for _ in range(2000):
        x = tuple(
            rng.uniform(-1.2, 1.2) + 1j * rng.uniform(-1.2, 1.2) for _ in range(3)
        )
        rep = membership(x)
        if abs(rep.m3) <= 1e-3:
            continue
        checked += 1
        assert len(set(rep.verdicts())) == 1, (x, rep.verdicts())
    assert checked > 1500


def test_membership_closed_contains_open(rng):
    for _ in range(500):
        x = tuple(
            rng.uniform(-1.2, 1.2) + 1j * rng.uniform(-1.2, 1.2) for _ in range(3)
        )
        if membership(x).in_set:
            assert membership(x, closed=True).in_set


def test_membership_grid_oracle_agrees(rng):
    for _ in range(200):
        x = tuple(
            rng.uniform(-1.2, 1.2) + 1j * rng.uniform(-1.2, 1.2) for _ in range(3)
        )
        rep = membership(x)
        if abs(rep.m3) <= 1e-3:
            continue
        assert membership_grid_oracle(x, n=120) == rep.in_set, x


def test_membership_vertices_on_closed_boundary():
    for v in VERTICES:
        rep = membership(v, closed=True)
        assert rep.in_set, v
        margins = (rep.m3, rep.m3p, rep.m4, rep.m4p, rep.m5, rep.m6)
        assert min(abs(m) for m in margins) <= 1e-12, v
        assert not membership(v).in_set  # boundary, not interior


def test_membership_complex_midpoint_outside():
    mid = ((1 - 1j) / 2, (1 + 1j) / 2, 0.0)
    rep = membership(mid, closed=True)
    assert not rep.in_set
    assert rep.m3 == pytest.approx(-math.sqrt(2) / 2, abs=1e-12)


def test_membership_pi_image_of_contractions(rng):
    # strict contractions map into E, expansions with sigma_min > 1 map out
    for _ in range(300):
        A = random_contraction(rng, hi=0.98)
        assert membership(pi_map(A)).in_set
    for _ in range(100):
        A = random_contraction(rng)
        A *= 1.7 / min(np.linalg.svd(A, compute_uv=False))
        assert not membership(pi_map(A), closed=True).in_set


def test_triangular_detection():
    assert is_triangular((0.3, 0.2, 0.06))
    assert not is_triangular((0.3, 0.2, 0.07))
    assert membership((0.3, 0.2, 0.06)).triangular


# --- analytic discs ------------------------------------------------------

def test_beta_params_golden():
    b1, b2 = beta_params((0.5, 0.25, 0.5))
    assert b1 == pytest.approx(0.5, abs=1e-14)
    assert b2 == pytest.approx(0.0, abs=1e-14)


def test_beta_params_reconstruct(rng):
    for _ in range(200):
        x = random_point_in_e(rng)
        b1, b2 = beta_params(x)
        assert b1 + b2.conjugate() * x[2] == pytest.approx(x[0], abs=1e-12)
        assert b2 + b1.conjugate() * x[2] == pytest.approx(x[1], abs=1e-12)
    with pytest.raises(OnTorus):
        beta_params((0.5, 0.5, 1.0))


def test_geodesic_disc_passes_through_point(rng):
    for _ in range(100):
        x = random_point_in_e(rng)
        b1, b2 = beta_params(x)
        if abs(b1) + abs(b2) >= 1.0:
            continue
        disc = GeodesicDisc(b1, b2)
        assert geodesic_eval(disc, x[2]) == pytest.approx(x, abs=1e-12)
        # the disc stays inside E
        for k in range(16):
            lam = 0.93 * cmath.exp(2j * math.pi * k / 16)
            assert membership(geodesic_eval(disc, lam)).in_set


def test_geodesic_eval_guards():
    with pytest.raises(BadBeta):
        geodesic_eval(GeodesicDisc(0.7, 0.5), 0.1)
    with pytest.raises(OutsideDisc):
        geodesic_eval(GeodesicDisc(0.2, 0.1), 1.0)


# --- real slice ----------------------------------------------------------

def test_real_slice_is_open_tetrahedron():
    for v in VERTICES:
        assert not real_slice_member(v)  # vertices are on the boundary
        shrunk = tuple(0.999 * c for c in v[:2]) + (0.999 * 0.999 * v[2],)
        # shrinking toward 0 does not always stay inside; test the center
    assert real_slice_member((0.0, 0.0, 0.0))
    assert real_slice_member((0.2, -0.1, 0.05))
    assert not real_slice_member((1.01, 0.0, 0.0))


def test_real_slice_agrees_with_membership(rng):
    for _ in range(2000):
        x = tuple(rng.uniform(-1.5, 1.5, 3))
        assert real_slice_member(x) == membership(x).in_set, x
    with pytest.raises(NotReal):
        real_slice_member((0.1j, 0.0, 0.0))


def test_real_slice_barycentric_interior(rng):
    # random convex combinations of the four vertices with all weights
    # positive lie in the open tetrahedron
    V = np.array(VERTICES, dtype=float)
    for _ in range(300):
        w = rng.dirichlet(np.ones(4) * 2.0)
        if min(w) < 0.01:
            continue
        x = tuple(w @ V)
        assert real_slice_member(x), x
        assert membership(x).in_set


# --- distinguished boundary ----------------------------------------------

def test_distinguished_boundary_unitaries(rng):
    for _ in range(300):
        x = pi_map(random_unitary(rng))
        assert in_distinguished_boundary(x), x


def test_distinguished_boundary_rejects_interior_and_exterior(rng):
    assert not in_distinguished_boundary((0.5, 0.25, 0.5))
    assert not in_distinguished_boundary((0.0, 0.0, 0.0))
    assert not in_distinguished_boundary((2.0, 0.5, 1.0))
    # non-distinguished boundary point: norm one but not unitary image
    assert not in_distinguished_boundary((1.0, 0.0, 0.0))


def test_peak_function_peaks(rng):
    for seed in range(10):
        local = np.random.default_rng(seed)
        x0 = pi_map(random_unitary(local))
        g = peak_function(x0)
        assert abs(abs(g(x0)) - 1.0) <= 1e-12
        for _ in range(500):
            y = random_point_in_ebar(local)
            assert abs(g(y)) <= 1.0 + 1e-10


def test_peak_function_triangular_branch():
    # diagonal unitary: triangular boundary point, affine peak
    x0 = (1j, -1j, 1.0)
    g = peak_function(x0)
    assert abs(abs(g(x0)) - 1.0) <= 1e-12
    rng = np.random.default_rng(0)
    vals = [abs(g(random_point_in_ebar(rng))) for _ in range(800)]
    assert max(vals) <= 1.0 + 1e-10


def test_peak_function_rejects_off_boundary():
    with pytest.raises(NotPeak):
        peak_function((0.5, 0.25, 0.5))


# --- separation and representation ---------------------------------------

def test_separating_polynomial_coordinate_branch():
    x = (1.5, 0.2, 0.1)
    f, cert = separating_polynomial(x)
    assert cert["branch"] == "coordinate"
    assert abs(f(x)) > 1.0
    rng = np.random.default_rng(1)
    assert max(abs(f(random_point_in_ebar(rng))) for _ in range(500)) <= 1 + 1e-9


def test_separating_polynomial_series_branch(rng):
    found = 0
    for _ in range(200):
        x = random_exterior_point(rng)
        if max(abs(c) for c in x) > 1.0:
            continue  # that instance goes to the coordinate branch
        f, cert = separating_polynomial(x)
        assert cert["branch"] == "series"
        assert abs(f(x)) > 1.0, (x, cert)
        sup = max(abs(f(random_point_in_ebar(rng))) for _ in range(300))
        assert sup <= 1.0 + 1e-6, (x, cert, sup)
        found += 1
        if found >= 20:
            break
    assert found >= 5


def test_separating_polynomial_rejects_members():
    with pytest.raises(InsideClosure):
        separating_polynomial((0.5, 0.25, 0.5))


def test_construct_matrix_rep_golden():
    A = construct_matrix_rep((0.5, 0.25, 0.5), symmetric=True)
    w = 1j * math.sqrt(3 / 8)
    assert A[0, 0] == pytest.approx(0.5) and A[1, 1] == pytest.approx(0.25)
    assert A[0, 1] == pytest.approx(w, abs=1e-14)
    assert A[1, 0] == pytest.approx(w, abs=1e-14)
    assert op_norm(A) < 1.0
    # triangular point: diagonal representative
    D = construct_matrix_rep((0.3, 0.2, 0.06), symmetric=False)
    assert D[0, 1] == 0 and D[1, 0] == 0
    Z = construct_matrix_rep((0.0, 0.0, 0.0))
    assert np.allclose(Z, 0.0)


def test_construct_matrix_rep(rng):
    for _ in range(200):
        x = random_point_in_ebar(rng)
        for symmetric in (False, True):
            A = construct_matrix_rep(x, symmetric=symmetric)
            assert pi_map(A) == pytest.approx(x, abs=1e-10)
            assert op_norm(A) <= 1.0 + 1e-8
            if symmetric:
                assert A[0, 1] == pytest.approx(A[1, 0], abs=1e-12)
    with pytest.raises(Outside):
        construct_matrix_rep((2.0, 0.0, 0.0))


def test_membership_rejects_nonfinite():
    with pytest.raises(ValueError):
        membership((float("nan"), 0.0, 0.0))
