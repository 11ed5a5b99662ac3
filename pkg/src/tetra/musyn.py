"""Structured singular value (diagonal perturbations) and 2-point synthesis.

For the two-element diagonal perturbation structure, mu of a 2x2 matrix A
depends only on pi(A) = (a11, a22, det A): mu(A) < 1 exactly when pi(A)
lies in the tetrablock.  That reduction turns the robust-stabilisation
style interpolation problems here into tetrablock geometry:

* ``mu_diag`` computes mu by bisection on the membership criterion, with
  ``mu_scaling_oracle`` (diagonal-scaling infimum of the operator norm) as
  an independent cross-check (exact for this 2-block structure),
* ``synth_two_point`` solves the two-point problem F(0) of a fixed
  one-corner shape, F(lambda0) = A2, mu(F) <= 1 pointwise,
* ``synth_two_point_general`` decides the two-interior-point problem when
  the first target is triangular,
* ``lift_to_sigma`` turns any tetrablock-valued analytic map into a
  normalised matrix-valued one,
* ``bft_lower_bound`` evaluates the commutant-style diagonal-scaling
  infimum on the Szego-kernel span as a further numerical oracle.
"""
from __future__ import annotations

import math

import numpy as np
from scipy.optimize import minimize

from .autgroup import schwarz_pick_triangular
from .errors import BadShape, Outside, TooManyPoints
from .interpolate import Interpolant, _check_lambda0, solve_schwarz
from .linalg import CMat2, as_cmat2, mat2, op_norm, pi_map
from .tetrablock import as_cpoint3, criterion_max, membership

_OFFDIAG_TOL = 1e-13


def mu_diag(A, tol: float = 1e-9) -> float:
    """Structured singular value of a 2x2 matrix for diagonal perturbations.

    mu(A) = 1 / inf{ ||X|| : X diagonal, 1 - AX singular }; equivalently
    the reciprocal of the largest r with (r a11, r a22, r^2 det A) still in
    the closed tetrablock, found by bisection (membership is monotone in r
    because the domain is starlike under this scaling).  Returns 0 when no
    diagonal perturbation of any size makes 1 - AX singular (e.g. strictly
    triangular nilpotent A).
    """
    M = as_cmat2(A)
    a, b, p = pi_map(M)

    def member(r: float) -> bool:
        return membership((r * a, r * b, r * r * p), closed=True).in_set

    lo, hi = 0.0, 1.0
    while member(hi):
        lo = hi
        hi *= 2.0
        if hi > 1e9:
            return 0.0
    while hi - lo > tol * max(1.0, lo):
        mid = 0.5 * (lo + hi)
        if member(mid):
            lo = mid
        else:
            hi = mid
    return 2.0 / (lo + hi)


def mu_scaling_oracle(A, tol: float = 1e-9) -> float:
    """Diagonal-scaling infimum inf_{d>0} ||diag(d,1) A diag(1/d,1)||.

    For the 2-block diagonal structure this equals mu (the scaling upper
    bound is tight), so it serves as an independent oracle for
    :func:`mu_diag`.  The norm is unimodal in log d — its squared value is
    an increasing function of |a12|^2 d^2 + |a21|^2 / d^2 with the other
    invariants fixed — so a coarse grid plus golden-section search on
    log d in [-12, 12] finds the infimum reliably.
    """
    M = as_cmat2(A)

    def f(s: float) -> float:
        d = math.exp(s)
        return op_norm(mat2(M[0, 0], M[0, 1] * d, M[1, 0] / d, M[1, 1]))

    grid = np.linspace(-12.0, 12.0, 121)
    vals = [f(s) for s in grid]
    k = int(np.argmin(vals))
    lo = grid[max(k - 1, 0)]
    hi = grid[min(k + 1, len(grid) - 1)]

    invphi = (math.sqrt(5.0) - 1.0) / 2.0
    c = hi - invphi * (hi - lo)
    d = lo + invphi * (hi - lo)
    fc, fd = f(c), f(d)
    while hi - lo > tol:
        if fc < fd:
            hi, d, fd = d, c, fc
            c = hi - invphi * (hi - lo)
            fc = f(c)
        else:
            lo, c, fc = c, d, fd
            d = lo + invphi * (hi - lo)
            fd = f(d)
    return min(fc, fd)


def _corner_shape(A1) -> tuple[str, complex]:
    """Classify A1 as 'upper'/'lower'/'zero' one-corner shape; returns the
    corner scalar zeta."""
    M = as_cmat2(A1)
    if max(abs(M[0, 0]), abs(M[1, 1])) > _OFFDIAG_TOL:
        raise BadShape("A1 must have zero diagonal")
    up, low = complex(M[0, 1]), complex(M[1, 0])
    if abs(up) > _OFFDIAG_TOL and abs(low) > _OFFDIAG_TOL:
        raise BadShape("A1 must have at most one nonzero corner")
    if abs(up) > _OFFDIAG_TOL:
        return "upper", up
    if abs(low) > _OFFDIAG_TOL:
        return "lower", low
    return "zero", 0.0 + 0.0j


class SynthesisInstance:
    """Two-point synthesis data: nodes 0 and lambda0, targets A1 (one-corner
    or zero shape, with corner scalar zeta) and A2 (non-diagonal)."""

    def __init__(self, lambda0, A1, A2, zeta=None):
        self.lambda0 = _check_lambda0(lambda0)
        self.A1 = as_cmat2(A1)
        self.A2 = as_cmat2(A2)
        self.shape, corner = _corner_shape(self.A1)
        if zeta is not None and abs(complex(zeta) - corner) > 1e-12 * (
            1.0 + abs(corner)
        ):
            raise BadShape(f"zeta = {zeta} does not match the corner of A1")
        self.zeta = corner
        if (
            abs(self.A2[0, 1]) <= _OFFDIAG_TOL
            and abs(self.A2[1, 0]) <= _OFFDIAG_TOL
        ):
            raise BadShape(
                "diagonal A2 targets need tangential (derivative) conditions, "
                "which are out of scope here"
            )


def _scaled_lift(A2: CMat2, l0: complex):
    def F(lam) -> CMat2:
        return (complex(lam) / l0) * A2

    return F


def _conjugated_lift(phi: Interpolant, delta: complex, transpose: bool):
    D = np.array([[delta, 0.0], [0.0, 1.0]])
    Dinv = np.array([[1.0 / delta, 0.0], [0.0, 1.0]])

    def F(lam) -> CMat2:
        G = D @ phi.lift_evaluate(lam) @ Dinv
        return G.T if transpose else G

    return F


def _triangular_corner_lift(A2: CMat2, l0: complex):
    a, b = A2[0, 0], A2[1, 1]

    def F(lam) -> CMat2:
        lamc = complex(lam)
        out = A2.copy()
        out[0, 0] = lamc * a / l0
        out[1, 1] = lamc * b / l0
        return out

    return F


def synth_two_point(inst: SynthesisInstance):
    """Two-point mu-synthesis at the origin: find analytic F with F(0) of
    the A1 one-corner shape (corner value free), F(lambda0) = A2 and
    mu(F(lambda)) <= 1 on the disc.

    Feasibility: for a nonzero corner, the two-quotient criterion
    max-quotient(pi(A2)) <= |lambda0|; for the zero shape, membership of
    (a/lambda0, b/lambda0, p/lambda0^2) in the closed tetrablock.  Returns
    (feasible, F) with F a matrix-valued evaluator, or (feasible, None)
    when infeasible.
    """
    l0 = inst.lambda0
    A2 = inst.A2
    x = pi_map(A2)
    if not membership(x).in_set:
        raise Outside("pi(A2) must lie in the open tetrablock")
    a, b, p = x
    c, d = complex(A2[0, 1]), complex(A2[1, 0])

    if inst.shape == "zero":
        scaled = (a / l0, b / l0, p / (l0 * l0))
        feasible = membership(scaled, closed=True).in_set
        if not feasible:
            return False, None
        return True, _scaled_lift(A2, l0)

    feasible = criterion_max(x) <= abs(l0) * (1.0 + 1e-10)
    if not feasible:
        return False, None

    upper = inst.shape == "upper"
    if abs(c) > _OFFDIAG_TOL and abs(d) > _OFFDIAG_TOL:
        phi = solve_schwarz(l0, x)
        w_at = phi.lift_evaluate(l0)[0, 1]
        if upper:
            return True, _conjugated_lift(phi, c / w_at, transpose=False)
        # transpose preserves pi and mu; the conjugation tunes the (1,0) entry
        return True, _conjugated_lift(phi, d / w_at, transpose=True)

    # triangular A2: one off-diagonal corner only
    a2_upper = abs(c) > _OFFDIAG_TOL
    if a2_upper == upper:
        # matching orientation: scale the diagonal, keep the corner constant
        return True, _triangular_corner_lift(A2, l0)
    # crossed orientation: the scaled line has F(0) = 0, a degenerate
    # instance of the required shape (the free corner entry is 0)
    return True, _scaled_lift(A2, l0)


def synth_two_point_general(lam1, lam2, A, B) -> bool:
    """Feasibility of the two-interior-point problem F(lam1) = A (triangular
    non-diagonal), F(lam2) = B (non-diagonal), mu(F) <= 1, via the explicit
    Schwarz-Pick criterion at the triangular base point pi(A)."""
    Am = as_cmat2(A)
    Bm = as_cmat2(B)
    up_a, low_a = abs(Am[0, 1]), abs(Am[1, 0])
    if up_a > _OFFDIAG_TOL and low_a > _OFFDIAG_TOL:
        raise BadShape("A must be triangular")
    if up_a <= _OFFDIAG_TOL and low_a <= _OFFDIAG_TOL:
        raise BadShape("A must not be diagonal")
    if abs(Bm[0, 1]) <= _OFFDIAG_TOL and abs(Bm[1, 0]) <= _OFFDIAG_TOL:
        raise BadShape("B must not be diagonal")
    return schwarz_pick_triangular(lam1, lam2, pi_map(Am), pi_map(Bm)).feasible


def lift_to_sigma(phi):
    """Matrix lift F = [[phi1, phi1 phi2 - phi3], [1, phi2]] of a
    tetrablock-valued map: pi(F) = phi identically, and mu(F) <= 1 wherever
    phi lies in the closed tetrablock."""
    evaluate = phi.evaluate if hasattr(phi, "evaluate") else phi

    def F(lam) -> CMat2:
        x1, x2, x3 = as_cpoint3(evaluate(lam))
        return mat2(x1, x1 * x2 - x3, 1.0, x2)

    return F


def _bft_norm(points, mats) -> float:
    """Norm of the compressed commutant operator with blocks mats[j] at the
    Szego-kernel span over points, via the Gram-weighted similarity."""
    n = len(points)
    S = np.empty((n, n), dtype=complex)
    for i in range(n):
        for j in range(n):
            S[i, j] = 1.0 / (1.0 - points[j].conjugate() * points[i])
    G = np.kron(S, np.eye(2))
    L = np.linalg.cholesky(G)
    B = np.zeros((2 * n, 2 * n), dtype=complex)
    for j, F in enumerate(mats):
        B[2 * j:2 * j + 2, 2 * j:2 * j + 2] = F.conj().T
    Lh = L.conj().T
    return float(np.linalg.norm(Lh @ B @ np.linalg.inv(Lh), 2))


def bft_lower_bound(points, targets, budget: int = 4000) -> float:
    """Diagonal-scaling infimum of the commutant-operator norm for one or
    two interpolation nodes: inf over D_j = diag(d_j, 1), d_j > 0, of the
    norm of the operator sending k_{lambda_j} (x) xi to itself with block
    (D_j F_j D_j^{-1})* on the j-th kernel slot.

    This is a numerical infimum (grid plus local refinement within
    ``budget`` norm evaluations): an upper bound on the true infimum, with
    no claim that the infimum is attained.  For a single node it reproduces
    mu_diag of the target.
    """
    pts = [complex(z) for z in points]
    mats = [as_cmat2(T) for T in targets]
    if len(pts) != len(mats):
        raise BadShape("points and targets must have equal length")
    n = len(pts)
    if n == 0 or n > 2:
        raise TooManyPoints("only 1 or 2 interpolation nodes are supported")
    for z in pts:
        if abs(z) >= 1.0:
            raise BadShape("nodes must lie in the open unit disc")
    if n == 2 and abs(pts[0] - pts[1]) < 1e-14:
        raise BadShape("nodes must be distinct")
    if all(float(np.max(np.abs(T))) == 0.0 for T in mats):
        return 0.0

    def scaled(T, s):
        dd = math.exp(s)
        return mat2(T[0, 0], T[0, 1] * dd, T[1, 0] / dd, T[1, 1])

    if n == 1:

        def f1(s: float) -> float:
            return _bft_norm(pts, [scaled(mats[0], s)])

        grid = np.linspace(-12.0, 12.0, 121)
        vals = [f1(s) for s in grid]
        k = int(np.argmin(vals))
        lo, hi = grid[max(k - 1, 0)], grid[min(k + 1, len(grid) - 1)]
        invphi = (math.sqrt(5.0) - 1.0) / 2.0
        c = hi - invphi * (hi - lo)
        d = lo + invphi * (hi - lo)
        fc, fd = f1(c), f1(d)
        evals = len(grid) + 2
        while hi - lo > 1e-10 and evals < budget:
            if fc < fd:
                hi, d, fd = d, c, fc
                c = hi - invphi * (hi - lo)
                fc = f1(c)
            else:
                lo, c, fc = c, d, fd
                d = lo + invphi * (hi - lo)
                fd = f1(d)
            evals += 1
        return min(fc, fd)

    def f2(s) -> float:
        return _bft_norm(pts, [scaled(mats[0], s[0]), scaled(mats[1], s[1])])

    grid = np.linspace(-6.0, 6.0, 41)
    best_val, best_s = math.inf, (0.0, 0.0)
    for s1 in grid:
        for s2 in grid:
            val = f2((s1, s2))
            if val < best_val:
                best_val, best_s = val, (s1, s2)
    remaining = max(budget - 41 * 41, 200)
    res = minimize(
        f2, np.array(best_s), method="Nelder-Mead",
        options={"maxfev": remaining, "xatol": 1e-8, "fatol": 1e-10},
    )
    return float(min(best_val, res.fun))
