"""Two-point matrix interpolation into the tetrablock (the Schwarz lemma).

Given lambda0 in the punctured disc and x in E, construct an analytic map
phi of the disc into E with phi(0) = (0,0,0) and phi(lambda0) = x, together
with a 2x2 Schur-class lift F (op_norm(F) <= 1 pointwise, pi(F) = phi,
F(0) = [[0, *], [0, 0]]).  Feasibility is decided by the closed-form
two-quotient criterion; the construction routes through:

* a scaled line for triangular targets,
* the matricial Moebius transport of a constant rank-one function for
  strictly interior non-triangular targets (the M(rho)/u/v machinery),
* an SVD reduction to a scalar two-point Nevanlinna-Pick problem in the
  extremal case (and for the non-uniqueness family),
* the one-parameter sigma family of interpolants sweeping all admissible
  off-diagonal scalings.

Interpolants are verifiable objects: sampled membership, lift norm and
endpoint residuals are recomputed from scratch by ``verify_interpolant``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import (
    BadLambda,
    Extremal,
    Infeasible,
    InfeasiblePick,
    NormTooLarge,
    NumericalDegenerate,
    OutsideDisc,
    PositiveDefinite,
    SigmaOutOfRange,
    Triangular,
    Unsupported,
    ZeroAlpha,
)
from .linalg import (
    CMat2,
    CVec2,
    as_cmat2,
    inv2,
    mat2,
    op_norm,
    pi_map,
    principal_sqrt,
    sqrt_psd,
)
from .tetrablock import (
    CPoint3,
    as_cpoint3,
    criterion_max,
    is_triangular,
    membership,
)

_I2 = np.eye(2)
_FLIP = np.array([[0.0, 1.0], [1.0, 0.0]])

EXTREMAL_RTOL = 1e-10   # |max quotient - |lambda0|| below this is extremal
_B_ZERO = 1e-13         # |b| below this routes to the b = 0 line branch
_U_TINY = 1e-13         # ||u|| below this with b != 0 is an internal error


def _check_lambda0(lam0) -> complex:
    l0 = complex(lam0)
    if abs(l0) < 1e-15 or abs(l0) >= 1.0:
        raise BadLambda(f"lambda0 must satisfy 0 < |lambda0| < 1, got {l0}")
    return l0


def schwarz_feasible(lam0, x) -> tuple[bool, float]:
    """Decide solvability of the two-point problem 0 -> 0, lambda0 -> x.

    Feasible exactly when the two-quotient maximum is <= |lambda0|; the
    returned margin is |lambda0| minus that maximum (0 at the extremal
    boundary, negative when infeasible).
    """
    l0 = _check_lambda0(lam0)
    cm = criterion_max(as_cpoint3(x))
    margin = abs(l0) - cm
    return (margin >= 0.0, margin)


def big_m(Z, rho: float) -> CMat2:
    """The Hermitian pivot matrix M(rho) of the interpolation machinery.

    Entries (with Y = 1 - Z*Z and W = 1 - ZZ*):
    [1,1] = [(1 - rho^2 Z*Z) Y^{-1}]_11, [2,2] = [(ZZ* - rho^2) W^{-1}]_22,
    [1,2] = [(1-rho^2) Z* W^{-1}]_12, [2,1] = [(1-rho^2) W^{-1} Z]_21,
    then symmetrised.  A vector alpha with <M alpha, alpha> <= 0 certifies
    solvability of X* u(alpha) = v(alpha) with ||X|| <= rho; the identity
    ||v(alpha)||^2 - rho^2 ||u(alpha)||^2 = <M(rho) alpha, alpha> pins the
    index conventions and is enforced by the test suite.
    """
    Zm = as_cmat2(Z)
    rho = float(rho)
    if not 0.0 <= rho < 1.0:
        raise BadLambda(f"rho must lie in [0, 1), got {rho}")
    if op_norm(Zm) >= 1.0:
        raise NormTooLarge(f"op_norm(Z) = {op_norm(Zm):.6f} >= 1")
    Zs = Zm.conj().T
    inv_y = inv2(_I2 - Zs @ Zm)
    inv_w = inv2(_I2 - Zm @ Zs)
    r2 = rho * rho
    m11 = ((_I2 - r2 * (Zs @ Zm)) @ inv_y)[0, 0]
    m22 = ((Zm @ Zs - r2 * _I2) @ inv_w)[1, 1]
    m12 = ((1.0 - r2) * (Zs @ inv_w))[0, 1]
    m21 = ((1.0 - r2) * (inv_w @ Zm))[1, 0]
    M = mat2(m11, m12, m21, m22)
    return (M + M.conj().T) / 2.0


def uv_vectors(Z, alpha) -> tuple[CVec2, CVec2]:
    """The vector pair u(alpha) = (1-ZZ*)^{-1/2}(alpha1 Z e1 + alpha2 e2),
    v(alpha) = -(1-Z*Z)^{-1/2}(alpha1 e1 + alpha2 Z* e2)."""
    Zm = as_cmat2(Z)
    a = np.asarray(alpha, dtype=complex).reshape(2)
    if float(np.linalg.norm(a)) < 1e-15:
        raise ZeroAlpha("alpha must be nonzero")
    if op_norm(Zm) >= 1.0:
        raise NormTooLarge(f"op_norm(Z) = {op_norm(Zm):.6f} >= 1")
    Zs = Zm.conj().T
    u = inv2(sqrt_psd(_I2 - Zm @ Zs)) @ (a[0] * Zm[:, 0] + a[1] * _I2[:, 1])
    v = -inv2(sqrt_psd(_I2 - Zs @ Zm)) @ (a[0] * _I2[:, 0] + a[1] * Zs[:, 1])
    return u, v


def choose_alpha(M, tol: float = 1e-9) -> CVec2:
    """Unit eigenvector of a Hermitian M for its smallest eigenvalue, with
    the first nonzero component rotated to the positive real axis (a fixed
    phase so runs are reproducible).  Requires min eig <= tol."""
    Mm = as_cmat2(M)
    Mm = (Mm + Mm.conj().T) / 2.0
    evals, evecs = np.linalg.eigh(Mm)
    if evals[0] > tol:
        raise PositiveDefinite(
            f"min eigenvalue {evals[0]:.3e} > {tol:.1e}: no admissible alpha"
        )
    a = evecs[:, 0].astype(complex)
    for c in a:
        if abs(c) > 1e-12:
            a = a * (c.conjugate() / abs(c))
            break
    return a


@dataclass(frozen=True)
class SchwarzWorkspace:
    """Frozen bundle of the interpolation data at one (lambda0, x):
    the matrix Z (with optional off-diagonal scaling sigma), the pivot
    M(|lambda0|), the chosen alpha and the vectors u, v."""

    lambda0: complex
    x: CPoint3
    w: complex
    Z: CMat2
    M: CMat2
    alpha: CVec2
    u: CVec2
    v: CVec2

    @staticmethod
    def build(lam0, x, sigma: float = 1.0) -> "SchwarzWorkspace":
        l0 = _check_lambda0(lam0)
        a, b, p = as_cpoint3(x)
        w = principal_sqrt((a * b - p) / l0)
        Z = mat2(a / l0, sigma * w, w / sigma, b)
        if op_norm(Z) >= 1.0:
            raise NormTooLarge(
                f"op_norm(Z) = {op_norm(Z):.6f} >= 1: not strictly interior"
            )
        M = big_m(Z, abs(l0))
        alpha = choose_alpha(M)
        u, v = uv_vectors(Z, alpha)
        if float(np.linalg.norm(u)) < _U_TINY and abs(b) >= _B_ZERO:
            raise NumericalDegenerate("u(alpha) vanished with b != 0")
        return SchwarzWorkspace(l0, (a, b, p), w, Z, M, alpha, u, v)


def _blaschke0(l0: complex, lam: complex) -> complex:
    return (l0 - lam) / (1.0 - l0.conjugate() * lam)


def scalar_np2(lam1, v1, lam2, v2, t=0.0):
    """Scalar two-point Nevanlinna-Pick interpolant on the disc.

    Returns a Schur-class evaluator g with g(lam1) = v1, g(lam2) = v2,
    built by one Schur step; when the data are strictly sub-extremal the
    free Schur parameter t in the closed unit disc selects among the
    solutions (distinct t give distinct g), otherwise the solution is the
    unique Blaschke-type one and t is ignored.
    """
    l1, l2 = complex(lam1), complex(lam2)
    w1, w2 = complex(v1), complex(v2)
    tc = complex(t)
    if abs(l1) >= 1.0 or abs(l2) >= 1.0:
        raise BadLambda("interpolation nodes must lie in the open disc")
    if abs(l1 - l2) < 1e-15:
        raise BadLambda("interpolation nodes must be distinct")
    if abs(tc) > 1.0 + 1e-12:
        raise OutsideDisc(f"|t| = {abs(tc):.6f} > 1")
    if abs(w1) > 1.0 or abs(w2) > 1.0:
        raise InfeasiblePick("target values must lie in the closed disc")

    d_nodes = abs(l1 - l2) / abs(1.0 - l1.conjugate() * l2)
    d_vals = abs(w1 - w2) / abs(1.0 - w1.conjugate() * w2) if abs(w1) < 1.0 else (
        0.0 if abs(w1 - w2) < 1e-12 else math.inf
    )
    if d_vals > d_nodes + 1e-12 * (1.0 + d_nodes):
        raise InfeasiblePick(
            f"d(values) = {d_vals:.12f} exceeds d(nodes) = {d_nodes:.12f}"
        )
    if abs(w1) >= 1.0:
        # unimodular value forces the constant by the maximum principle
        def g_const(lam, _c=w1) -> complex:
            return _c

        return g_const

    b1_at_l2 = (l2 - l1) / (1.0 - l1.conjugate() * l2)
    h2 = ((w2 - w1) / (1.0 - w1.conjugate() * w2)) / b1_at_l2
    if abs(h2) >= 1.0 - 1e-13:
        h2 = h2 / abs(h2)

        def h_fun(lam, _h=h2) -> complex:
            return _h

    else:

        def h_fun(lam, _h=h2, _l2=l2, _t=tc) -> complex:
            b2 = (lam - _l2) / (1.0 - _l2.conjugate() * lam)
            return (_h + b2 * _t) / (1.0 + _h.conjugate() * b2 * _t)

    def g(lam, _l1=l1, _w1=w1, _h=h_fun) -> complex:
        lamc = complex(lam)
        b1 = (lamc - _l1) / (1.0 - _l1.conjugate() * lamc)
        hv = _h(lamc)
        return (_w1 + b1 * hv) / (1.0 + _w1.conjugate() * b1 * hv)

    return g


@dataclass
class Interpolant:
    """A constructed interpolant: phi = pi . F for a Schur-class lift F.

    ``evaluate(lam)`` returns phi(lam) in C^3 and ``lift_evaluate(lam)``
    the 2x2 matrix F(lam); variants are ``scaled_line`` (triangular or
    b = 0 targets), ``mobius_blaschke`` (strict interior), ``svd_reduced``
    (extremal boundary, carries the scalar interpolant g), and
    ``sigma_family`` (the one-parameter family).  ``flipped`` records the
    coordinate flip applied when |x1| < |x2| (the lift is transposed and
    conjugated by the permutation matrix on the way out).
    """

    variant: str
    lambda0: complex
    x: CPoint3
    Z: CMat2 | None = None
    u: CVec2 | None = None
    v: CVec2 | None = None
    sigma: float | None = None
    scalar_g: object | None = None
    t: complex = 0.0
    flipped: bool = False
    mode: str | None = None
    workspace: SchwarzWorkspace | None = field(default=None, repr=False)
    _isqrt_w: CMat2 | None = field(default=None, repr=False)
    _sqrt_y: CMat2 | None = field(default=None, repr=False)
    _Q0: CMat2 | None = field(default=None, repr=False)
    _U1: CMat2 | None = field(default=None, repr=False)
    _U2s: CMat2 | None = field(default=None, repr=False)
    _c: float | None = field(default=None, repr=False)
    _scalar_params: tuple | None = field(default=None, repr=False)

    def _lift_core(self, lam: complex) -> CMat2:
        if self.variant == "scaled_line":
            if self.mode == "diag":
                return lam * self.Z
            return self.Z @ np.array([[lam, 0.0], [0.0, 1.0]])
        if self.variant == "svd_reduced":
            g = self.scalar_g(lam)
            G = self._U1 @ np.array([[self._c, 0.0], [0.0, g]]) @ self._U2s
            return G @ np.array([[lam, 0.0], [0.0, 1.0]])
        # mobius_blaschke / sigma_family
        X = _blaschke0(self.lambda0, lam) * self._Q0
        Zm = self.workspace.Z
        G = self._isqrt_w @ (X + Zm) @ inv2(_I2 + Zm.conj().T @ X) @ self._sqrt_y
        return G @ np.array([[lam, 0.0], [0.0, 1.0]])

    def lift_evaluate(self, lam) -> CMat2:
        lamc = complex(lam)
        if abs(lamc) > 1.0 + 1e-12:
            raise OutsideDisc(f"|lambda| = {abs(lamc):.6f} > 1")
        F = self._lift_core(lamc)
        if self.flipped:
            F = _FLIP @ F.T @ _FLIP
        return F

    def evaluate(self, lam) -> CPoint3:
        return pi_map(self.lift_evaluate(lam))

    def to_payload(self) -> dict:
        def c2l(z):
            z = complex(z)
            return [z.real, z.imag]

        payload = {
            "variant": self.variant,
            "lambda0": c2l(self.lambda0),
            "x": [c2l(c) for c in self.x],
            "t": c2l(self.t),
            "flipped": self.flipped,
        }
        if self.sigma is not None:
            payload["sigma"] = float(self.sigma)
        if self.mode is not None:
            payload["mode"] = self.mode
        if self.Z is not None:
            payload["Z"] = [[c2l(self.Z[i, j]) for j in (0, 1)] for i in (0, 1)]
        if self._scalar_params is not None:
            l1, w1, l2, w2, tc = self._scalar_params
            payload["scalar"] = {
                "lambda1": c2l(l1), "value1": c2l(w1),
                "lambda2": c2l(l2), "value2": c2l(w2), "t": c2l(tc),
            }
        return payload

    @staticmethod
    def from_payload(payload: dict) -> "Interpolant":
        """Rebuild deterministically by re-solving from (lambda0, x) and the
        recorded variant parameters, then cross-check the stored Z."""
        l0 = complex(*payload["lambda0"])
        x = tuple(complex(*c) for c in payload["x"])
        t = complex(*payload.get("t", [0.0, 0.0]))
        variant = payload["variant"]
        if variant == "sigma_family":
            phi = solve_with_sigma(l0, x, payload["sigma"])
        else:
            phi = solve_schwarz(l0, x, t=t)
        if phi.variant != variant:
            raise NumericalDegenerate(
                f"payload says {variant!r} but re-solving gives {phi.variant!r}"
            )
        if "Z" in payload and phi.Z is not None:
            Zs = np.array(
                [[complex(*payload["Z"][i][j]) for j in (0, 1)] for i in (0, 1)]
            )
            if float(np.max(np.abs(Zs - phi.Z))) > 1e-9:
                raise NumericalDegenerate("stored Z disagrees with the re-solve")
        return phi


def _assemble_mobius(ws: SchwarzWorkspace) -> dict:
    """Precompute the constant factors of the Moebius-transported lift."""
    Zm = ws.Z
    Zs = Zm.conj().T
    nu2 = float(np.vdot(ws.u, ws.u).real)
    if nu2 < _U_TINY ** 2:
        raise NumericalDegenerate("u(alpha) vanished; rank-one transport undefined")
    Q0 = np.outer(ws.u, ws.v.conj()) / (ws.lambda0 * nu2)
    return {
        "workspace": ws,
        "Z": Zm,
        "u": ws.u,
        "v": ws.v,
        "_isqrt_w": inv2(sqrt_psd(_I2 - Zm @ Zs)),
        "_sqrt_y": sqrt_psd(_I2 - Zs @ Zm),
        "_Q0": Q0,
    }


def solve_schwarz(lam0, x, t=0.0) -> Interpolant:
    """Construct an interpolant phi with phi(0) = 0, phi(lambda0) = x.

    Branches: b = 0 and triangular targets get scaled-line solutions; a
    strictly interior non-triangular target gets the Moebius transport of
    the constant rank-one function; an extremal target (two-quotient max
    equal to |lambda0| within 1e-10 relative) is reduced by SVD to a scalar
    two-point problem, where the Schur parameter ``t`` selects among the
    solutions.  Targets with |x1| < |x2| are flipped, solved, and the lift
    flipped back.  Raises Infeasible when the criterion fails.
    """
    l0 = _check_lambda0(lam0)
    xp = as_cpoint3(x)
    cm = criterion_max(xp)
    margin = abs(l0) - cm
    if margin < -EXTREMAL_RTOL * abs(l0):
        raise Infeasible(
            f"two-quotient max {cm:.12f} exceeds |lambda0| = {abs(l0):.12f}"
        )

    a, b, p = xp
    flipped = abs(a) < abs(b)
    if flipped:
        a, b = b, a
    xs = (a, b, p)

    if abs(b) < _B_ZERO:
        w = principal_sqrt((a * b - p) / l0)
        Z = mat2(a / l0, w, w, 0.0)
        return Interpolant(
            variant="scaled_line", lambda0=l0, x=xp, Z=Z,
            t=complex(t), flipped=flipped, mode="line",
        )

    if is_triangular(xs):
        Z = mat2(a / l0, 0.0, 0.0, b / l0)
        return Interpolant(
            variant="scaled_line", lambda0=l0, x=xp, Z=Z,
            t=complex(t), flipped=flipped, mode="diag",
        )

    if abs(margin) <= EXTREMAL_RTOL * abs(l0):
        w = principal_sqrt((a * b - p) / l0)
        Z = mat2(a / l0, w, w, b)
        U, S, Vh = np.linalg.svd(Z)
        c = min(float(S[0]), 1.0)
        s = float(S[1])
        den = U[1, 1] * Vh[1, 1]
        num = c * U[1, 0] * Vh[0, 1]
        if abs(den) < 1e-13:
            if abs(num) < 1e-13:
                g0 = 0.0 + 0.0j
            else:
                raise NumericalDegenerate(
                    "SVD reduction denominator vanished with nonzero numerator"
                )
        else:
            g0 = -num / den
        scalar = scalar_np2(0.0, g0, l0, s, t)
        return Interpolant(
            variant="svd_reduced", lambda0=l0, x=xp, Z=Z,
            scalar_g=scalar, t=complex(t), flipped=flipped,
            _U1=U, _U2s=Vh, _c=c,
            _scalar_params=(0.0 + 0.0j, complex(g0), l0, complex(s), complex(t)),
        )

    ws = SchwarzWorkspace.build(l0, xs)
    parts = _assemble_mobius(ws)
    return Interpolant(
        variant="mobius_blaschke", lambda0=l0, x=xp,
        t=complex(t), flipped=flipped, **parts,
    )


@dataclass(frozen=True)
class AllSolutionsParams:
    """Scalars of the one-parameter solution family: Y1, Y2, K and the
    reciprocal root pair xi1 <= 1 <= xi2 of xi + 1/xi = Y2; sigma is
    admissible exactly when xi1 < sigma^2 < xi2."""

    Y1: float
    Y2: float
    K: float
    xi1: float
    xi2: float


def all_solutions_params(lam0, x) -> AllSolutionsParams:
    """Family parameters for a strictly interior non-triangular target with
    |b| <= |a|; Extremal (empty family) at the feasibility boundary."""
    l0 = _check_lambda0(lam0)
    a, b, p = as_cpoint3(x)
    if is_triangular((a, b, p)):
        raise Triangular("the sigma family requires ab != p")
    if abs(b) > abs(a):
        raise Unsupported(
            "family parameters assume |b| <= |a|; apply the coordinate flip"
        )
    cm = criterion_max((a, b, p))
    margin = abs(l0) - cm
    if margin < -EXTREMAL_RTOL * abs(l0):
        raise Infeasible(
            f"two-quotient max {cm:.12f} exceeds |lambda0| = {abs(l0):.12f}"
        )
    if margin <= EXTREMAL_RTOL * abs(l0):
        raise Extremal("at the feasibility boundary Y2 = 2 and the family is empty")
    r = abs(a * b - p)
    al = abs(l0)
    y1 = al * (1.0 - abs(a) ** 2 - abs(b / l0) ** 2 + abs(p / l0) ** 2) / r
    y2 = al * (1.0 - abs(a / l0) ** 2 - abs(b) ** 2 + abs(p / l0) ** 2) / r
    k = al * (1.0 - abs(b) ** 2) / r
    xi2 = (y2 + math.sqrt(max(y2 * y2 - 4.0, 0.0))) / 2.0
    return AllSolutionsParams(Y1=y1, Y2=y2, K=k, xi1=1.0 / xi2, xi2=xi2)


def solve_with_sigma(lam0, x, sigma) -> Interpolant:
    """Member of the one-parameter family with off-diagonal scaling sigma:
    Z(sigma) = [[a/lambda0, sigma w], [w/sigma, b]], lift F(lambda0) =
    [[a, sigma w], [lambda0 w / sigma, b]].  Requires xi1 < sigma^2 < xi2."""
    l0 = _check_lambda0(lam0)
    xp = as_cpoint3(x)
    sig = float(sigma)
    if not sig > 0.0:
        raise SigmaOutOfRange(f"sigma must be positive, got {sigma}")
    params = all_solutions_params(l0, xp)
    s2 = sig * sig
    if not params.xi1 < s2 < params.xi2:
        raise SigmaOutOfRange(
            f"sigma^2 = {s2:.12f} outside ({params.xi1:.12f}, {params.xi2:.12f})"
        )
    ws = SchwarzWorkspace.build(l0, xp, sigma=sig)
    parts = _assemble_mobius(ws)
    return Interpolant(
        variant="sigma_family", lambda0=l0, x=xp,
        sigma=sig, flipped=False, **parts,
    )


@dataclass(frozen=True)
class VerificationReport:
    """Recomputed-from-scratch audit of one interpolant: endpoint residuals,
    worst sampled membership-margin violation, worst lift-norm excess, the
    lift/value consistency gap and the F(0) zero-column residual."""

    passed: bool
    samples: int
    seed: int
    tol: float
    endpoint_zero: float
    endpoint_target: float
    margin_violation: float
    lift_norm_excess: float
    lift_consistency: float
    zero_column: float

    def to_dict(self) -> dict:
        return {
            "passed": self.passed,
            "samples": self.samples,
            "seed": self.seed,
            "tol": self.tol,
            "endpoint_zero": self.endpoint_zero,
            "endpoint_target": self.endpoint_target,
            "margin_violation": self.margin_violation,
            "lift_norm_excess": self.lift_norm_excess,
            "lift_consistency": self.lift_consistency,
            "zero_column": self.zero_column,
        }


def verify_interpolant(phi: Interpolant, samples: int = 500, seed: int = 0,
                       tol: float = 1e-9) -> VerificationReport:
    """Sample-based audit of an interpolant against its contract.

    Draws ``samples`` points of the disc (half uniform in area, half pushed
    toward the boundary), and checks closure membership of phi(lambda), the
    Schur bound on the lift, pi(lift) = phi, both endpoint values and the
    zero first column of the lift at 0.  Deterministic given (seed, samples).
    """
    rng = np.random.default_rng(seed)
    n = int(samples)
    angles = rng.uniform(0.0, 2.0 * math.pi, n)
    radii = np.empty(n)
    half = n // 2
    radii[:half] = np.sqrt(rng.uniform(0.0, 1.0, half))
    radii[half:] = 1.0 - 10.0 ** rng.uniform(-4.0, -1.0, n - half)
    lams = radii * np.exp(1j * angles)

    worst_margin = 0.0
    worst_norm = 0.0
    worst_consistency = 0.0
    for lam in lams:
        F = phi.lift_evaluate(lam)
        pt = phi.evaluate(lam)
        rep = membership(pt, closed=True, tol=tol)
        worst_margin = max(worst_margin, -min(rep.m3, rep.m3p))
        worst_norm = max(worst_norm, op_norm(F) - 1.0)
        diff = np.array(pi_map(F)) - np.array(pt)
        worst_consistency = max(worst_consistency, float(np.max(np.abs(diff))))
    worst_margin = max(worst_margin, 0.0)
    worst_norm = max(worst_norm, 0.0)

    p0 = phi.evaluate(0.0)
    endpoint_zero = max(abs(c) for c in p0)
    pt0 = phi.evaluate(phi.lambda0)
    endpoint_target = max(abs(c - d) for c, d in zip(pt0, phi.x))
    F0 = phi.lift_evaluate(0.0)
    zero_column = float(np.max(np.abs(F0[:, 0])))

    passed = (
        endpoint_zero <= tol
        and endpoint_target <= tol
        and worst_margin <= tol
        and worst_norm <= tol
        and worst_consistency <= tol
        and zero_column <= tol
    )
    return VerificationReport(
        passed=passed, samples=n, seed=int(seed), tol=float(tol),
        endpoint_zero=endpoint_zero, endpoint_target=endpoint_target,
        margin_violation=worst_margin, lift_norm_excess=worst_norm,
        lift_consistency=worst_consistency, zero_column=zero_column,
    )
