"""2x2 complex matrix kernel.

Everything downstream works with 2x2 complex matrices: Schur-class values,
matrix representatives of tetrablock points, and the matricial Moebius
transformation of the operator unit ball.  This module keeps all of that in
closed form — singular values from trace/determinant, the PSD square root of a
2x2 Hermitian matrix, and the Moebius map itself — so no general-purpose
eigensolver sits on the hot path.

A ``CMat2`` is simply a (2, 2) complex ``numpy`` array; ``CVec2`` a length-2
complex array.  Helpers below validate and coerce.
"""
from __future__ import annotations

import cmath
import math

import numpy as np

from .errors import BadShape, NormTooLarge, NotPSD

CMat2 = np.ndarray
CVec2 = np.ndarray

_I2 = np.eye(2)


def mat2(a11, a12, a21, a22) -> CMat2:
    """Build a 2x2 complex matrix from its entries."""
    return np.array([[a11, a12], [a21, a22]], dtype=complex)


def as_cmat2(A) -> CMat2:
    """Coerce to a finite 2x2 complex array, validating shape and finiteness."""
    M = np.asarray(A, dtype=complex)
    if M.shape != (2, 2):
        raise BadShape(f"expected a 2x2 matrix, got shape {M.shape}")
    if not np.all(np.isfinite(M)):
        raise BadShape("matrix entries must be finite")
    return M


def op_norm(A) -> float:
    """Largest singular value of a 2x2 matrix, in closed form.

    Uses s^2 = (t +/- sqrt(t^2 - 4d))/2 with t = trace(A*A) and
    d = |det A|^2; the radicand is clamped at zero to absorb rounding.
    """
    M = as_cmat2(A)
    t = float(np.sum(np.abs(M) ** 2))
    d = abs(M[0, 0] * M[1, 1] - M[0, 1] * M[1, 0]) ** 2
    rad = max(t * t - 4.0 * d, 0.0)
    return math.sqrt(max((t + math.sqrt(rad)) / 2.0, 0.0))


def smallest_singular_value(A) -> float:
    """Smallest singular value, same closed form as :func:`op_norm`."""
    M = as_cmat2(A)
    t = float(np.sum(np.abs(M) ** 2))
    d = abs(M[0, 0] * M[1, 1] - M[0, 1] * M[1, 0]) ** 2
    rad = max(t * t - 4.0 * d, 0.0)
    return math.sqrt(max((t - math.sqrt(rad)) / 2.0, 0.0))


def herm_part(P) -> CMat2:
    """Hermitian symmetrisation (P + P*)/2."""
    M = as_cmat2(P)
    return (M + M.conj().T) / 2.0


def sqrt_psd(P, tol: float = 1e-10) -> CMat2:
    """Hermitian square root of a PSD 2x2 matrix.

    Generic branch is the closed form
    ``sqrt(P) = (P + sqrt(det P) I) / sqrt(trace P + 2 sqrt(det P))``;
    when the denominator degenerates (P near zero) a spectral fallback is
    used.  Raises :class:`NotPSD` if the symmetrised input has an eigenvalue
    below ``-tol``.
    """
    H = herm_part(P)
    tr = H[0, 0].real + H[1, 1].real
    det = (H[0, 0] * H[1, 1] - H[0, 1] * H[1, 0]).real
    # eigenvalues of a 2x2 Hermitian matrix
    disc = math.sqrt(max((tr / 2.0) ** 2 - det, 0.0))
    lo = tr / 2.0 - disc
    if lo < -tol:
        raise NotPSD(f"matrix has eigenvalue {lo:.3e} < -{tol:.1e}")
    sdet = math.sqrt(max(det, 0.0))
    denom = tr + 2.0 * sdet
    if denom < 1e-14:
        # spectral fallback for matrices within rounding of zero
        w, V = np.linalg.eigh(H)
        w = np.clip(w, 0.0, None)
        return (V * np.sqrt(w)) @ V.conj().T
    S = (H + sdet * _I2) / math.sqrt(denom)
    return herm_part(S)


def inv2(A) -> CMat2:
    """Inverse of a 2x2 matrix via the adjugate formula."""
    M = as_cmat2(A)
    det = M[0, 0] * M[1, 1] - M[0, 1] * M[1, 0]
    if det == 0:
        raise BadShape("matrix is singular")
    return np.array(
        [[M[1, 1], -M[0, 1]], [-M[1, 0], M[0, 0]]], dtype=complex
    ) / det


def mobius_matricial(Z, X) -> CMat2:
    """Matricial Moebius transformation of the 2x2 operator unit ball.

    ``M_Z(X) = (1 - Z Z*)^{-1/2} (X - Z) (1 - Z* X)^{-1} (1 - Z* Z)^{1/2}``.
    Requires ``op_norm(Z) < 1``; maps the closed unit ball into itself and is
    inverted by ``M_{-Z}``.
    """
    Zm = as_cmat2(Z)
    Xm = as_cmat2(X)
    if op_norm(Zm) >= 1.0:
        raise NormTooLarge(f"op_norm(Z) = {op_norm(Zm):.6f} >= 1")
    left = inv2(sqrt_psd(_I2 - Zm @ Zm.conj().T))
    right = sqrt_psd(_I2 - Zm.conj().T @ Zm)
    return left @ (Xm - Zm) @ inv2(_I2 - Zm.conj().T @ Xm) @ right


def pi_map(A) -> tuple[complex, complex, complex]:
    """The coordinate map A -> (a11, a22, det A) onto C^3."""
    M = as_cmat2(A)
    return (
        complex(M[0, 0]),
        complex(M[1, 1]),
        complex(M[0, 0] * M[1, 1] - M[0, 1] * M[1, 0]),
    )


def eigvals_herm2(H) -> tuple[float, float]:
    """Eigenvalues (ascending) of a 2x2 Hermitian matrix, closed form."""
    M = herm_part(H)
    tr = M[0, 0].real + M[1, 1].real
    det = (M[0, 0] * M[1, 1] - M[0, 1] * M[1, 0]).real
    disc = math.sqrt(max((tr / 2.0) ** 2 - det, 0.0))
    return (tr / 2.0 - disc, tr / 2.0 + disc)


def principal_sqrt(z) -> complex:
    """Principal branch square root of a complex scalar."""
    return cmath.sqrt(complex(z))
