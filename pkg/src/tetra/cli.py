"""Command-line interface.

Every capability of the library is exposed as a subcommand emitting one
deterministic JSON document on standard output (complex numbers as
[re, im] arrays, keys sorted, no NaN/Infinity).  Exit codes: 0 success,
2 a well-formed negative verdict (not a member / infeasible / failed
verification), 1 input or usage error with a machine-readable error object
on standard error.
"""
from __future__ import annotations

import argparse
import json
import math
import os
import sys

import numpy as np

from . import __version__
from .autgroup import DiscAut, act_left, act_right, diamond, flip, normalize_triangular
from .errors import Infeasible, TetraError
from .interpolate import (
    Interpolant,
    schwarz_feasible,
    solve_schwarz,
    solve_with_sigma,
    verify_interpolant,
)
from .linalg import op_norm
from .metrics import dist_from_origin, dist_triangular_pair
from .musyn import SynthesisInstance, mu_diag, mu_scaling_oracle, synth_two_point
from .tetrablock import (
    in_distinguished_boundary,
    is_triangular,
    membership,
    membership_grid_oracle,
    peak_function,
)

DEFAULT_TOL = 1e-9


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    """argparse that raises instead of exiting, so run() owns exit codes."""

    def error(self, message):
        raise _UsageError(message)


def _c2l(z) -> list:
    z = complex(z)
    return [z.real, z.imag]


def _point2l(x) -> list:
    return [_c2l(c) for c in x]


def _mat2l(M) -> list:
    A = np.asarray(M, dtype=complex)
    return [[_c2l(A[i, j]) for j in (0, 1)] for i in (0, 1)]


def _vec2l(v) -> list:
    a = np.asarray(v, dtype=complex).reshape(2)
    return [_c2l(a[0]), _c2l(a[1])]


def _parse_complex(text: str) -> complex:
    v = json.loads(text)
    if isinstance(v, (int, float)):
        return complex(v)
    if isinstance(v, list) and len(v) == 2 and all(
        isinstance(c, (int, float)) for c in v
    ):
        return complex(v[0], v[1])
    raise ValueError(f"expected a number or [re, im] pair, got {text!r}")


def _as_complex_entry(v) -> complex:
    if isinstance(v, (int, float)):
        return complex(v)
    if isinstance(v, list) and len(v) == 2 and all(
        isinstance(c, (int, float)) for c in v
    ):
        return complex(v[0], v[1])
    raise ValueError(f"expected a number or [re, im] pair, got {v!r}")


def _parse_point(text: str) -> tuple:
    v = json.loads(text)
    if not isinstance(v, list) or len(v) != 3:
        raise ValueError(f"expected three complex coordinates, got {text!r}")
    return tuple(_as_complex_entry(c) for c in v)


def _parse_matrix(text: str) -> np.ndarray:
    v = json.loads(text)
    if not isinstance(v, list) or len(v) != 2 or any(
        not isinstance(row, list) or len(row) != 2 for row in v
    ):
        raise ValueError(f"expected a 2x2 matrix, got {text!r}")
    return np.array(
        [[_as_complex_entry(v[i][j]) for j in (0, 1)] for i in (0, 1)],
        dtype=complex,
    )


def _provenance(tol: float, seed=None) -> dict:
    return {
        "tool_version": __version__,
        "seed": seed,
        "tolerances": {"margin": tol},
    }


def _emit(obj: dict, stream=None) -> None:
    stream = stream or sys.stdout
    stream.write(json.dumps(obj, sort_keys=True, indent=2, allow_nan=False))
    stream.write("\n")


def _cmd_member(args, tol: float):
    x = _parse_point(args.point)
    rep = membership(x, closed=args.closed, tol=tol)
    out = {
        "command": "member",
        "point": _point2l(x),
        "closed": bool(args.closed),
        "report": {
            "in_set": rep.in_set,
            "criteria": {f"c{k}": getattr(rep, f"c{k}") for k in range(1, 10)},
            "margins": {
                "m3": rep.m3, "m3p": rep.m3p, "m4": rep.m4,
                "m4p": rep.m4p, "m5": rep.m5, "m6": rep.m6,
            },
            "triangular": rep.triangular,
            "d_value": {
                "finite": rep.d_value.finite,
                "value": rep.d_value.value if rep.d_value.finite else None,
            },
        },
        "provenance": _provenance(tol),
    }
    if args.oracle_grid:
        out["oracle"] = membership_grid_oracle(
            x, closed=args.closed, n=args.oracle_grid
        )
    return out, (0 if rep.in_set else 2)


def _cmd_dist(args, tol: float):
    x = _parse_point(getattr(args, "from"))
    if args.to is None:
        dist = dist_from_origin(x)
        to_l = None
    else:
        y = _parse_point(args.to)
        if max(abs(c) for c in y) == 0.0:
            dist = dist_from_origin(x)
        elif max(abs(c) for c in x) == 0.0:
            dist = dist_from_origin(y)
        else:
            dist = dist_triangular_pair(x, y)
        to_l = _point2l(y)
    out = {
        "command": "dist",
        "from": _point2l(x),
        "to": to_l,
        "distance": dist,
        "quotient": math.tanh(dist),
        "provenance": _provenance(tol),
    }
    return out, 0


def _cmd_interp(args, tol: float):
    l0 = _parse_complex(args.lambda0)
    x = _parse_point(args.point)
    seed = args.seed if args.seed is not None else 0
    feasible, margin = schwarz_feasible(l0, x)
    base = {
        "command": "interp",
        "feasible": feasible,
        "lambda0": _c2l(l0),
        "point": _point2l(x),
        "margin": margin,
        "provenance": _provenance(tol, seed),
    }
    if args.sigma is None and not feasible:
        return base, 2
    try:
        if args.sigma is not None:
            phi = solve_with_sigma(l0, x, args.sigma)
        else:
            t = _parse_complex(args.t) if args.t else 0.0
            phi = solve_schwarz(l0, x, t=t)
    except Infeasible:
        base["feasible"] = False
        return base, 2
    report = verify_interpolant(phi, samples=args.samples, seed=seed, tol=tol)
    base.update(
        {
            "feasible": True,
            "variant": phi.variant,
            "sigma": phi.sigma,
            "t": _c2l(phi.t),
            "flipped": phi.flipped,
            "Z": _mat2l(phi.Z) if phi.Z is not None else None,
            "u": _vec2l(phi.u) if phi.u is not None else None,
            "v": _vec2l(phi.v) if phi.v is not None else None,
            "interpolant": phi.to_payload(),
            "verification": report.to_dict(),
        }
    )
    return base, (0 if report.passed else 2)


def _cmd_mu(args, tol: float):
    A = _parse_matrix(args.matrix)
    out = {
        "command": "mu",
        "matrix": _mat2l(A),
        "mu": mu_diag(A, tol=min(tol, 1e-9)),
        "provenance": _provenance(tol),
    }
    if args.oracle:
        out["oracle"] = mu_scaling_oracle(A, tol=min(tol, 1e-9))
    return out, 0


def _cmd_synth(args, tol: float):
    l0 = _parse_complex(args.lambda0)
    A1 = _parse_matrix(args.a1)
    A2 = _parse_matrix(args.a2)
    zeta = _parse_complex(args.zeta) if args.zeta else None
    inst = SynthesisInstance(l0, A1, A2, zeta=zeta)
    feasible, lift = synth_two_point(inst)
    out = {
        "command": "synth",
        "feasible": feasible,
        "lambda0": _c2l(l0),
        "shape": inst.shape,
        "zeta": _c2l(inst.zeta),
        "a2": _mat2l(A2),
        "lift_at_zero": None,
        "lift_at_lambda0": None,
        "mu_audit": None,
        "provenance": _provenance(tol),
    }
    if feasible and lift is not None:
        out["lift_at_zero"] = _mat2l(lift(0.0))
        out["lift_at_lambda0"] = _mat2l(lift(l0))
        n_samples = 20
        worst = 0.0
        golden = (math.sqrt(5.0) - 1.0) / 2.0
        for k in range(n_samples):
            lam = (k + 1) / (n_samples + 1) * np.exp(2j * math.pi * golden * k)
            worst = max(worst, mu_diag(lift(lam)))
        out["mu_audit"] = {"max_mu": worst, "samples": n_samples}
    return out, (0 if feasible else 2)


def _cmd_boundary(args, tol: float):
    x = _parse_point(args.point)
    on_b = in_distinguished_boundary(x, tol=tol)
    out = {
        "command": "boundary",
        "point": _point2l(x),
        "on_boundary": on_b,
        "peak": None,
        "provenance": _provenance(tol, 0),
    }
    if on_b:
        g = peak_function(x, tol=tol)
        val = g(x)
        rng = np.random.default_rng(0)
        worst = 0.0
        n_samples = 200
        for _ in range(n_samples):
            G = rng.standard_normal((2, 2)) + 1j * rng.standard_normal((2, 2))
            r = rng.uniform(0.0, 1.0)
            A = G * (r / max(op_norm(G), 1e-12))
            y = (A[0, 0], A[1, 1], A[0, 0] * A[1, 1] - A[0, 1] * A[1, 0])
            worst = max(worst, abs(g(y)))
        out["peak"] = {
            "value_at_point": _c2l(val),
            "abs_at_point": abs(val),
            "max_abs_sampled": worst,
            "samples": n_samples,
        }
    return out, (0 if on_b else 2)


def _cmd_auto(args, tol: float):
    op = args.op
    if op == "diamond":
        if args.x is None or args.y is None:
            raise _UsageError("diamond needs --x and --y")
        res = diamond(_parse_point(args.x), _parse_point(args.y))
        result = {"point": _point2l(res)}
    elif op in ("left", "right"):
        if args.x is None or args.omega is None or args.alpha is None:
            raise _UsageError(f"{op} needs --x, --omega and --alpha")
        v = DiscAut(_parse_complex(args.omega), _parse_complex(args.alpha))
        x = _parse_point(args.x)
        res = act_left(v, x) if op == "left" else act_right(x, v)
        result = {"point": _point2l(res)}
    elif op == "flip":
        if args.x is None:
            raise _UsageError("flip needs --x")
        result = {"point": _point2l(flip(_parse_point(args.x)))}
    else:  # normalize
        if args.x is None:
            raise _UsageError("normalize needs --x")
        x = _parse_point(args.x)
        v, chi = normalize_triangular(x)
        image = act_right(act_left(v, x), chi)
        result = {
            "upsilon": {"omega": _c2l(v.omega), "alpha": _c2l(v.alpha)},
            "chi": {"omega": _c2l(chi.omega), "alpha": _c2l(chi.alpha)},
            "image": _point2l(image),
        }
    return {
        "command": "auto",
        "op": op,
        "result": result,
        "provenance": _provenance(tol),
    }, 0


def _cmd_verify(args, tol: float):
    with open(args.interpolant) as fh:
        payload = json.load(fh)
    if "interpolant" in payload:
        payload = payload["interpolant"]
    phi = Interpolant.from_payload(payload)
    report = verify_interpolant(phi, samples=args.samples, seed=args.seed, tol=tol)
    out = {
        "command": "verify",
        "passed": report.passed,
        "report": report.to_dict(),
        "provenance": _provenance(tol, args.seed),
    }
    return out, (0 if report.passed else 2)


def _build_parser() -> _Parser:
    p = _Parser(prog="tetra", description=__doc__)
    p.add_argument("--tol", type=float, default=None,
                   help="margin tolerance (default: TETRA_TOL or 1e-9)")
    sub = p.add_subparsers(dest="cmd", required=True)

    m = sub.add_parser("member", help="membership report for a point")
    m.add_argument("--point", required=True)
    m.add_argument("--closed", action="store_true")
    m.add_argument("--oracle-grid", type=int, default=None)

    d = sub.add_parser("dist", help="invariant distance")
    d.add_argument("--from", required=True)
    d.add_argument("--to", default=None)

    i = sub.add_parser("interp", help="two-point interpolation from the origin")
    i.add_argument("--lambda0", required=True)
    i.add_argument("--point", required=True)
    i.add_argument("--sigma", type=float, default=None)
    i.add_argument("--t", default=None)
    i.add_argument("--samples", type=int, default=200)
    i.add_argument("--seed", type=int, default=None)

    u = sub.add_parser("mu", help="structured singular value")
    u.add_argument("--matrix", required=True)
    u.add_argument("--oracle", action="store_true")

    s = sub.add_parser("synth", help="two-point mu-synthesis")
    s.add_argument("--lambda0", required=True)
    s.add_argument("--a1", required=True)
    s.add_argument("--a2", required=True)
    s.add_argument("--zeta", default=None)

    b = sub.add_parser("boundary", help="distinguished boundary and peak probe")
    b.add_argument("--point", required=True)

    a = sub.add_parser("auto", help="automorphism actions")
    a.add_argument("--op", required=True,
                   choices=["diamond", "left", "right", "flip", "normalize"])
    a.add_argument("--x", default=None)
    a.add_argument("--y", default=None)
    a.add_argument("--omega", default=None)
    a.add_argument("--alpha", default=None)

    v = sub.add_parser("verify", help="re-verify a stored interpolant")
    v.add_argument("--interpolant", required=True)
    v.add_argument("--samples", type=int, default=500)
    v.add_argument("--seed", type=int, default=0)
    return p


_HANDLERS = {
    "member": _cmd_member,
    "dist": _cmd_dist,
    "interp": _cmd_interp,
    "mu": _cmd_mu,
    "synth": _cmd_synth,
    "boundary": _cmd_boundary,
    "auto": _cmd_auto,
    "verify": _cmd_verify,
}


def run(argv=None) -> int:
    """Parse argv, execute one subcommand, print its JSON document."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        tol = args.tol
        if tol is None:
            tol = float(os.environ.get("TETRA_TOL", DEFAULT_TOL))
        out, code = _HANDLERS[args.cmd](args, tol)
    except (_UsageError, TetraError, ValueError, OSError) as exc:
        _emit({"error": {"type": exc.__class__.__name__, "message": str(exc)}},
              stream=sys.stderr)
        return 1
    _emit(out)
    return code


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
