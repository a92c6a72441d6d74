"""Experiment runner: ``csie run <config.json>``, ``csie list``, ``csie validate <config.json>``.

A config is a JSON object ``{"experiment": name, "parameters": {...},
"output_path": "out.csv"}``.  Complex numbers may be given as ``[re, im]``,
as plain numbers, or as strings such as ``"10-0.5i"``.  Index ranges may be
lists or ``{"start": a, "stop": b, "step": s}`` with ``stop`` included.

Exit codes: 0 success, 2 invalid config, 3 numerical failure.
"""

import argparse
from concurrent.futures import ThreadPoolExecutor
import csv
from dataclasses import dataclass
from datetime import datetime, timezone
import json
import math
import os
from pathlib import Path
import sys

import numpy as np

from . import __version__
from .approx import (
    exp_rate,
    exp_tail_error,
    fit_rate_constants,
    hankel_error_curve,
    predicted_rates,
    alg_rate,
    quadrature_tail_errors,
)
from .assembly import (
    BASES,
    POTENTIALS,
    PotentialSpec,
    ScalingConfig,
    assemble_mass0,
    assemble_mass1,
    assemble_stiffness,
    change_basis,
    structure_report,
)
from .eig import (
    condition_number,
    filter_resonances,
    separated_problem,
    shift_invert_arnoldi,
)
from .errors import NumericalError
from .hankel import hprime_polynomial_roots
from .io import RESONANCE_COLUMNS, fmt, resonance_rows
from .laguerre import gauss_laguerre
from .pml import PmlConfig, assemble_pml

EXIT_OK, EXIT_CONFIG, EXIT_NUMERIC = 0, 2, 3


class ConfigError(ValueError):
    """Invalid configuration; ``field`` names the offending entry."""

    def __init__(self, field, message):
        super().__init__(f"{field}: {message}")
        self.field = field


class ExperimentFailure(RuntimeError):
    def __init__(self, params, cause):
        super().__init__(f"numerical failure at {params}: {cause}")
        self.params = params


# ---------------------------------------------------------------- parsing


def _complex(field, v):
    try:
        if isinstance(v, (list, tuple)) and len(v) == 2:
            return complex(float(v[0]), float(v[1]))
        if isinstance(v, str):
            return complex(v.replace(" ", "").replace("i", "j"))
        if isinstance(v, bool):
            raise TypeError
        return complex(v)
    except (TypeError, ValueError):
        raise ConfigError(field, f"expected a complex number, got {v!r}") from None


def _float(field, v):
    if isinstance(v, bool) or not isinstance(v, (int, float)):
        raise ConfigError(field, f"expected a real number, got {v!r}")
    return float(v)


def _int(field, v):
    if isinstance(v, bool) or not isinstance(v, int):
        raise ConfigError(field, f"expected an integer, got {v!r}")
    return v


def _int_range(field, v):
    if isinstance(v, dict):
        try:
            start, stop = int(v["start"]), int(v["stop"])
        except (KeyError, TypeError, ValueError):
            raise ConfigError(field, "range needs integer 'start' and 'stop'") from None
        step = int(v.get("step", 1))
        if step < 1:
            raise ConfigError(field, "range step must be positive")
        v = list(range(start, stop + 1, step))
    if not isinstance(v, list) or not v:
        raise ConfigError(field, "expected a nonempty list or range")
    out = [_int(field, x) for x in v]
    if any(b <= a for a, b in zip(out, out[1:])):
        raise ConfigError(field, "values must be strictly increasing")
    if out[0] < 0:
        raise ConfigError(field, "values must be nonnegative")
    return out


def _list(conv):
    def parse(field, v):
        if not isinstance(v, list) or not v:
            raise ConfigError(field, "expected a nonempty list")
        return [conv(field, x) for x in v]

    return parse


def _str(field, v):
    if not isinstance(v, str):
        raise ConfigError(field, f"expected a string, got {v!r}")
    return v


def _bool(field, v):
    if not isinstance(v, bool):
        raise ConfigError(field, f"expected true/false, got {v!r}")
    return v


@dataclass(frozen=True)
class Param:
    kind: str
    default: object
    doc: str


_PARSERS = {
    "complex": _complex,
    "float": _float,
    "int": _int,
    "str": _str,
    "bool": _bool,
    "range": _int_range,
    "complex list": _list(_complex),
    "float list": _list(_float),
    "int list": _list(_int),
}

_REQUIRED = object()

SCHEMAS = {
    "project_exp": {
        "b": Param("complex list", [3.0], "exponents b of exp(-b x), Re b > 0"),
        "N": Param("range", {"start": 0, "stop": 20}, "discretization orders"),
    },
    "hankel_error": {
        "nu": Param("int list", [0], "Hankel indices (0..12)"),
        "omega": Param("complex list", ["10-0.5i"], "frequencies"),
        "sigma": Param("complex list", ["0.3+0.3i"], "scaling parameters, Im > 0"),
        "R": Param("float list", [1.0], "interface radii"),
        "N": Param("range", {"start": 0, "stop": 80}, "discretization orders"),
    },
    "rates_overlay": {
        "nu": Param("int list", [0], "Hankel indices (0..12)"),
        "omega": Param("complex list", ["10-0.5i"], "frequencies"),
        "sigma": Param("complex list", ["0.3+0.3i"], "scaling parameters"),
        "R": Param("float list", [1.0], "interface radii"),
        "N": Param("range", {"start": 0, "stop": 80}, "discretization orders"),
        "exp_window": Param("int list", [10, 40], "N window [lo, hi] fitting the exponential constant"),
        "alg_window": Param("int list", [60, 80], "N window [lo, hi] fitting the super-algebraic constant"),
    },
    "condition_sweep": {
        "nu": Param("int list", [0], "spherical indices"),
        "omega": Param("complex", "10-0.5i", "frequency in s + nu(nu+1) m0 - omega^2 m1"),
        "sigma": Param("complex", "0.3+0.3i", "scaling parameter"),
        "R": Param("float", 1.0, "interface radius"),
        "dofs": Param("range", {"start": 10, "stop": 100, "step": 10}, "radial unknowns N+1"),
        "basis": Param("str", "difference", f"radial basis, one of {BASES}"),
    },
    "resonance_convergence": {
        "nu": Param("int", 3, "spherical index"),
        "sigma": Param("complex", "0.3+0.3i", "scaling parameter"),
        "R": Param("float", 1.0, "radius of the sound-hard sphere"),
        "N": Param("range", {"start": 5, "stop": 59, "step": 2}, "discretization orders (N+1 unknowns)"),
        "target": Param("complex", "2.90391653245-1.20186645975i", "resonance to track (snapped to the nearest h_nu' root)"),
        "seed": Param("int", 0, "Arnoldi start-vector seed"),
    },
    "pml_compare": {
        "nu": Param("int", 3, "spherical index"),
        "target": Param("complex", "2.90391653245-1.20186645975i", "resonance (snapped to the nearest h_nu' root); sigma = (1+i)/target"),
        "T": Param("float list", [5.0, 8.0], "PML truncation lengths"),
        "order": Param("int", 5, "element order"),
        "n_elems": Param("range", [1, 2, 4, 8, 16, 32], "element counts for h-refinement"),
        "N": Param("range", {"start": 4, "stop": 59, "step": 5}, "infinite-element orders"),
        "seed": Param("int", 0, "Arnoldi start-vector seed"),
    },
    "radial_potential_sweep": {
        "nu": Param("int list", [0, 1, 2, 3, 4, 5], "spherical indices"),
        "sigma": Param("complex", "0.1+0.5i", "scaling parameter"),
        "sigma_alt": Param("complex", "0.12+0.55i", "second scaling parameter for the stability filter"),
        "R": Param("float", 1.0, "interface radius"),
        "N": Param("int", 100, "discretization order"),
        "eps_tilde": Param("float list", [0.0, 0.5, 1.0, 1.5], "potential amplitudes, increasing"),
        "potential": Param("str", "bump", f"profile, one of {sorted(POTENTIALS)}"),
        "scale_argument": Param("bool", False, "evaluate the profile at sigma*xi instead of xi"),
        "ray_margin": Param("float", 0.35, "skip h_nu' roots within this angle (rad) of the rotated ray"),
        "seed": Param("int", 0, "Arnoldi start-vector seed"),
    },
    "matrix_structure": {
        "sigma": Param("complex", "0.3+0.3i", "scaling parameter"),
        "R": Param("float", 1.0, "interface radius"),
        "N": Param("range", [5, 10, 20, 40], "discretization orders"),
        "tol": Param("float", 1e-10, "magnitude threshold"),
        "basis": Param("str", "laguerre", f"radial basis, one of {BASES}"),
    },
}


def _sigma_ok(field, s):
    if not s.imag > 0:
        raise ConfigError(field, f"Im(sigma) must be positive, got {s}")


def _positive(field, x):
    if not x > 0:
        raise ConfigError(field, f"must be positive, got {x}")


def _check(name, p):
    for key in ("sigma", "sigma_alt"):
        if key in p:
            for s in p[key] if isinstance(p[key], list) else [p[key]]:
                _sigma_ok(f"parameters.{key}", s)
    for key in ("R", "T", "tol"):
        if key in p:
            for x in p[key] if isinstance(p[key], list) else [p[key]]:
                _positive(f"parameters.{key}", x)
    if name == "project_exp":
        for b in p["b"]:
            if not b.real > 0:
                raise ConfigError("parameters.b", f"Re(b) must be positive, got {b}")
    if name in ("hankel_error", "rates_overlay"):
        for nu in p["nu"]:
            if not 0 <= nu <= 12:
                raise ConfigError("parameters.nu", f"must lie in 0..12, got {nu}")
        for om in p["omega"]:
            for s in p["sigma"]:
                if not (s * om).imag > 0:
                    raise ConfigError(
                        "parameters.sigma",
                        f"Im(sigma*omega) = {(s * om).imag:.4g} <= 0 for sigma={s}, omega={om}: "
                        "the scaled Hankel function does not decay",
                    )
    if name == "rates_overlay":
        for key in ("exp_window", "alg_window"):
            w = p[key]
            if len(w) != 2 or w[0] > w[1]:
                raise ConfigError(f"parameters.{key}", "expected [lo, hi] with lo <= hi")
    if "basis" in p and p["basis"] not in BASES:
        raise ConfigError("parameters.basis", f"unknown basis {p['basis']!r}")
    if "potential" in p and p["potential"] not in POTENTIALS:
        raise ConfigError("parameters.potential", f"unknown potential {p['potential']!r}")
    if "nu" in p:
        for nu in p["nu"] if isinstance(p["nu"], list) else [p["nu"]]:
            if nu < 0:
                raise ConfigError("parameters.nu", "must be nonnegative")
    if "order" in p and p["order"] < 1:
        raise ConfigError("parameters.order", "must be >= 1")
    if "n_elems" in p and p["n_elems"][0] < 1:
        raise ConfigError("parameters.n_elems", "must be >= 1")
    if "eps_tilde" in p and any(b <= a for a, b in zip(p["eps_tilde"], p["eps_tilde"][1:])):
        raise ConfigError("parameters.eps_tilde", "values must be strictly increasing")
    if name == "radial_potential_sweep" and p["sigma_alt"] == p["sigma"]:
        raise ConfigError("parameters.sigma_alt", "must differ from sigma")


def parse_config(raw):
    """Validate a decoded JSON config; returns ``(name, params, output_path)``."""
    if not isinstance(raw, dict):
        raise ConfigError("<root>", "config must be a JSON object")
    name = raw.get("experiment")
    if name not in SCHEMAS:
        raise ConfigError("experiment", f"unknown experiment {name!r}; known: {sorted(SCHEMAS)}")
    out = raw.get("output_path")
    if not isinstance(out, str) or not out:
        raise ConfigError("output_path", "missing or not a string")
    given = raw.get("parameters", {})
    if not isinstance(given, dict):
        raise ConfigError("parameters", "must be an object")
    schema = SCHEMAS[name]
    unknown = set(given) - set(schema)
    if unknown:
        raise ConfigError(f"parameters.{sorted(unknown)[0]}", f"not a parameter of {name}")
    params = {}
    for key, spec in schema.items():
        params[key] = _PARSERS[spec.kind](f"parameters.{key}", given.get(key, spec.default))
    _check(name, params)
    return name, params, out


def load_config(path):
    try:
        raw = json.loads(Path(path).read_text())
    except FileNotFoundError:
        raise ConfigError("<file>", f"{path} not found") from None
    except json.JSONDecodeError as exc:
        raise ConfigError("<file>", f"invalid JSON: {exc}") from None
    return parse_config(raw)


# ------------------------------------------------------------ experiments


def _threads():
    try:
        return max(1, int(os.environ.get("CSIE_THREADS", "1")))
    except ValueError:
        return 1


def _map(fn, items):
    """Ordered map over a thread pool bounded by ``CSIE_THREADS``."""
    items = list(items)
    n = _threads()
    if n == 1 or len(items) < 2:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=n) as pool:
        return list(pool.map(fn, items))


def _guard(params, fn, *args):
    try:
        return fn(*args)
    except (NumericalError, np.linalg.LinAlgError, FloatingPointError) as exc:
        raise ExperimentFailure(params, exc) from exc


def _c(z):
    return [fmt(z.real), fmt(z.imag)]


def _snap(nu, target):
    roots = hprime_polynomial_roots(nu)
    return min(roots, key=lambda r: abs(r - target))


def run_project_exp(p, prov):
    header = ["b_re", "b_im", "N", "error_closed_form", "error_quadrature"]
    Ns = p["N"]

    def one(b):
        q = abs((b - 1) / (b + 1))
        # coefficients beyond n_max are below 1e-17 relative
        n_max = max(Ns[-1] + 50, int(math.ceil(-40 / math.log(q))) if q > 0 else 0)
        n_nodes = n_max + 64
        prov["quadrature"].append({"b": _c(b), "n_max": n_max, "n_nodes": n_nodes})
        rule = gauss_laguerre(n_nodes, 1.0 + b.real)
        quad = quadrature_tail_errors(lambda x: np.exp(-b * x), Ns, rule, n_max)
        return [[*_c(b), N, fmt(exp_tail_error(b, N)), fmt(e)] for N, e in zip(Ns, quad)]

    rows = _map(lambda b: _guard({"b": str(b)}, one, b), p["b"])
    return header, [r for block in rows for r in block]


def _hankel_tuples(p):
    return [(nu, om, s, R) for nu in p["nu"] for om in p["omega"] for s in p["sigma"] for R in p["R"]]


def run_hankel_error(p, prov):
    header = ["nu", "omega_re", "omega_im", "sigma_re", "sigma_im", "R", "N", "error",
              "exp_shape", "alg_shape"]
    Ns = p["N"]

    def one(t):
        nu, om, s, R = t
        errs = hankel_error_curve(nu, om, s, R, Ns)
        rows = []
        for N, e in zip(Ns, errs):
            pr = predicted_rates(nu, om, s, R, N)
            rows.append([nu, *_c(om), *_c(s), fmt(R), N, fmt(e), fmt(pr.exp_term), fmt(pr.alg_term)])
        return rows

    blocks = _map(lambda t: _guard(dict(zip(("nu", "omega", "sigma", "R"), map(str, t))), one, t),
                  _hankel_tuples(p))
    prov["quadrature"].append({"rule": "Gauss-Laguerre, 2*n_max+64 nodes, checked by doubling"})
    return header, [r for b in blocks for r in b]


def run_rates_overlay(p, prov):
    header = ["nu", "omega_re", "omega_im", "sigma_re", "sigma_im", "R", "N", "error",
              "exp_rate", "alg_rate", "c1", "c2", "predicted_exp", "predicted_alg", "predicted_total"]
    Ns = p["N"]

    def one(t):
        nu, om, s, R = t
        errs = hankel_error_curve(nu, om, s, R, Ns)
        c1, c2 = fit_rate_constants(Ns, errs, nu, om, s, R, p["exp_window"], p["alg_window"])
        rows = []
        for N, e in zip(Ns, errs):
            pr = predicted_rates(nu, om, s, R, N, c1, c2)
            rows.append([nu, *_c(om), *_c(s), fmt(R), N, fmt(e), fmt(exp_rate(om, s)),
                         fmt(alg_rate(R, s)), fmt(c1), fmt(c2), fmt(pr.exp_term),
                         fmt(pr.alg_term), fmt(pr.total)])
        return rows

    blocks = _map(lambda t: _guard(dict(zip(("nu", "omega", "sigma", "R"), map(str, t))), one, t),
                  _hankel_tuples(p))
    prov["quadrature"].append({"rule": "Gauss-Laguerre, 2*n_max+64 nodes, checked by doubling"})
    return header, [r for b in blocks for r in b]


def run_condition_sweep(p, prov):
    header = ["nu", "omega_re", "omega_im", "sigma_re", "sigma_im", "R", "basis", "dofs", "condition"]
    om, s, R, basis = p["omega"], p["sigma"], p["R"], p["basis"]
    cfg = ScalingConfig(s, R)

    def one(t):
        nu, n = t
        P = separated_problem(nu, n - 1, cfg, basis=basis)
        k = condition_number(P.S - om**2 * P.M)
        return [nu, *_c(om), *_c(s), fmt(R), basis, n, fmt(k)]

    tuples = [(nu, n) for nu in p["nu"] for n in p["dofs"] if n >= 1]
    prov["quadrature"].append({"rule": "exact Gauss-Laguerre, N+2 nodes"})
    return header, _map(lambda t: _guard({"nu": t[0], "dofs": t[1]}, one, t), tuples)


def run_resonance_convergence(p, prov):
    header = ["nu", "sigma_re", "sigma_im", "R", "N", "dofs", "omega_re", "omega_im",
              "exact_re", "exact_im", "error", "residual"]
    nu, s, R = p["nu"], p["sigma"], p["R"]
    exact = _snap(nu, p["target"] * R) / R
    cfg = ScalingConfig(s, R)

    def one(N):
        P = separated_problem(nu, N, cfg)
        rs = shift_invert_arnoldi(P.S, P.M, exact, n_wanted=1, seed=p["seed"])
        om = rs.pairs[0].omega
        return [nu, *_c(s), fmt(R), N, N + 1, *_c(om), *_c(exact), fmt(abs(om - exact)),
                fmt(rs.pairs[0].residual)]

    prov["quadrature"].append({"rule": "exact Gauss-Laguerre, N+2 nodes"})
    return header, _map(lambda N: _guard({"nu": nu, "N": N}, one, N), p["N"])


def run_pml_compare(p, prov):
    header = ["method", "nu", "sigma_re", "sigma_im", "T", "order", "n_elems", "dofs",
              "omega_re", "omega_im", "error"]
    nu = p["nu"]
    exact = _snap(nu, p["target"])
    s = (1 + 1j) / exact
    cfg = ScalingConfig(s, 1.0)

    def pml_row(t):
        T, ne = t
        S, M, _ = assemble_pml(PmlConfig(T, ne, p["order"], cfg), nu)
        rs = shift_invert_arnoldi(S, M, exact, n_wanted=1, seed=p["seed"])
        om = rs.pairs[0].omega
        return ["pml", nu, *_c(s), fmt(T), p["order"], ne, S.shape[0], *_c(om), fmt(abs(om - exact))]

    def ie_row(N):
        P = separated_problem(nu, N, cfg)
        rs = shift_invert_arnoldi(P.S, P.M, exact, n_wanted=1, seed=p["seed"])
        om = rs.pairs[0].omega
        return ["infinite_elements", nu, *_c(s), "inf", "", "", N + 1, *_c(om), fmt(abs(om - exact))]

    rows = _map(lambda t: _guard({"T": t[0], "n_elems": t[1]}, pml_row, t),
                [(T, ne) for T in p["T"] for ne in p["n_elems"]])
    rows += _map(lambda N: _guard({"N": N}, ie_row, N), p["N"])
    prov["quadrature"].append({"pml": f"Gauss-Legendre, {p['order'] + 2} points per element"})
    return header, rows


def run_radial_potential_sweep(p, prov):
    header = ["branch", "exact_re", "exact_im"] + list(RESONANCE_COLUMNS)
    s, s_alt, R, N = p["sigma"], p["sigma_alt"], p["R"], p["N"]
    ray = -np.angle(s)
    branches = [
        (nu, r / R)
        for nu in p["nu"]
        for r in hprime_polynomial_roots(nu)
        if r.real > 1e-8 and np.angle(r) > ray + p["ray_margin"]
    ]

    def solve_branch(t):
        nu, root = t
        rows, guess = [], root
        for eps in p["eps_tilde"]:
            pot = PotentialSpec.named(p["potential"], eps, p["scale_argument"])
            sets = []
            for sig in (s, s_alt):
                P = separated_problem(nu, N, ScalingConfig(sig, R), pot)
                rs = shift_invert_arnoldi(P.S, P.M, guess, n_wanted=1, seed=p["seed"])
                sets.append(rs.with_meta(P))
            classified = filter_resonances(sets[0], sets[1])
            guess = classified.pairs[0].omega
            for row in resonance_rows(classified):
                rows.append([f"{nu}:{root.real:.6f}{root.imag:+.6f}i", *_c(root), *row])
        return rows

    blocks = _map(lambda t: _guard({"nu": t[0], "root": str(t[1])}, solve_branch, t), branches)
    prov["quadrature"].append({"weighted_mass": f"Gauss-Laguerre, {2 * (2 * N + 64)} nodes after doubling check"})
    return header, [r for b in blocks for r in b]


def run_matrix_structure(p, prov):
    header = ["form", "basis", "N", "dim", "bandwidth", "nnz", "tol"]
    cfg = ScalingConfig(p["sigma"], p["R"])
    rows = []
    for N in p["N"]:
        for form, fn in (("mass0", assemble_mass0), ("mass1", assemble_mass1), ("stiffness", assemble_stiffness)):
            op = change_basis(fn(N, cfg), p["basis"])
            rep = structure_report(op, p["tol"])
            rows.append([form, p["basis"], N, op.dim, rep.bandwidth, rep.nnz, fmt(p["tol"])])
    prov["quadrature"].append({"rule": "exact Gauss-Laguerre, N+2 nodes"})
    return header, rows


EXPERIMENTS = {
    "project_exp": run_project_exp,
    "hankel_error": run_hankel_error,
    "rates_overlay": run_rates_overlay,
    "condition_sweep": run_condition_sweep,
    "resonance_convergence": run_resonance_convergence,
    "pml_compare": run_pml_compare,
    "radial_potential_sweep": run_radial_potential_sweep,
    "matrix_structure": run_matrix_structure,
}


def _jsonable(v):
    if isinstance(v, complex):
        return [v.real, v.imag]
    if isinstance(v, list):
        return [_jsonable(x) for x in v]
    return v


def run_experiment(name, params, output_path):
    """Run one validated experiment, writing the CSV and its provenance sidecar."""
    prov = {"quadrature": []}
    header, rows = EXPERIMENTS[name](params, prov)
    out = Path(output_path)
    out.parent.mkdir(parents=True, exist_ok=True)
    with open(out, "w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(header)
        w.writerows(rows)
    sidecar = {
        "experiment": name,
        "parameters": {k: _jsonable(v) for k, v in params.items()},
        "output_path": str(out),
        "version": __version__,
        "timestamp": datetime.now(timezone.utc).isoformat(),
        "quadrature": prov["quadrature"],
        "rows": len(rows),
    }
    out.with_suffix(".provenance.json").write_text(json.dumps(sidecar, indent=2) + "\n")
    return out


def list_experiments():
    lines = []
    for name, schema in SCHEMAS.items():
        lines.append(name)
        for key, spec in schema.items():
            lines.append(f"    {key:<15} {spec.kind:<13} default {json.dumps(spec.default)}  {spec.doc}")
    return "\n".join(lines)


def main(argv=None):
    parser = argparse.ArgumentParser(prog="csie", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    p_run = sub.add_parser("run", help="run an experiment config")
    p_run.add_argument("config")
    sub.add_parser("list", help="list experiments and their parameters")
    p_val = sub.add_parser("validate", help="check a config without running it")
    p_val.add_argument("config")
    args = parser.parse_args(argv)

    if args.command == "list":
        print(list_experiments())
        return EXIT_OK
    try:
        name, params, out = load_config(args.config)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    if args.command == "validate":
        print(f"ok: {name}")
        return EXIT_OK
    try:
        path = run_experiment(name, params, out)
    except ExperimentFailure as exc:
        print(f"numeric error: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    except NumericalError as exc:
        print(f"numeric error: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    print(f"wrote {path}")
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
