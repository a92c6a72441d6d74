"""Plain-text serialization of radial operators and resonance sets.

Operators: ``<stem>.csv`` holds ``i,j,re,im`` rows for every nonzero entry,
``<stem>.json`` holds ``{"dim", "sigma": [re, im], "R", "form"}``.
Resonance sets: one CSV with the columns in :data:`RESONANCE_COLUMNS`.
Floats are written with 17 significant digits, so a round trip is exact.
"""

import csv
import json
from pathlib import Path

import numpy as np

from .assembly import RadialOperator, ScalingConfig
from .eig import Resonance, ResonanceSet

__all__ = [
    "RESONANCE_COLUMNS",
    "fmt",
    "save_operator",
    "load_operator",
    "save_resonances",
    "load_resonances",
]

RESONANCE_COLUMNS = (
    "nu",
    "N",
    "sigma_re",
    "sigma_im",
    "eps_tilde",
    "omega_re",
    "omega_im",
    "residual",
    "classification",
)


def fmt(x):
    """Round-trip safe text for a float."""
    return format(float(x), ".17g")


def _stem(path):
    p = Path(path)
    return p.with_suffix("") if p.suffix in (".csv", ".json") else p


def save_operator(op, path):
    """Write ``op`` to ``<stem>.csv`` and ``<stem>.json``; returns both paths."""
    stem = _stem(path)
    csv_path, json_path = stem.with_suffix(".csv"), stem.with_suffix(".json")
    A = op.entries
    with open(csv_path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["i", "j", "re", "im"])
        for i, j in zip(*np.nonzero(A)):
            w.writerow([i, j, fmt(A[i, j].real), fmt(A[i, j].imag)])
    header = {
        "dim": op.dim,
        "sigma": [op.cfg.sigma.real, op.cfg.sigma.imag],
        "R": op.cfg.R,
        "form": op.form,
    }
    json_path.write_text(json.dumps(header, indent=2) + "\n")
    return csv_path, json_path


def load_operator(path):
    stem = _stem(path)
    header = json.loads(stem.with_suffix(".json").read_text())
    n = int(header["dim"])
    A = np.zeros((n, n), dtype=complex)
    with open(stem.with_suffix(".csv"), newline="") as fh:
        for row in csv.DictReader(fh):
            i, j = int(row["i"]), int(row["j"])
            if not (0 <= i < n and 0 <= j < n):
                raise ValueError(f"entry ({i}, {j}) outside a {n}x{n} operator")
            A[i, j] = complex(float(row["re"]), float(row["im"]))
    cfg = ScalingConfig(complex(*header["sigma"]), header["R"])
    return RadialOperator(A, header["form"], cfg)


def resonance_rows(rs):
    sigma = complex(rs.sigma) if rs.sigma is not None else complex("nan")
    for p in rs.pairs:
        yield [
            rs.nu,
            rs.N,
            fmt(sigma.real),
            fmt(sigma.imag),
            fmt(rs.eps_tilde),
            fmt(p.omega.real),
            fmt(p.omega.imag),
            fmt(p.residual),
            p.classification,
        ]


def save_resonances(rs, path):
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(RESONANCE_COLUMNS)
        w.writerows(resonance_rows(rs))
    return Path(path)


def load_resonances(path):
    """Read a resonance CSV back; eigenvectors are not stored and come back empty."""
    pairs, meta = [], None
    with open(path, newline="") as fh:
        for row in csv.DictReader(fh):
            m = (
                int(row["nu"]),
                int(row["N"]),
                complex(float(row["sigma_re"]), float(row["sigma_im"])),
                float(row["eps_tilde"]),
            )
            if meta is not None and m != meta:
                raise ValueError("rows from different problems in one resonance file")
            meta = m
            om = complex(float(row["omega_re"]), float(row["omega_im"]))
            pairs.append(Resonance(om, np.empty(0, dtype=complex), float(row["residual"]), row["classification"]))
    if meta is None:
        return ResonanceSet(())
    return ResonanceSet(tuple(pairs), *meta)
