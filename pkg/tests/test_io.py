import numpy as np
import pytest

from csie.assembly import ScalingConfig, assemble_mass1, assemble_stiffness
from csie.eig import ResonanceSet, dense_eig, separated_problem
from csie.io import RESONANCE_COLUMNS, fmt, load_operator, load_resonances, save_operator, save_resonances

CFG = ScalingConfig(0.3 + 0.3j, 1.5)


def test_fmt_round_trip():
    for x in (0.1, 1 / 3, -2.5e-300, 1e308):
        assert float(fmt(x)) == x


@pytest.mark.parametrize("fn", [assemble_mass1, assemble_stiffness])
def test_operator_round_trip(tmp_path, fn):
    op = fn(12, CFG)
    csv_path, json_path = save_operator(op, tmp_path / "op.csv")
    assert csv_path.exists() and json_path.exists()
    back = load_operator(tmp_path / "op")
    assert np.array_equal(back.entries, op.entries)
    assert back.form == op.form and back.cfg == op.cfg


def test_operator_bad_index(tmp_path):
    save_operator(assemble_mass1(3, CFG), tmp_path / "op")
    with open(tmp_path / "op.csv", "a") as fh:
        fh.write("9,0,1.0,0.0\n")
    with pytest.raises(ValueError):
        load_operator(tmp_path / "op")


def test_resonance_round_trip(tmp_path):
    prob = separated_problem(2, 10, CFG)
    rs = dense_eig(prob.S, prob.M).with_meta(prob)
    path = save_resonances(rs, tmp_path / "rs.csv")
    assert path.read_text().splitlines()[0] == ",".join(RESONANCE_COLUMNS)
    back = load_resonances(path)
    assert np.array_equal(back.omegas, rs.omegas)
    assert np.array_equal(back.residuals, rs.residuals)
    assert (back.nu, back.N, back.sigma) == (2, 10, CFG.sigma)


def test_resonance_empty_and_mixed(tmp_path):
    p = save_resonances(ResonanceSet(()), tmp_path / "e.csv")
    assert len(load_resonances(p)) == 0
    prob = separated_problem(1, 4, CFG)
    rs = dense_eig(prob.S, prob.M).with_meta(prob)
    p = save_resonances(rs, tmp_path / "m.csv")
    with open(p, "a") as fh:
        fh.write("7,4,0.3,0.3,0,1,0,0,unknown\n")
    with pytest.raises(ValueError):
        load_resonances(p)
