import json
import os
import subprocess

import pytest

import cdtorus


def test_version():
    assert cdtorus.version() == "0.1.0"
    assert cdtorus.__version__ == "0.1.0"


def test_table():
    h = cdtorus.table("H")
    assert h.dim == 4
    assert h.name == "H"
    assert h.product(1, 2) == (1, 3)
    assert h.product(2, 1) == (-1, 3)
    assert h.csv().splitlines()[0] == "0,1,2,3"
    assert cdtorus.validate_table(cdtorus.table("O")) is None
    with pytest.raises(ValueError):
        cdtorus.table("X")


def test_rank():
    assert cdtorus.rank([[1, 2], [2, 4]]) == 1
    assert cdtorus.rank([[1, 0], [0, 1]]) == 2


def test_build_tensor():
    b = cdtorus.build_tensor(1, 1)
    assert b["real_dim"] == 64
    assert b["complex_dim"] == 32
    assert b["complex_unit"] == 32
    with pytest.raises(RuntimeError):
        cdtorus.build_tensor(4, 0)


def test_splitting_pairs():
    assert cdtorus.splitting_pairs(1, 0) == [(0, 4), (1, 5), (2, 6), (3, 7)]


def test_ranks():
    assert cdtorus.ranks(1, 0) == {"generated": 32, "commutant": 32, "rho": 32}


def test_verify():
    rep = cdtorus.verify(0, 0)
    assert rep["all_pass"]
    names = [c["name"] for c in rep["checks"]]
    assert names[0] == "complex_dimension"
    assert "j_invariant" in names


def test_j_invariant():
    assert abs(cdtorus.j_invariant(1, 1j) - 1728) < 1e-2


def test_cli_report_is_deterministic(tmp_path):
    cli = os.environ.get("CDTORUS_CLI")
    if not cli:
        pytest.skip("CDTORUS_CLI not set")
    outputs = []
    for name in ("a.json", "b.json"):
        path = tmp_path / name
        subprocess.run(
            [cli, "report", "--case", "0,0", "--no-timing", str(path)],
            check=True,
        )
        outputs.append(path.read_bytes())
    assert outputs[0] == outputs[1]
    parsed = json.loads(outputs[0])
    assert parsed[0]["p"] == 0
    assert all(c["pass"] for c in parsed[0]["checks"])
