import json

import pytest

import crepant

FLOP = {(3, 0): "3"}


def test_necklace_golden():
    assert crepant.necklace(4, 2) == "x^4*y^2 + x^3*y*x*y + 1/2*x^2*y*x^2*y"
    assert crepant.necklace_abelian(4, 2) == "5/2*x^4*y^2"


def test_classify_and_invariants():
    assert crepant.classify(FLOP) == "(-3,1)"
    assert crepant.classify({(1, 1): 1}) == "(-1,-1)"
    assert crepant.invariants(FLOP) == (3, 0, 3)


def test_setup_violation_raises():
    with pytest.raises(ValueError):
        crepant.potential({(1, 1): 1})


def test_jacobi_dims():
    assert sum(crepant.jacobi_dims({}, 4)) == 31
    assert crepant.jacobi_dims(FLOP, 4) == [1, 2, 3, 5, 8]


def test_minimal_model_and_stasheff():
    table = {(2, 2): "1", (3, 0): "1/2"}
    m = crepant.minimal_model(table, 4)
    assert m["xx"] == {"X": "1/2", "Y": "0"}
    assert m["xyy"] == {"X": "1", "Y": "0"}
    assert m["xX"] == {"s": "-1"}
    assert crepant.stasheff_failures(table, 5) == 0


def test_verify_dg():
    assert all(crepant.verify_dg(FLOP, 5).values())


def test_cli_json(tmp_path):
    cfg = tmp_path / "flop.json"
    cfg.write_text(json.dumps({"lambdas": [{"j": 3, "k": 0, "value": "3"}]}))
    code, out, err = crepant.run_cli(["classify", "--json", "--config", str(cfg)])
    assert code == 0, err
    doc = json.loads(out)
    assert doc["normal_bundle"] == "(-3,1)"
    assert doc["invariants"] == {"t": 3, "r": 0, "s": 3}
