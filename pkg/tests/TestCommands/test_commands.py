# -*- coding: utf-8 -*-
from __future__ import print_function

import hlyaconstructor
import hlyaconstructor.Fields
import hlyaconstructor.LinAlg
import hlyaconstructor.Algebra
import hlyaconstructor.Settings
import hlyaconstructor.Commands
import hlyaconstructor.Fixtures

import json

import sys, os
import pytest

"""
The hlya_tool.py command line: exit codes and certificates.
"""


def run(argv, tmp_path, name="cert.json"):
    """Run the tool, return (exit code, certificate)."""
    out = str(tmp_path / name)
    code = hlyaconstructor.Commands.main(argv + ["--output", out])
    with open(out) as fp:
        cert = json.load(fp)
    return code, cert


def _strip(cert):
    cert = dict(cert)
    cert.pop("duration_seconds")
    return cert


def teardown_function(function):
    hlyaconstructor.Settings.SetupParallel(1)


def test_check_heisenberg(tmp_path):
    code, cert = run(["check", "--fixture", "heisenberg"], tmp_path)
    assert code == hlyaconstructor.Commands.EXIT_OK
    assert cert["verdict"] == "pass"
    assert cert["exit_code"] == 0
    assert cert["command"] == "check"
    assert cert["results"]["stem"]
    assert cert["results"]["center"]["dim"] == 1
    assert cert["results"]["axioms"]["pass"]
    assert len(cert["inputs"]) == 1
    assert len(cert["inputs"][0]["sha256"]) == 64


def test_check_example_A(tmp_path):
    code, cert = run(["check", "--fixture", "example-A"], tmp_path)
    assert code == hlyaconstructor.Commands.EXIT_FAILURE
    assert cert["verdict"] == "fail"
    status = [a for a in cert["results"]["axioms"]["axioms"] if a["name"] == "multiplicative_binary"][0]
    assert status["failures"][0]["index"] == [0, 1]


def test_certificate_is_reproducible(tmp_path):
    _, first = run(["check", "--fixture", "example-A", "--field", "F5"], tmp_path, "first.json")
    _, second = run(["check", "--fixture", "example-A", "--field", "F5"], tmp_path, "second.json")
    assert _strip(first) == _strip(second)


def test_malformed_inputs(tmp_path):
    broken = tmp_path / "broken.json"
    broken.write_text('{"header": {"field": "Q", "dim": 2}, "body": {"twist": [[1, 0]]}}')
    code, cert = run(["check", str(broken)], tmp_path)
    assert code == hlyaconstructor.Commands.EXIT_MALFORMED
    assert cert["verdict"] == "malformed"
    assert "body.twist" in cert["results"]["error"]["message"]

    syntax = tmp_path / "syntax.json"
    syntax.write_text("{ not json")
    code, cert = run(["check", str(syntax)], tmp_path)
    assert code == hlyaconstructor.Commands.EXIT_MALFORMED

    code, cert = run(["check", str(tmp_path / "missing.json")], tmp_path)
    assert code == hlyaconstructor.Commands.EXIT_MALFORMED

    # neither a path nor a fixture
    code, cert = run(["check"], tmp_path)
    assert code == hlyaconstructor.Commands.EXIT_MALFORMED


def test_bad_settings(tmp_path, monkeypatch):
    out = str(tmp_path / "cert.json")
    assert hlyaconstructor.Commands.main(["check", "--fixture", "heisenberg", "--threads", "0", "--output", out]) == \
        hlyaconstructor.Commands.EXIT_MALFORMED
    assert hlyaconstructor.Commands.main(["check", "--fixture", "heisenberg", "--field", "F4", "--output", out]) == \
        hlyaconstructor.Commands.EXIT_MALFORMED

    monkeypatch.setenv("HLYA_THREADS", "many")
    assert hlyaconstructor.Commands.main(["check", "--fixture", "heisenberg", "--output", out]) == \
        hlyaconstructor.Commands.EXIT_MALFORMED


def test_quotient(tmp_path):
    emit = str(tmp_path / "quotient.json")
    code, cert = run(["quotient", "--fixture", "heisenberg", "--ideal", "center", "--emit", emit], tmp_path)
    assert code == 0
    Q = hlyaconstructor.Algebra.load_json(emit)
    assert Q.dim == 2
    assert Q.is_abelian()

    code, cert = run(["quotient", "--fixture", "heisenberg", "--ideal", "[[1, 0, 0]]"], tmp_path)
    assert code == hlyaconstructor.Commands.EXIT_FAILURE
    assert not cert["results"]["ideal_report"]["pass"]

    code, cert = run(["quotient", "--fixture", "heisenberg", "--ideal", "[[1, 0]]"], tmp_path)
    assert code == hlyaconstructor.Commands.EXIT_MALFORMED


def test_direct_sum(tmp_path):
    emit = str(tmp_path / "sum.json")
    code, cert = run(["direct-sum", "fixture:heisenberg", "fixture:abelian", "--emit", emit], tmp_path)
    assert code == 0
    assert hlyaconstructor.Algebra.load_json(emit) == hlyaconstructor.Fixtures.heisenberg_plus_abelian(2)
    assert len(cert["inputs"]) == 2


def test_factor_set_modes(tmp_path):
    code, cert = run(["factor-set", "--fixture", "heisenberg", "--roundtrip"], tmp_path)
    assert code == 0
    assert cert["results"]["roundtrip"]["verified"]

    code, cert = run(["factor-set", "--fixture", "example-A", "--extract"], tmp_path)
    assert code == 0
    assert cert["results"]["factor_set"]["z"] == 0
    assert cert["results"]["factor_set"]["q"] == 3

    fs = tmp_path / "fs.json"
    fs.write_text(json.dumps({"q": 2, "z": 1, "pi2": [{"i": 0, "j": 1, "value": [1]}]}))
    emit = str(tmp_path / "omega.json")
    code, cert = run(["factor-set", "--fixture", "abelian", "--dim", "2", "--extend", str(fs), "--emit", emit], tmp_path)
    assert code == 0
    assert cert["results"]["extension_center_agrees"]
    omega = hlyaconstructor.Algebra.load_json(emit)
    assert omega.dim == 3

    # indexed by a 2-dim quotient, the base has dimension 3
    code, cert = run(["factor-set", "--fixture", "heisenberg", "--extend", str(fs)], tmp_path)
    assert code == hlyaconstructor.Commands.EXIT_MALFORMED


def test_factor_set_obstruction(tmp_path):
    """No twist invariant section: exit code 3."""
    f = hlyaconstructor.Fields.get_field("F3")
    B = f.zeros((3, 3, 3))
    B[1, 2, 0] = 1
    B[2, 1, 0] = 2
    A = hlyaconstructor.Algebra.HlyAlgebra(f, 3, binary=B, twist=f.asarray([[1, 1, 0], [0, 1, 0], [0, 0, 1]]))
    path = str(tmp_path / "jordan.json")
    A.save_json(path)

    code, cert = run(["factor-set", path, "--extract"], tmp_path)
    assert code == hlyaconstructor.Commands.EXIT_OBSTRUCTION
    assert cert["verdict"] == "obstruction"
    error = cert["results"]["error"]
    assert error["step"] == "section"
    assert error["system_shape"] == [2, 2]
    K = f.asarray(error["sylvester_system"]["matrix"])
    rhs = f.asarray(error["sylvester_system"]["rhs"])
    assert K.shape == (2, 2)
    assert rhs.shape == (2,)
    assert hlyaconstructor.LinAlg.solve(K, rhs, f) is None


def test_isoclinic_search(tmp_path):
    argv = ["isoclinic", "fixture:heisenberg", "fixture:heisenberg+abelian2", "--field", "F2"]
    code, serial = run(argv + ["--threads", "1"], tmp_path, "serial.json")
    assert code == 0
    assert serial["results"]["isoclinic"]
    assert serial["results"]["witness"]["report"]["pass"]

    code, threaded = run(argv + ["--threads", "3"], tmp_path, "threaded.json")
    assert code == 0
    assert _strip(serial) == _strip(threaded)

    code, cert = run(["isoclinic", "fixture:heisenberg", "fixture:abelian"], tmp_path)
    assert code == hlyaconstructor.Commands.EXIT_FAILURE
    assert not cert["results"]["isoclinic"]


def test_isoclinic_budget(tmp_path):
    code, cert = run(["isoclinic", "fixture:heisenberg", "fixture:heisenberg+abelian2", "--budget", "0"], tmp_path)
    assert code == hlyaconstructor.Commands.EXIT_INCONCLUSIVE
    assert cert["verdict"] == "inconclusive"


def test_isoclinic_witness(tmp_path):
    good = tmp_path / "good.json"
    good.write_text(json.dumps({"theta": [[1, 0], [0, 1]], "beta": [[1]]}))
    code, cert = run(["isoclinic", "fixture:heisenberg", "fixture:heisenberg", "--witness", str(good)], tmp_path)
    assert code == 0
    assert len(cert["inputs"]) == 3

    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"theta": [[1, 0], [0, 1]], "beta": [[2]]}))
    code, cert = run(["isoclinic", "fixture:heisenberg", "fixture:heisenberg", "--witness", str(bad)], tmp_path)
    assert code == hlyaconstructor.Commands.EXIT_FAILURE
    assert not cert["results"]["witness"]["report"]["pass"]

    wrong = tmp_path / "wrong.json"
    wrong.write_text(json.dumps({"theta": [[1]]}))
    code, cert = run(["isoclinic", "fixture:heisenberg", "fixture:heisenberg", "--witness", str(wrong)], tmp_path)
    assert code == hlyaconstructor.Commands.EXIT_MALFORMED


def test_decompose(tmp_path):
    prefix = str(tmp_path / "parts")
    code, cert = run(["decompose", "--fixture", "heisenberg+abelian2", "--emit-prefix", prefix], tmp_path)
    assert code == 0
    assert cert["results"]["decomposition"]["abelian_part"]["header"]["dim"] == 2
    assert hlyaconstructor.Algebra.load_json(prefix + "_stem.json") == hlyaconstructor.Fixtures.heisenberg()

    code, cert = run(["decompose", "--fixture", "example-A"], tmp_path)
    assert code == hlyaconstructor.Commands.EXIT_FAILURE


def test_corpus(tmp_path):
    directory = str(tmp_path / "corpus")
    code, cert = run(["corpus", "--field", "F2", "--dim", "1", "--count", "2", "--directory", directory], tmp_path)
    assert code == 0
    assert cert["results"]["count"] == 2
    assert sorted(os.listdir(directory)) == sorted(cert["results"]["files"])

    code, cert = run(["corpus", "--field", "F2", "--dim", "2", "--exhaustive", "--directory", directory], tmp_path)
    assert code == 0
    assert cert["results"]["count"] >= 6

    code, cert = run(["corpus", "--field", "F5", "--directory", directory], tmp_path)
    assert code == hlyaconstructor.Commands.EXIT_MALFORMED


if __name__ == "__main__":
    import pathlib
    import tempfile
    path = pathlib.Path(tempfile.mkdtemp())
    test_check_heisenberg(path)
    test_factor_set_modes(path)
    test_isoclinic_search(path)
