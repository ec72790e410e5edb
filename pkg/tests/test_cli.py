import csv
import io
import json
import math
import subprocess
import sys

import numpy as np
import pytest

from dftladder.cli import main
from dftladder.core import build_named_matrix, dft_matrix
from dftladder.ladder import ladder_eigensystem


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def to_complex_matrix(rows):
    return np.array([[complex(float(re), float(im)) for re, im in row] for row in rows])


class TestEmit:
    def test_number_json(self, capsys):
        code, out, _ = run_cli(capsys, "emit", "--object", "number", "--n", "5", "--format", "json")
        assert code == 0
        doc = json.loads(out)
        assert list(doc) == ["object", "n", "precision", "payload"]
        assert (doc["object"], doc["n"], doc["precision"]) == ("number", 5, "binary64")
        m = to_complex_matrix(doc["payload"]["matrix"])
        assert np.all(m.imag == 0)
        np.testing.assert_array_equal(m, m.T)

    @pytest.mark.parametrize("obj", ["dft", "number", "lowering", "momentum", "partner-number"])
    def test_bitwise_roundtrip(self, capsys, obj):
        _, out, _ = run_cli(capsys, "emit", "--object", obj, "--n", "7")
        m = to_complex_matrix(json.loads(out)["payload"]["matrix"])
        original = dft_matrix(7) if obj == "dft" else build_named_matrix(obj, 7)
        np.testing.assert_array_equal(m, original)

    def test_split_symmetric(self, capsys):
        code, out, _ = run_cli(capsys, "emit", "--object", "split-symmetric", "--n", "5")
        payload = json.loads(out)["payload"]
        assert code == 0
        assert payload["sparse"]["nnz"] == 8 == len(payload["sparse"]["entries"])
        assert len(payload["annihilator"]) == 5

    def test_dft_three(self, capsys):
        _, out, _ = run_cli(capsys, "emit", "--object", "dft", "--n", "3")
        m = to_complex_matrix(json.loads(out)["payload"]["matrix"])
        assert m.shape == (3, 3)
        np.testing.assert_allclose(m.conj().T @ m, np.eye(3), atol=1e-15)

    def test_csv_real_and_complex(self, capsys):
        _, out, _ = run_cli(capsys, "emit", "--object", "dft", "--n", "3", "--format", "csv")
        rows = list(csv.reader(io.StringIO(out)))
        assert len(rows) == 3
        assert float(rows[0][0]) == pytest.approx(1 / math.sqrt(3))
        assert rows[1][1].endswith("i")

    def test_unknown_object(self, capsys):
        code, out, err = run_cli(capsys, "emit", "--object", "bogus")
        assert code == 2 and out == "" and "unknown object" in err

    def test_bad_dimension(self, capsys):
        code, _, err = run_cli(capsys, "emit", "--object", "dft", "--n", "1")
        assert code == 2 and "dimension" in err

    def test_five_only_objects(self, capsys):
        code, _, err = run_cli(capsys, "emit", "--object", "phi-x", "--n", "6")
        assert code == 2 and "n = 5" in err

    def test_extended_strings(self, capsys):
        _, out, _ = run_cli(capsys, "--precision", "extended:40", "emit", "--object", "dft")
        doc = json.loads(out)
        assert doc["precision"] == "extended:40"
        re, _ = doc["payload"]["matrix"][0][0]
        assert isinstance(re, str) and re.startswith("0.44721359549995793928183473374625")


class TestEigensystem:
    def test_ladder_lambdas(self, capsys):
        _, out, _ = run_cli(capsys, "eigensystem", "--method", "ladder")
        lam = json.loads(out)["payload"]["eigenvalues"]
        np.testing.assert_allclose(lam, [0, 3.5542565, 3.3478588, 0.2701764, 2.8277116], atol=5e-6)

    def test_methods_agree(self, capsys):
        payloads = {}
        for method in ("ladder", "power", "newton", "oracle"):
            _, out, _ = run_cli(capsys, "eigensystem", "--method", method)
            payloads[method] = json.loads(out)["payload"]
        base = payloads["ladder"]
        for method, p in payloads.items():
            np.testing.assert_allclose(p["eigenvalues"], base["eigenvalues"], atol=1e-10)
            for n in range(5):
                np.testing.assert_allclose(to_complex_matrix([p["vectors"][n]]),
                                           to_complex_matrix([base["vectors"][n]]), atol=1e-10)
            assert p["parity"] == base["parity"] and p["dft_exponent"] == [0, 1, 2, 3, 0]

    def test_newton_f2_row(self, capsys):
        _, out, _ = run_cli(capsys, "eigensystem", "--method", "newton")
        f2 = to_complex_matrix([json.loads(out)["payload"]["vectors"][2]])[0]
        np.testing.assert_allclose(f2, ladder_eigensystem().pairs[2].vector, atol=1e-10)

    def test_csv(self, capsys):
        _, out, _ = run_cli(capsys, "eigensystem", "--format", "csv")
        rows = list(csv.reader(io.StringIO(out)))
        assert rows[0][:4] == ["n", "lambda", "parity", "dft_exponent"]
        assert len(rows) == 6


class TestConstants:
    def test_json(self, capsys):
        _, out, _ = run_cli(capsys, "constants")
        p = json.loads(out)["payload"]
        assert p["s"][2] == pytest.approx(1.1755705, abs=1e-7)
        assert p["xi1"] == pytest.approx(2.1755705, abs=1e-7)
        assert math.degrees(p["phi"]) == pytest.approx(42.13, abs=0.005)

    def test_csv_degrees(self, capsys):
        _, out, _ = run_cli(capsys, "constants", "--format", "csv")
        rows = dict(csv.reader(io.StringIO(out)))
        assert float(rows["phi_degrees"]) == pytest.approx(42.132, abs=0.005)
        assert float(rows["s2"]) == pytest.approx(1.1755705, abs=1e-7)


class TestVerify:
    def test_default(self, capsys):
        code, out, _ = run_cli(capsys, "verify")
        payload = json.loads(out)["payload"]
        assert code == 0
        assert len(payload["entries"]) >= 30
        assert payload["counts"]["PASS_WITH_CORRECTION"] == 4

    def test_loose_tolerance(self, capsys):
        code, _, _ = run_cli(capsys, "verify", "--tolerance", "1e-6", "--trials", "50")
        assert code == 0

    def test_byte_identical(self, capsys):
        _, a, _ = run_cli(capsys, "verify", "--seed", "7", "--trials", "1000")
        _, b, _ = run_cli(capsys, "--seed", "7", "verify", "--trials", "1000")
        assert a == b

    def test_failure_exit_code(self, capsys):
        code, _, err = run_cli(capsys, "verify", "--tolerance", "1e-30", "--trials", "10")
        assert code == 1 and "unexpected" in err

    def test_nonpositive_tolerance(self, capsys):
        with pytest.raises(SystemExit) as info:
            main(["verify", "--tolerance", "0"])
        assert info.value.code == 2

    def test_csv(self, capsys):
        _, out, _ = run_cli(capsys, "verify", "--format", "csv", "--trials", "20")
        rows = list(csv.DictReader(io.StringIO(out)))
        assert {r["status"] for r in rows} == {"PASS", "PASS_WITH_CORRECTION"}


def test_usage_errors_exit_2():
    for argv in ([], ["frobnicate"], ["--precision", "extended:5", "constants"]):
        with pytest.raises(SystemExit) as info:
            main(argv)
        assert info.value.code == 2


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "dftladder", "constants", "--format", "csv"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert "phi_degrees" in proc.stdout
