import json

import pytest

from quatds.cli import main
from quatds.errors import ConfigError
from quatds.fueter import q_kl
from quatds.polynomial import QPolynomial
from quatds.verify import VerifyConfig, run_suite


def _run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def test_verify_lie(capsys):
    code, out = _run(capsys, "verify", "lie")
    rep = json.loads(out)
    assert code == 0 and rep["pass"]
    ids = {c["id"] for c in rep["checks"]}
    assert {"lie.killing.su2", "lie.killing.sp11"} <= ids
    for c in rep["checks"]:
        assert set(c) == {"id", "paper_ref", "mode", "residual", "pass"}
        assert c["paper_ref"] and c["mode"] in ("exact", "float")


def test_determinism(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    for p in (a, b):
        assert main(["verify", "all", "--seed", "7", "--samples", "4", "--out", str(p)]) == 0
    assert a.read_bytes() == b.read_bytes()
    rep = json.loads(a.read_text())
    assert [s["suite"] for s in rep["suites"]] == ["lie", "group", "fueter", "forms", "cauchy", "level"]


def test_cauchy_level3(capsys):
    code, out = _run(capsys, "verify", "cauchy", "--level", "3", "--samples", "5")
    rep = json.loads(out)
    assert code == 0
    assert rep["artifacts"]["max_relative_error"] < 1e-3


def test_exit_codes(capsys):
    assert main(["verify", "cauchy", "--tol", "-1"]) == 2
    assert main(["verify", "level", "--N", "0"]) == 2
    with pytest.raises(SystemExit) as exc:
        main(["verify", "nonsense"])
    assert exc.value.code == 2
    code, out = _run(capsys, "verify", "forms", "--printed", "--samples", "4", "--emit", "text")
    assert code == 1
    assert "FAIL  printed.forms.closedness_minus" in out
    assert "PASS  forms.closedness" in out


def test_level_report(capsys):
    code, out = _run(capsys, "verify", "level", "--N", "2", "--height", "2", "--samples", "5")
    rep = json.loads(out)
    assert code == 0
    art = rep["artifacts"]
    assert art["found"] == len(art["elements"]) and art["in_gamma"] == 4
    assert all(e["unitary_defect4"] == 0 for e in art["elements"])


def test_basis_families(capsys):
    code, out = _run(capsys, "basis", "--family", "Q", "--n", "2")
    data = json.loads(out)
    assert code == 0 and len(data["polynomials"]) == 9
    entry = next(p for p in data["polynomials"] if (p["k"], p["l"]) == (1, 2))
    assert QPolynomial.from_json(entry["terms"]) == q_kl(2, 1, 2)
    code, out = _run(capsys, "basis", "--family", "h", "--n", "2")
    assert len(json.loads(out)["functions"]) == 3
    assert main(["basis", "--family", "h", "--n", "0"]) == 2


def test_basis_matrices(capsys):
    for kind, rows in (("rn", 3), ("jn", 3), ("mu", 6)):
        code, out = _run(capsys, "basis", "--n", "2", "--emit", kind)
        m = json.loads(out)["matrix"]
        assert code == 0 and m["rows"] == rows and m["basis_tag"]


def test_config_validation():
    with pytest.raises(ConfigError):
        run_suite("lie", VerifyConfig(samples=0))
    with pytest.raises(ConfigError):
        run_suite("bogus")
