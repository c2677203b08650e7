"""End-to-end tests of the command-line runner and the operator cache."""

import json
from fractions import Fraction

import pytest

from kralljacobi.cli import (
    RunConfig,
    cache_roundtrip,
    main,
    read_operator_cache,
    write_operator_cache,
)
from kralljacobi.ncalg import NCOp


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, json.loads(out) if out.strip().startswith("{") else out


def test_config_validation():
    with pytest.raises(ValueError):
        RunConfig(alpha=1, k=2, a=("1", "1"))  # k > alpha
    with pytest.raises(ValueError):
        RunConfig(alpha=2, k=2, a=("1",))  # wrong a length
    with pytest.raises(ValueError):
        RunConfig(n_max=-1)


def test_qpoly_single_index(capsys):
    code, report = run_cli(capsys, "qpoly", "--n", "1", "--s-max", "0")
    assert code == 0
    assert report["command"] == "qpoly"
    assert report["family"] == [{"coeffs": ["9", "-12"], "n": 1}]
    assert report["shifted"] == []


def test_qpoly_emits_shifted_families(capsys):
    code, report = run_cli(capsys, "qpoly", "--n-max", "2", "--s-max", "2")
    assert code == 0
    assert len(report["family"]) == 3
    assert len(report["shifted"]) == 6
    assert report["shifted"][0] == {"coeffs": ["-5/4"], "n": 0, "s": 1}


def test_qpoly_reports_degeneracy(capsys):
    code = main(["qpoly", "--alpha", "2", "--k", "2", "--a", "1,1", "--beta", "0", "--n", "0"])
    err = capsys.readouterr().err
    assert code == 2
    assert "index -1" in err


def test_algebra_basis_size(capsys):
    code, report = run_cli(capsys, "algebra", "--degree", "3")
    assert code == 0
    assert report["degree"] == 3
    assert report["basis"] == [["1"], ["0", "7/2", "1"], ["0", "-131/16", "0", "1"]]


def test_fit_writes_and_reuses_cache(tmp_path, capsys):
    argv = ["fit", "--degree", "2", "--cache-dir", str(tmp_path)]
    code, report = run_cli(capsys, *argv)
    assert code == 0
    files = sorted(p.name for p in tmp_path.iterdir())
    assert files == ["bf_alpha1_beta0_k1_a1_deg0.json", "bf_alpha1_beta0_k1_a1_deg2.json"]
    before = {p.name: p.read_bytes() for p in tmp_path.iterdir()}
    code, report2 = run_cli(capsys, *argv)
    assert code == 0
    assert report2["operators"] == report["operators"]
    after = {p.name: p.read_bytes() for p in tmp_path.iterdir()}
    assert after == before  # byte-stable across runs


def test_fit_operator_table_content(tmp_path, capsys):
    code, report = run_cli(capsys, "fit", "--degree", "2", "--cache-dir", str(tmp_path))
    assert code == 0
    deg2 = next(op for op in report["operators"] if op["degree"] == 2)
    terms = {(i, j): c for i, j, c in deg2["terms"]}
    # leading normal-form terms of the fourth-order operator
    assert terms[(4, 0)] == "1"
    assert terms[(2, 1)] == "-2"
    assert terms[(0, 2)] == "1"
    assert terms[(0, 0)] == "-33/16"


def test_cache_roundtrip_and_errors(tmp_path):
    op = NCOp(Fraction(1, 2), {(4, 0): 1, (0, 2): Fraction(-3, 7)})
    path = tmp_path / "op.json"
    assert cache_roundtrip(op, path) == op
    assert read_operator_cache(path) == op

    empty = NCOp.zero(Fraction(0))
    epath = tmp_path / "empty.json"
    write_operator_cache(empty, epath)
    assert json.loads(epath.read_text())["terms"] == []
    assert read_operator_cache(epath) == empty

    # corrupted fraction string: parse error naming the entry, no rewrite
    data = json.loads(path.read_text())
    data["terms"][0][2] = "junk"
    path.write_text(json.dumps(data, indent=2, sort_keys=True))
    frozen = path.read_bytes()
    with pytest.raises(ValueError, match="term entry 0"):
        read_operator_cache(path)
    with pytest.raises(ValueError, match="term entry 0"):
        cache_roundtrip(op, path)
    assert path.read_bytes() == frozen

    # a valid file holding a different operator is refused, not replaced
    other = tmp_path / "other.json"
    write_operator_cache(empty, other)
    with pytest.raises(ValueError, match="differs"):
        cache_roundtrip(op, other)


def test_cache_rejects_malformed_shapes(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text("not json")
    with pytest.raises(ValueError, match="not valid JSON"):
        read_operator_cache(path)
    path.write_text('{"beta": "0"}')
    with pytest.raises(ValueError, match="keys"):
        read_operator_cache(path)
    path.write_text('{"beta": "0", "terms": [[1, -1, "2"]]}')
    with pytest.raises(ValueError, match="term entry 0"):
        read_operator_cache(path)


def test_verify_krall_example(tmp_path, capsys):
    out = tmp_path / "report.json"
    code, report = run_cli(capsys, "verify", "--suite", "krall-example", "--out", str(out))
    assert code == 0
    assert all(c["status"] == "pass" for c in report["checks"])
    names = [c["name"] for c in report["checks"]]
    assert names == sorted(names)
    assert "example-operator-table" in names
    assert json.loads(out.read_text())["checks"] == report["checks"]


def test_verify_is_deterministic_modulo_wall_time(capsys):
    code1, r1 = run_cli(capsys, "verify", "--suite", "exact-core", "--seed", "3")
    code2, r2 = run_cli(capsys, "verify", "--suite", "exact-core", "--seed", "3")
    assert code1 == code2 == 0
    r1.pop("wall_time")
    r2.pop("wall_time")
    assert r1 == r2


def test_config_file_with_flag_overrides(tmp_path, capsys):
    conf = tmp_path / "conf.json"
    conf.write_text(json.dumps({"alpha": 1, "beta": "1/2", "k": 1, "a": ["1/3"], "seed": 5}))
    code, report = run_cli(capsys, "verify", "--config", str(conf), "--suite", "krall-example", "--seed", "9")
    assert code == 0
    assert report["config"]["beta"] == "1/2"
    assert report["config"]["a"] == ["1/3"]
    assert report["config"]["seed"] == 9  # flag wins over file


def test_config_file_rejects_unknown_keys(tmp_path, capsys):
    conf = tmp_path / "conf.json"
    conf.write_text(json.dumps({"alhpa": 2}))
    code = main(["verify", "--config", str(conf), "--suite", "exact-core"])
    assert code == 2
    assert "alhpa" in capsys.readouterr().err


def test_mvbasis_terms_are_lex_sorted(capsys):
    code, report = run_cli(capsys, "mvbasis", "--d", "2", "--beta", "0", "--n-max", "2")
    assert code == 0
    members = {(m["n"], m["i"], m["j"]): m["terms"] for m in report["members"]}
    assert members[(0, 0, 1)] == [[[0, 0], "-1"]]
    assert members[(2, 1, 1)] == [[[0, 0], "9"], [[0, 2], "-12"], [[2, 0], "-12"]]
    for terms in members.values():
        exponents = [tuple(e) for e, _ in terms]
        assert exponents == sorted(exponents)


def test_mv_commands_enforce_dimension_config(capsys):
    code = main(["mvbasis", "--n-max", "2"])
    assert code == 2
    assert "need d" in capsys.readouterr().err
    code = main(["mvverify", "--d", "3", "--beta", "0"])
    assert code == 2
    assert "beta" in capsys.readouterr().err


def test_mvverify_passes(capsys):
    code, report = run_cli(capsys, "mvverify", "--d", "2", "--beta", "0", "--n-max", "4", "--degree", "4")
    assert code == 0
    assert {c["name"] for c in report["checks"]} == {
        "multivariate-eigenbasis",
        "sobolev-orthogonality",
    }
    assert all(c["status"] == "pass" for c in report["checks"])


def test_exit_status_reflects_failures(capsys):
    # the acceptance suite contains the recorded degenerate-point failures
    code, report = run_cli(capsys, "verify", "--suite", "acceptance")
    assert code == 1
    failing = {c["name"] for c in report["checks"] if c["status"] == "fail"}
    assert failing == {"bispectral-pair", "intertwining"}
    for c in report["checks"]:
        if c["status"] == "fail":
            assert "tau vanishes at index -1" in c["witness"]
