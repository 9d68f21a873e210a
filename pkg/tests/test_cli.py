import io
import json

import pytest

from sidonspaces.cli import digest, main


def run(argv, capsys, code=0):
    rc = main(argv)
    out = capsys.readouterr().out
    assert rc == code, out
    return out


def run_json(argv, capsys, code=0):
    return json.loads(run(argv, capsys, code))


def test_construct_c1(capsys):
    cert = run_json(["construct", "--id", "C1", "--q", "2", "--n", "8"], capsys)
    assert cert["verdict"]["is_sidon"] is True
    assert cert["construction"]["id"] == "C1"
    assert cert["field"]["n"] == 8
    assert cert["digest"] == digest(cert)


def test_digest_ignores_timings(capsys):
    argv = ["construct", "--id", "C2", "--q", "3", "--k", "2"]
    a, b = run_json(argv, capsys), run_json(argv, capsys)
    assert a["digest"] == b["digest"]
    a["timings"] = {"construct": 123.0}
    assert digest(a) == b["digest"]
    a["seed"] = 99
    assert digest(a) != b["digest"]


def test_global_flags_either_side(capsys):
    before = run(["--pretty", "construct", "--id", "C2", "--q", "3", "--k", "2"], capsys)
    after = run(["construct", "--id", "C2", "--q", "3", "--k", "2", "--pretty", "--threads", "1"], capsys)
    assert before.splitlines()[0].split()[0] == after.splitlines()[0].split()[0]
    assert "verdict.is_sidon" in before and "true" in before


def test_parameter_errors(capsys):
    out = run_json(["construct", "--id", "C1", "--q", "2", "--n", "7"], capsys, 2)
    assert out["error"] == "parameter"
    run(["construct", "--id", "C9", "--q", "2", "--n", "8"], capsys, 2)
    run(["search", "--q", "2", "--k", "2", "--n", "8"], capsys, 2)
    run(["code", "--trivial-subfield", "--q", "2", "--k", "4", "--n", "6"], capsys, 2)


def test_budget_exit(capsys, monkeypatch):
    monkeypatch.setenv("SIDON_BUDGET", "5")
    argv = ["construct", "--id", "C2", "--q", "3", "--k", "2"]
    assert run_json(argv, capsys, 3)["error"] == "budget"
    assert run_json(argv + ["--force"], capsys)["verdict"]["is_sidon"]


def test_verify_round_trip(capsys, tmp_path, monkeypatch):
    cert = run_json(["construct", "--id", "C2", "--q", "3", "--k", "2"], capsys)
    path = tmp_path / "cert.json"
    path.write_text(json.dumps(cert))
    again = run_json(["verify", str(path)], capsys)
    assert again["matches_certificate"] is True
    assert again["verdict"]["is_sidon"]
    monkeypatch.setattr("sys.stdin", io.StringIO(json.dumps(cert)))
    assert run_json(["verify", "-"], capsys)["matches_certificate"] is True


def test_verify_needs_input(capsys):
    run(["verify"], capsys, 2)


def test_verify_subfield_not_sidon(capsys):
    from sidonspaces.field_tower import build_ctx
    from sidonspaces.subspaces import subfield_space
    ctx = build_ctx(2, 1, 2, 4)
    rows = subfield_space(ctx, 2).rows
    cert = run_json(["verify", "--field", json.dumps(ctx.to_json()),
                     "--rows", json.dumps([list(r) for r in rows])], capsys)
    assert cert["verdict"]["is_sidon"] is False
    assert cert["verdict"]["classification"] == "not_sidon"


def test_code(capsys):
    cert = run_json(["code", "--id", "C6", "--q", "5", "--k", "2"], capsys)
    code = cert["code"]
    assert code["size"] == "312" and code["min_distance"] == 2
    assert code["ratio"] == code["target_ratio"] == "12/31"
    cert = run_json(["code", "--trivial-subfield", "--q", "2", "--k", "2", "--n", "6"], capsys)
    assert cert["code"]["size"] == "21" and cert["code"]["min_distance"] == 4


def test_sets(capsys):
    cert = run_json(["sets", "--from", "C2", "--q", "3", "--k", "2"], capsys)
    assert cert["set"]["m"] == 40 and cert["set"]["verified"]
    assert cert["set"]["density"] == "0.632456"
    cert = run_json(["sets", "--bose", "5"], capsys)
    assert len(cert["set"]["elements"]) == 5
    run(["sets"], capsys, 2)


def test_search(capsys):
    cert = run_json(["search", "--greedy", "--q", "2", "--k", "3", "--n", "14"], capsys)
    assert cert["verdict"]["is_sidon"] and cert["construction"]["id"] == "GREEDY"
    cert = run_json(["search", "--maxspan", "--q", "3", "--k", "2", "--n", "3", "--seed", "5"], capsys)
    assert cert["verdict"]["classification"] == "max_span"
    assert cert["bound"] == "1/2" and cert["trials"] >= 1
    same = run_json(["search", "--maxspan", "--q", "3", "--k", "2", "--n", "3", "--seed", "5"], capsys)
    assert same["digest"] == cert["digest"]


def test_search_limits(capsys):
    out = run_json(["search", "--greedy", "--q", "2", "--k", "3", "--n", "10"], capsys, 2)
    assert out["error"] == "parameter"
    out = run_json(["search", "--greedy", "--q", "2", "--k", "3", "--n", "10", "--allow-beyond"], capsys)
    assert out["construction"]["params"]["within_bound"] is False and out["verdict"]["is_sidon"]
    out = run_json(["search", "--greedy", "--q", "2", "--k", "4", "--n", "6", "--allow-beyond"], capsys, 2)
    assert out["error"] == "SearchExhausted"


def test_selftest_quick(capsys):
    rc = main(["selftest", "--quick"])
    captured = capsys.readouterr()
    result = json.loads(captured.out)
    ids = [r["criterion"] for r in result["selftest"]]
    assert 3 not in ids and len(ids) == 11
    assert rc == (0 if all(r["pass"] for r in result["selftest"]) else 1)
    assert captured.err.count("\n") >= 11
