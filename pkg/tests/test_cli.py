import json

import pytest

from twodist import catalog, io
from twodist.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_build_and_edges(capsys, tmp_path):
    path = tmp_path / "g16.json"
    code, _, err = run(capsys, "build", "g16", "-o", str(path))
    assert code == 0 and "16 vertices" in err
    assert io.load(path).n == 16
    code, out, _ = run(capsys, "edges", str(path), "--list", "--audit")
    assert code == 0
    assert out.splitlines()[0] == "vertices 16  E1 28  E2 28"
    audit = json.loads(out.splitlines()[-1])
    assert audit["e1"] == 28 and audit["pairs"] == 120


def test_solve_verdicts(capsys, tmp_path):
    code, out, _ = run(capsys, "solve", "g16", "-k", "5", "--expect", "sat", "--coloring-out", str(tmp_path / "c.json"))
    assert code == 0 and out.startswith("SAT")
    col = json.loads((tmp_path / "c.json").read_text())["coloring"]
    assert len(col) == 16 and col[0] == col[15]
    code, out, _ = run(capsys, "solve", "g16", "-k", "5", "--diff", "1", "16")
    assert code == 0 and out.startswith("UNSAT")
    code, out, _ = run(capsys, "solve", "g16", "-k", "4", "--expect", "sat")
    assert code == 1


def test_force_pair(capsys):
    assert run(capsys, "force-pair", "g16", "1", "16")[0] == 0
    code, out, _ = run(capsys, "force-pair", "g16", "1", "11")
    assert code == 1 and "can differ" in out
    code, _, err = run(capsys, "force-pair", "g16", "1", "2")
    assert code == 2 and "adjacent" in err
    assert run(capsys, "force-pair", "g16", "1", "99")[0] == 2


def test_timeout_exit_code(capsys):
    code, out, _ = run(capsys, "force-pair", "g313", "--timeout", "0.2", *map(str, pair313()))
    assert code in (0, 3)


def pair313():
    u, v = catalog.g313_pair()
    return u + 1, v + 1


def test_enumerate(capsys):
    code, out, _ = run(capsys, "enumerate", "g16", "--check-mono", "1", "16", "--limit", "0")
    assert code == 0 and "count 12" in out and "every colouring" in out
    code, out, _ = run(capsys, "enumerate", "g16", "--check-mono", "1", "11", "--limit", "0")
    assert code == 1
    assert run(capsys, "enumerate", "g126")[0] == 2


def test_reduce_and_spindle(capsys, tmp_path):
    red = tmp_path / "red.json"
    code, _, err = run(capsys, "reduce", "g16", "1", "16", "-o", str(red))
    assert code == 0 and "kept 16 of 16" in err
    assert run(capsys, "reduce", "g16", "1", "11")[0] == 1
    sp = tmp_path / "sp.json"
    code, _, err = run(capsys, "spindle", str(red), "1", "16", "-o", str(sp))
    assert code == 0 and err.startswith("31 vertices")
    S = io.load(sp)
    assert S.n == 31 and S.cross_edge is not None
    assert run(capsys, "solve", str(sp), "-k", "5", "--expect", "unsat")[0] == 0


def test_automorphisms(capsys):
    code, out, _ = run(capsys, "automorphisms", "g16")
    assert code == 0
    assert json.loads(out) == {"color_preserving": 4, "color_permuting": 8, "uncolored": 48}


def test_export_cnf(capsys, tmp_path):
    path = tmp_path / "q.cnf"
    assert run(capsys, "export-cnf", "g16", "-k", "5", "--diff", "1", "16", "-o", str(path))[0] == 0
    assert path.read_text().splitlines()[0] == "p cnf 80 301"
    code, out, _ = run(capsys, "solve", "g16", "-k", "5", "--export-cnf", str(tmp_path / "b.cnf"))
    assert code == 0 and (tmp_path / "b.cnf").exists()


def test_render(capsys, tmp_path):
    col = tmp_path / "c.json"
    run(capsys, "solve", "g16", "-k", "5", "--coloring-out", str(col))
    svg = tmp_path / "g.svg"
    assert run(capsys, "render", "g16", "-o", str(svg), "--coloring", str(col), "--mono", "1", "16")[0] == 0
    assert svg.read_text().startswith("<svg")


def test_bad_inputs(capsys, tmp_path):
    assert run(capsys, "edges", str(tmp_path / "missing.json"))[0] == 2
    bad = tmp_path / "bad.json"
    doc = json.loads(io.dumps(catalog.build_g16()))
    doc["e1"].pop()
    bad.write_text(json.dumps(doc))
    code, _, err = run(capsys, "edges", str(bad))
    assert code == 1 and "error" in err
    with pytest.raises(SystemExit) as exc:
        main(["solve", "g16"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2


def test_reference_backend(capsys, monkeypatch):
    monkeypatch.setenv("TWODIST_BACKEND", "reference")
    code, out, _ = run(capsys, "solve", "g31", "-k", "5", "--expect", "unsat")
    assert code == 0


def test_verify_paper_exit_codes(capsys, monkeypatch):
    # the battery itself runs in test_acceptance; here only the CLI wiring
    from twodist import verify

    def fake(include_slow=False, timeout=None, fail=False):
        checks = [verify.Check(1, "profile", "", 1, 1, True), verify.Check(9, "large", "", 1, None, None, slow=True)]
        if fail:
            checks.append(verify.Check(2, "identities", "", 1, 0, False))
        return verify.Report(checks)

    monkeypatch.setattr(verify, "run_battery", fake)
    code, out, _ = run(capsys, "verify-paper", "--json")
    assert code == 0 and [c["status"] for c in json.loads(out)["checks"]] == ["PASS", "SKIP"]
    monkeypatch.setattr(verify, "run_battery", lambda **kw: fake(fail=True))
    code, out, _ = run(capsys, "verify-paper")
    assert code == 1 and "FAIL" in out
