from __future__ import annotations

import json

import pytest

from critset.cli import main
from critset.fixtures import EDGE_LISTS, fixture
from critset.graph import is_tree
from critset.io import parse_edge_list
from critset.report import analyze, render_text


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def analyze_json(capsys, *argv):
    code, out, _ = run(capsys, "analyze", *argv, "--json")
    assert code == 0
    return json.loads(out)


def test_analyze_g2(capsys):
    d = analyze_json(capsys, "fixture:G2")
    assert d["schema"] == 1
    assert (d["dc"], d["ker"], d["core"], d["quasi_regularizable"]) == (1, ["x", "y"], ["x", "y", "z"], False)


def test_analyze_k2_file(tmp_path, capsys):
    path = tmp_path / "k2.txt"
    path.write_text("a b\n")
    d = analyze_json(capsys, str(path))
    assert (d["dc"], d["ker"], d["quasi_regularizable"]) == (0, [], True)


def test_analyze_gfig3(capsys):
    d = analyze_json(capsys, "fixture:Gfig3")
    assert (d["ker"], d["core"], d["dc"]) == (["a", "b", "c"], ["a", "b", "c", "u"], 2)
    assert d["alpha_c"] == 4 and d["max_critical_independent_set"] == ["a", "b", "c", "v"]


def test_analyze_dimacs(tmp_path, capsys):
    path = tmp_path / "p3.col"
    path.write_text("p edge 3 2\ne 1 2\ne 2 3\n")
    d = analyze_json(capsys, str(path), "--format", "dimacs")
    assert d["ker"] == ["1", "3"] and d["alpha"] == 2 and d["mu"] == 1


def test_analyze_guards_make_fields_unavailable(capsys):
    d = analyze_json(capsys, "fixture:G3", "--exact-guard", "5", "--omega-guard", "5",
                     "--matching-guard", "5", "--alpha-c-guard", "5")
    assert set(d["alpha"]) == {"lower", "upper"} and d["alpha"]["lower"] <= 6 <= d["alpha"]["upper"]
    for key in ("mu", "core", "xi", "corona", "zeta", "koenig_egervary", "alpha_c"):
        assert d[key] == "unavailable"


def test_analyze_no_mis(capsys):
    d = analyze_json(capsys, "fixture:G1", "--no-mis")
    assert d["core"] == "unavailable" and d["mu"] == 2 and d["dc"] == 1


def test_analyze_oracle_and_cross_check(capsys):
    d = analyze_json(capsys, "fixture:G3", "--oracle", "--cross-check")
    assert d["oracle"]["status"] == "agrees" and d["ker_cross_checked"]


def test_text_output_has_chain(capsys):
    code, out, _ = run(capsys, "analyze", "fixture:K23")
    assert code == 0
    assert "n >= zeta >= alpha >= xi >= epsilon >= d_c >= alpha-mu:  5 >= 3 >= 3 >= 3 >= 3 >= 1 >= 1" in out


def test_parse_error_exit_code(tmp_path, capsys):
    path = tmp_path / "bad.txt"
    path.write_text("a a\n")
    code, _, err = run(capsys, "analyze", str(path))
    assert code == 2 and "self-loop" in err
    code, _, _ = run(capsys, "analyze", str(tmp_path / "missing.txt"))
    assert code == 2
    code, _, _ = run(capsys, "analyze", "fixture:nope")
    assert code == 2


def test_usage_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as info:
        main(["analyze"])
    assert info.value.code == 2
    assert run(capsys, "verify", "--random", "gnp:12")[0] == 2
    assert run(capsys, "verify", "fixtures", "--checks", "C0")[0] == 2
    assert run(capsys, "verify")[0] == 2
    assert run(capsys, "verify", "fixtures", "--oracle-limit", "21")[0] == 2
    assert run(capsys, "gen", "--model", "gnp", "--n", "5")[0] == 2
    assert run(capsys, "gen", "--model", "gnp", "--n", "0", "--p", "0.5")[0] == 2


def test_internal_breach_exit_3(capsys, monkeypatch):
    import critset.report as report

    monkeypatch.setattr(report, "ker_slow", lambda G: ())
    code, _, err = run(capsys, "analyze", "fixture:G1", "--cross-check")
    assert code == 3 and "breach" in err


def test_verify_exit_codes(capsys):
    code, out, _ = run(capsys, "verify", "fixtures", "--checks", "C4,C10,C17")
    assert code == 0 and "8 graph(s)" in out
    code, out, _ = run(capsys, "verify", "fixture:K23", "--checks", "C11")
    assert code == 1 and "C11 fail" in out


def test_verify_tree_corpus(capsys):
    code, out, _ = run(capsys, "verify", "--random", "tree:30", "--count", "100", "--seed", "1",
                       "--checks", "C13")
    assert code == 0 and "C13: 100 pass, 0 fail, 0 skipped" in out


def test_verify_json_is_ordered_and_parallel_safe(capsys):
    args = ["verify", "--random", "gnp:9,0.3", "--count", "12", "--seed", "4", "--json",
            "--checks", "C4,C7,C10,C17"]
    code, serial, _ = run(capsys, *args)
    code2, parallel, _ = run(capsys, *args, "--jobs", "3")
    assert code == code2 == 0
    assert serial == parallel
    d = json.loads(serial)
    assert [g["graph"]["name"] for g in d["graphs"]] == [f"gnp:9,0.3#{i}" for i in range(12)]


def test_gen(tmp_path, capsys):
    out = tmp_path / "g.txt"
    assert run(capsys, "gen", "--model", "gnp", "--n", "5", "--p", "0", "--seed", "1", "--out", str(out))[0] == 0
    G = parse_edge_list(out.read_text())
    assert G.n == 5 and len(G.isolated_vertices()) == 5
    code, text, _ = run(capsys, "gen", "--model", "gnp", "--n", "5", "--p", "1", "--seed", "1")
    assert parse_edge_list(text).m == 10
    code, text, _ = run(capsys, "gen", "--model", "tree", "--n", "8", "--seed", "3")
    T = parse_edge_list(text)
    assert T.m == 7 and is_tree(T)


def test_fixtures_command(tmp_path, capsys):
    assert run(capsys, "fixtures", "--out", str(tmp_path))[0] == 0
    for name in EDGE_LISTS:
        assert parse_edge_list((tmp_path / f"{name}.txt").read_text()) == fixture(name)
    assert parse_edge_list((tmp_path / "G1.txt").read_text()).m == 5
    assert parse_edge_list((tmp_path / "Gfig3.txt").read_text()).m == 16


def test_report_numbers_respect_chain():
    for name in EDGE_LISTS:
        d = analyze(fixture(name)).to_dict()
        n, zeta, alpha, xi, eps, dc = d["n"], d["zeta"], d["alpha"], d["xi"], d["epsilon"], d["dc"]
        assert n >= zeta >= alpha >= xi >= eps >= dc >= alpha - d["mu"]
        assert d["koenig_egervary"] == (alpha + d["mu"] == n)
    assert "unavailable" not in render_text(analyze(fixture("G2")))
