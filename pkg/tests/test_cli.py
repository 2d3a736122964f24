import json

import pytest

from beloch.cli import _default_seed, _merge_paired, main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv)
    assert code == 0, err
    return json.loads(out)


class TestSolve:
    def test_human_output(self, capsys):
        code, out, err = run(capsys, "solve", "--a", "0", "--b", "0", "--c", "-6")
        assert code == 0
        assert "r = 1.81712" in out

    def test_json_output(self, capsys):
        payload = run_json(
            capsys, "solve", "--a", "0", "--b", "1", "--c", "0", "--json"
        )
        assert payload["schema"] == 1
        assert payload["command"] == "solve"
        roots = payload["roots"]
        assert [round(r["r"], 9) for r in roots] == [-1.0, 0.0, 1.0]
        for r in roots:
            assert r["residual_i"] == 0.0
            assert r["residual_ii"] <= 1e-9
            assert r["a_image"][0] == 1.0
            assert set(r["fold"]) == {"a", "b", "c"}

    def test_strictly_monotone_cubic_has_one_root(self, capsys):
        payload = run_json(
            capsys, "solve", "--a", "0", "--b", "-3", "--c", "5", "--json"
        )
        assert len(payload["roots"]) == 1


class TestAnalyze:
    def test_node_json(self, capsys):
        payload = run_json(capsys, "analyze", "--p", "2", "--q", "1", "--json")
        assert payload["shape"] == "node"
        assert payload["discriminant"] == 9.0
        assert payload["hessian_det"] == -36.0
        assert payload["special_parameters"] == [-1.0, 2.0]
        assert payload["fg"]["count"] == "two_or_more"
        assert len(payload["fg"]["witnesses"]) == 2
        w = payload["winding"]
        assert w["value"] == 1
        assert w["ray_crossings"] == {"east": 1, "north": 1, "west": 1, "south": 1}
        assert w["center_on_curve"] is False
        assert w["loop_range"] == [-1.0, 2.0]
        assert len(payload["errata_notes"]) == 2

    def test_isolated_json(self, capsys):
        payload = run_json(capsys, "analyze", "--p", "-2", "--q", "1", "--json")
        assert payload["shape"] == "isolated_point"
        assert payload["special_parameters"] == []
        assert payload["fg"]["count"] == "zero"
        assert payload["winding"] is None
        assert payload["errata_notes"] == []

    def test_cusp_json(self, capsys):
        payload = run_json(capsys, "analyze", "--p", "-1", "--q", "2", "--json")
        assert payload["shape"] == "cusp"
        assert payload["special_parameters"] == pytest.approx([1.0])
        assert payload["winding"] is None
        assert len(payload["errata_notes"]) == 1
        assert "contact parameters" in payload["errata_notes"][0]

    def test_general_frame_drops_fg(self, capsys):
        payload = run_json(
            capsys, "analyze", "--p", "1", "--q", "1", "--alpha", "3", "--json"
        )
        assert payload["alpha"] == 3.0
        assert payload["fg"] is None

    def test_human_output(self, capsys):
        code, out, _ = run(capsys, "analyze", "--p", "2", "--q", "1")
        assert code == 0
        assert "shape: node" in out
        assert "winding around A: 1" in out


class TestWinding:
    def test_undefined_when_a_is_on_the_loop(self, capsys):
        payload = run_json(capsys, "winding", "--p", "1", "--q", "2", "--json")
        assert payload["value"] is None
        assert payload["min_distance"] <= 1e-9
        assert payload["center_on_curve"] is True

    def test_isolated_point_is_an_error(self, capsys):
        code, out, err = run(capsys, "winding", "--p", "-2", "--q", "1")
        assert code == 1
        assert "NotANode" in err

    def test_human_output(self, capsys):
        code, out, _ = run(capsys, "winding", "--p", "2", "--q", "1")
        assert code == 0
        assert "winding around A: 1" in out
        assert "east=1 north=1 west=1 south=1" in out


class TestSurface:
    def test_node_json(self, capsys):
        payload = run_json(capsys, "surface", "--p", "1", "--q", "1", "--json")
        assert payload["sign_class"] == 1
        assert len(payload["critical_points"]) == 2
        assert payload["matches_structure"] is True
        assert payload["observed_polarity"] == "local_min"
        kinds = {cp["kind"] for cp in payload["critical_points"]}
        assert kinds == {"saddle", "local_min"}

    def test_cusp_json(self, capsys):
        payload = run_json(capsys, "surface", "--p", "-1", "--q", "2", "--json")
        assert payload["sign_class"] == 0
        assert len(payload["critical_points"]) == 1
        assert payload["critical_points"][0]["kind"] == "degenerate"
        assert payload["matches_structure"] is True


class TestClassifyGeneral:
    def test_audit_json(self, capsys):
        payload = run_json(
            capsys, "classify-general", "--coeffs", "1,1,4,-2,1", "--json"
        )
        assert payload["paper_value"] == 0.0
        assert payload["corrected_value"] == 2.0
        assert payload["hessian_det"] == -8.0
        assert payload["shape"] == "node"
        assert payload["discrepancy"] is True
        assert payload["normalization"] == {
            "beta": 1.0,
            "alpha": 1.0,
            "p": -1.0,
            "q": 2.0,
        }

    def test_discrepancy_note_in_human_output(self, capsys):
        code, out, _ = run(capsys, "classify-general", "--coeffs", "1,1,4,-2,1")
        assert code == 0
        assert "note:" in out

    def test_wrong_arity_is_usage_error(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["classify-general", "--coeffs", "1,2,3"])
        assert exc.value.code == 2

    def test_sign_obstruction_maps_to_exit_one(self, capsys):
        code, _, err = run(capsys, "classify-general", "--coeffs", "1,1,1,1,-1")
        assert code == 1
        assert "SignObstruction" in err


class TestPlot:
    def test_writes_svg(self, capsys, tmp_path):
        out_file = tmp_path / "node.svg"
        code, out, _ = run(
            capsys, "plot", "--p", "2", "--q", "1", "--out", str(out_file)
        )
        assert code == 0
        assert str(out_file) in out
        text = out_file.read_text()
        assert text.startswith('<?xml version="1.0"')
        assert "</svg>" in text

    def test_window_flag(self, capsys, tmp_path):
        out_file = tmp_path / "w.svg"
        code, _, _ = run(
            capsys,
            "plot",
            "--p",
            "2",
            "--q",
            "1",
            "--out",
            str(out_file),
            "--window",
            "-3,-3,3,3",
        )
        assert code == 0
        assert out_file.exists()

    def test_bad_window_is_a_library_error(self, capsys, tmp_path):
        code, _, err = run(
            capsys,
            "plot",
            "--p",
            "2",
            "--q",
            "1",
            "--out",
            str(tmp_path / "x.svg"),
            "--window",
            "0,0,0,1",
        )
        assert code == 1
        assert "BadRange" in err


class TestOrbitCsv:
    def test_writes_rows(self, capsys, tmp_path):
        out_file = tmp_path / "orbit.csv"
        code, out, _ = run(
            capsys,
            "orbit-csv",
            "--p",
            "2",
            "--q",
            "1",
            "--range",
            "-1,2",
            "--n",
            "7",
            "--out",
            str(out_file),
        )
        assert code == 0
        lines = out_file.read_text().splitlines()
        assert lines[0] == "r,s,t"
        assert len(lines) == 8
        assert lines[1].split(",")[0] == "-1"

    def test_reversed_range_fails(self, capsys, tmp_path):
        code, _, err = run(
            capsys,
            "orbit-csv",
            "--p",
            "2",
            "--q",
            "1",
            "--range",
            "2,-1",
            "--n",
            "5",
            "--out",
            str(tmp_path / "x.csv"),
        )
        assert code == 1
        assert "BadRange" in err


class TestVerify:
    def test_all_suites_pass(self, capsys):
        code, out, _ = run(capsys, "verify", "--seed", "3", "--trials", "5")
        assert code == 0
        assert "all 7 suites passed" in out
        assert out.count("ok    ") == 7


class TestParsing:
    def test_merge_paired(self):
        argv = ["orbit-csv", "--range", "-1,2", "--n", "5"]
        merged = _merge_paired(argv)
        assert "--range=-1,2" in merged
        assert "--n" in merged

    def test_default_seed_env(self, monkeypatch):
        monkeypatch.setenv("BELOCH_SEED", "7")
        assert _default_seed() == 7
        monkeypatch.setenv("BELOCH_SEED", "junk")
        assert _default_seed() == 0
        monkeypatch.delenv("BELOCH_SEED")
        assert _default_seed() == 0

    def test_missing_subcommand(self):
        with pytest.raises(SystemExit) as exc:
            main([])
        assert exc.value.code == 2

    def test_unknown_flag(self):
        with pytest.raises(SystemExit) as exc:
            main(["solve", "--a", "1", "--b", "1", "--c", "1", "--frob"])
        assert exc.value.code == 2
