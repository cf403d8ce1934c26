"""Command-line behavior: worked results, plots, determinism, errors."""

import json
import shutil
import subprocess
import sys
from pathlib import Path

import pytest

from fdist.cli import main

DATA = str(Path(__file__).resolve().parent.parent / "data" / "worked_sets.json")


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv)
    assert code == 0, err
    assert err == ""
    return json.loads(out)


def write_doc(tmp_path, doc, name="sets.json"):
    p = tmp_path / name
    p.write_text(json.dumps(doc))
    return str(p)


def entries(mass_doc):
    return [(tuple(map(tuple, e["focal"])) if e["focal"] and isinstance(e["focal"][0], list) else tuple(e["focal"]), e["mass"]) for e in mass_doc["entries"]]


class TestMassCommand:
    def test_points_set_uses_declared_slices(self, capsys):
        doc = run_json(capsys, "mass", DATA, "A")
        assert doc["command"] == "mass"
        assert doc["set"] == "A"
        assert entries(doc["mass"]) == [
            ((("1", "5"),), "0.5"),
            ((("2", "4"),), "0.5"),
        ]
        assert [s["mu"] for s in doc["fuzzy"]] == ["0.5", "1", "0.5"]

    def test_slices_flag_overrides(self, capsys):
        doc = run_json(capsys, "mass", DATA, "A", "--slices", "4")
        assert entries(doc["mass"]) == [
            ((("1", "5"),), "0.25"),
            ((("1.5", "4.5"),), "0.25"),
            ((("2", "4"),), "0.25"),
            ((("2.5", "3.5"),), "0.25"),
        ]

    def test_discrete_set_has_label_mass_and_no_fuzzy(self, capsys):
        doc = run_json(capsys, "mass", DATA, "claim")
        assert entries(doc["mass"]) == [
            (("a",), "0.3"),
            (("a", "b"), "0.5"),
            (("a", "b", "c"), "0.2"),
        ]
        assert "fuzzy" not in doc

    def test_mass_kind_passes_through(self, capsys):
        doc = run_json(capsys, "mass", DATA, "subA")
        assert entries(doc["mass"]) == [((("1", "4"),), "0.5"), ((), "0.5")]
        assert [s["mu"] for s in doc["fuzzy"]] == ["0.5"]

    def test_output_reparses_as_input(self, capsys, tmp_path):
        doc = run_json(capsys, "mass", DATA, "B")
        spec = write_doc(tmp_path, {"sets": [doc["mass"]]})
        again = run_json(capsys, "mass", spec, "B")
        assert again["mass"] == doc["mass"]


class TestDistanceCommand:
    def test_default_strategy_is_diagonal_for_normal_sets(self, capsys):
        doc = run_json(capsys, "distance", DATA, "A", "B")
        assert doc["strategy"] == "diagonal"
        assert entries(doc["mass"]) == [
            ((("1", "9"),), "0.5"),
            ((("3", "7"),), "0.5"),
        ]

    def test_product_strategy_worked_example(self, capsys):
        doc = run_json(capsys, "distance", DATA, "A", "B", "--strategy", "product")
        assert entries(doc["mass"]) == [
            ((("1", "9"),), "0.25"),
            ((("2", "8"),), "0.5"),
            ((("3", "7"),), "0.25"),
        ]
        assert [(s["mu"], s["lo"], s["hi"]) for s in doc["fuzzy"]] == [
            ("0.25", "1", "2"),
            ("0.75", "2", "3"),
            ("1", "3", "7"),
            ("0.75", "7", "8"),
            ("0.25", "8", "9"),
        ]

    def test_four_slice_product(self, capsys):
        doc = run_json(capsys, "distance", DATA, "A4", "B4", "--strategy", "product")
        assert entries(doc["mass"]) == [
            ((("1", "9"),), "0.0625"),
            ((("1.5", "8.5"),), "0.125"),
            ((("2", "8"),), "0.1875"),
            ((("2.5", "7.5"),), "0.25"),
            ((("3", "7"),), "0.1875"),
            ((("3.5", "6.5"),), "0.125"),
            ((("4", "6"),), "0.0625"),
        ]

    def test_antidiagonal_collapses_symmetric_pair(self, capsys):
        doc = run_json(capsys, "distance", DATA, "A", "B", "--strategy", "antidiagonal")
        assert entries(doc["mass"]) == [((("2", "8"),), "1")]

    def test_directional_and_its_reverse_negate(self, capsys):
        fwd = run_json(capsys, "distance", DATA, "narrowA", "narrowB", "--directional")
        rev = run_json(capsys, "distance", DATA, "narrowB", "narrowA", "--directional")
        assert entries(fwd["mass"]) == [
            ((("2", "8"),), "0.5"),
            ((("4", "6"),), "0.5"),
        ]
        assert entries(rev["mass"]) == [
            ((("-8", "-2"),), "0.5"),
            ((("-6", "-4"),), "0.5"),
        ]
        assert fwd["directional"] is True

    def test_subnormal_input_defaults_to_product(self, capsys):
        doc = run_json(capsys, "distance", DATA, "subA", "narrowB")
        assert doc["strategy"] == "product"
        assert entries(doc["mass"]) == [
            ((("2", "8"),), "0.25"),
            ((("3", "7"),), "0.25"),
            ((), "0.5"),
        ]
        assert [(s["mu"], s["lo"], s["hi"]) for s in doc["fuzzy"]] == [
            ("0.25", "2", "3"),
            ("0.5", "3", "7"),
            ("0.25", "7", "8"),
        ]

    def test_skewed_mixture_against_narrow_triangle(self, capsys):
        doc = run_json(capsys, "distance", DATA, "forkSkewA", "narrowB")
        assert doc["strategy"] == "diagonal"
        assert entries(doc["mass"]) == [
            ((("1", "8"),), "0.5"),
            ((("2", "4"), ("5", "7")), "0.25"),
            ((("5", "7"),), "0.25"),
        ]
        assert [(s["mu"], s["lo"], s["hi"]) for s in doc["fuzzy"]] == [
            ("0.5", "1", "2"),
            ("0.75", "2", "4"),
            ("0.5", "4", "5"),
            ("1", "5", "7"),
            ("0.5", "7", "8"),
        ]

    def test_result_mass_feeds_back_into_defuzz(self, capsys, tmp_path):
        doc = run_json(capsys, "distance", DATA, "narrowA", "narrowB", "--directional")
        spec = write_doc(tmp_path, {"sets": [doc["mass"]]})
        summary = run_json(capsys, "defuzz", spec, "D(narrowA,narrowB)")
        assert summary["max_likelihood"] == [["4", "6"]]
        assert summary["centre_of_gravity"] == "5"


class TestPlots:
    def test_plot_rows_for_diagonal_distance(self, capsys):
        code, out, err = run(capsys, "distance", DATA, "A", "B", "--plot-step", "1")
        assert code == 0
        assert out.splitlines() == [
            "x,mu",
            "1,0.5",
            "2,0.5",
            "3,1",
            "4,1",
            "5,1",
            "6,1",
            "7,1",
            "8,0.5",
            "9,0.5",
        ]

    def test_fractional_step(self, capsys):
        code, out, err = run(
            capsys, "distance", DATA, "forkSkewA", "narrowB", "--plot-step", "0.5"
        )
        rows = dict(line.split(",") for line in out.splitlines()[1:])
        assert out.splitlines()[0] == "x,mu"
        assert rows["3"] == "0.75"
        assert rows["4"] == "0.75"
        assert rows["4.5"] == "0.5"
        assert rows["6"] == "1"

    def test_empty_result_plots_header_only(self, capsys, tmp_path):
        spec = write_doc(
            tmp_path,
            {"sets": [{"name": "void", "kind": "mass", "entries": [{"focal": [], "mass": 1}]}]},
        )
        code, out, err = run(capsys, "distance", spec, "void", "void", "--plot-step", "1")
        assert code == 0
        assert out == "x,mu\n"

    def test_plot_step_must_be_positive(self, capsys):
        code, out, err = run(capsys, "distance", DATA, "A", "B", "--plot-step", "0")
        assert code == 2
        assert "plot-step" in err


class TestUnifyCommand:
    def test_both_routings_by_default(self, capsys):
        doc = run_json(capsys, "unify", DATA, "claim", "evidence")
        assert doc["product"] == {"t": "0.67", "f": "0", "ft": "0.23", "empty": "0.1"}
        assert doc["maximal"] == {"t": "0.5", "f": "0", "ft": "0.4", "empty": "0.1"}

    def test_single_routing(self, capsys):
        doc = run_json(capsys, "unify", DATA, "claim", "evidence", "--routing", "product")
        assert "maximal" not in doc
        doc = run_json(capsys, "unify", DATA, "claim", "evidence", "--routing", "maximal")
        assert "product" not in doc

    def test_numeric_inputs_rejected(self, capsys):
        code, out, err = run(capsys, "unify", DATA, "narrowA", "evidence")
        assert code == 2
        assert "must be discrete" in err


class TestDefuzzCommand:
    def test_narrow_triangles(self, capsys):
        a = run_json(capsys, "defuzz", DATA, "narrowA")
        b = run_json(capsys, "defuzz", DATA, "narrowB")
        assert a["max_likelihood"] == [["2", "3"]]
        assert a["centre_of_gravity"] == "2.5"
        assert b["max_likelihood"] == [["7", "8"]]
        assert b["centre_of_gravity"] == "7.5"

    def test_subnormal_set_reports_unassigned_mass(self, capsys):
        doc = run_json(capsys, "defuzz", DATA, "subA")
        assert doc["unassigned"] == "0.5"
        assert doc["max_likelihood"] == [["1", "4"]]
        assert doc["centre_of_gravity"] == "2.5"

    def test_points_set_defuzzifies(self, capsys):
        doc = run_json(capsys, "defuzz", DATA, "A")
        assert doc["centre_of_gravity"] == "3"

    def test_degenerate_support_is_an_error(self, capsys, tmp_path):
        spec = write_doc(
            tmp_path,
            {"sets": [{"name": "pt", "kind": "mass", "entries": [{"focal": [[2, 2]], "mass": 1}]}]},
        )
        code, out, err = run(capsys, "defuzz", spec, "pt")
        assert code == 2
        assert "zero-length" in err


class TestRestrictCheckCommand:
    def test_two_slice_mixture_found(self, capsys):
        doc = run_json(capsys, "restrict-check", DATA, "prod2", "--basis", "diag2,anti2")
        assert doc["coefficients"] == ["0.5", "0.5"]
        assert doc["reachability"] == {
            "diag2": {"basis_to_target": False, "target_to_basis": False},
            "anti2": {"basis_to_target": False, "target_to_basis": False},
        }

    def test_four_slice_mixture_does_not_exist(self, capsys):
        doc = run_json(capsys, "restrict-check", DATA, "prod4", "--basis", "diag4,anti4")
        assert doc["coefficients"] is None

    def test_reachable_basis_reported(self, capsys, tmp_path):
        spec = write_doc(
            tmp_path,
            {
                "sets": [
                    {"name": "whole", "kind": "mass", "entries": [{"focal": [[2, 8]], "mass": 1}]},
                    {
                        "name": "split",
                        "kind": "mass",
                        "entries": [
                            {"focal": [[2, 8]], "mass": "0.5"},
                            {"focal": [[3, 7]], "mass": "0.25"},
                            {"focal": [[4, 6]], "mass": "0.25"},
                        ],
                    },
                ]
            },
        )
        doc = run_json(capsys, "restrict-check", spec, "split", "--basis", "whole")
        assert doc["coefficients"] is None
        assert doc["reachability"]["whole"] == {
            "basis_to_target": True,
            "target_to_basis": False,
        }

    def test_target_in_basis_is_identity(self, capsys):
        doc = run_json(capsys, "restrict-check", DATA, "diag2", "--basis", "diag2")
        assert doc["coefficients"] == ["1"]
        assert doc["reachability"]["diag2"] == {
            "basis_to_target": True,
            "target_to_basis": True,
        }

    def test_non_mass_kind_rejected(self, capsys):
        code, out, err = run(capsys, "restrict-check", DATA, "A", "--basis", "diag2")
        assert code == 2
        assert "must be mass kind" in err

    def test_empty_basis_rejected(self, capsys):
        code, out, err = run(capsys, "restrict-check", DATA, "prod2", "--basis", ",")
        assert code == 2
        assert "at least one" in err


class TestErrorsAndEnvironment:
    def test_unknown_set_name(self, capsys):
        code, out, err = run(capsys, "mass", DATA, "nope")
        assert code == 2
        assert out == ""
        assert "unknown set 'nope'" in err

    def test_missing_file(self, capsys, tmp_path):
        code, out, err = run(capsys, "mass", str(tmp_path / "absent.json"), "A")
        assert code == 2
        assert "absent.json" in err

    def test_malformed_json_reports_line(self, capsys, tmp_path):
        p = tmp_path / "bad.json"
        p.write_text('{"sets": [\n  {,}\n]}')
        code, out, err = run(capsys, "mass", str(p), "A")
        assert code == 2
        assert "line 2" in err

    def test_bad_strategy_flag_exits_two(self, capsys):
        with pytest.raises(SystemExit) as info:
            main(["distance", DATA, "A", "B", "--strategy", "zigzag"])
        assert info.value.code == 2

    def test_mass_sum_enforced_by_default(self, capsys, tmp_path):
        spec = write_doc(
            tmp_path,
            {"sets": [{"name": "m", "kind": "mass", "entries": [{"focal": [[0, 1]], "mass": "0.999"}]}]},
        )
        code, out, err = run(capsys, "mass", spec, "m")
        assert code == 2

    def test_tolerance_env_relaxes_validation(self, capsys, tmp_path, monkeypatch):
        spec = write_doc(
            tmp_path,
            {"sets": [{"name": "m", "kind": "mass", "entries": [{"focal": [[0, 1]], "mass": "0.999"}]}]},
        )
        monkeypatch.setenv("FDIST_TOLERANCE", "0.01")
        code, out, err = run(capsys, "mass", spec, "m")
        assert code == 0
        assert json.loads(out)["mass"]["entries"][0]["mass"] == "0.999"

    def test_tolerance_env_must_be_numeric(self, capsys, monkeypatch):
        monkeypatch.setenv("FDIST_TOLERANCE", "tiny")
        code, out, err = run(capsys, "mass", DATA, "A")
        assert code == 2
        assert "FDIST_TOLERANCE" in err

    def test_output_is_deterministic(self, capsys):
        first = run(capsys, "distance", DATA, "A4", "B4", "--strategy", "product")
        second = run(capsys, "distance", DATA, "A4", "B4", "--strategy", "product")
        assert first == second
        third = run(capsys, "restrict-check", DATA, "prod4", "--basis", "diag4,anti4")
        fourth = run(capsys, "restrict-check", DATA, "prod4", "--basis", "diag4,anti4")
        assert third == fourth


@pytest.mark.skipif(shutil.which("fdist") is None, reason="console script not on PATH")
def test_console_script_runs():
    proc = subprocess.run(
        ["fdist", "mass", DATA, "A"], capture_output=True, text=True
    )
    assert proc.returncode == 0
    assert '"command": "mass"' in proc.stdout


def test_module_entry_point_runs():
    proc = subprocess.run(
        [sys.executable, "-m", "fdist.cli", "unify", DATA, "claim", "evidence"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["product"]["t"] == "0.67"
