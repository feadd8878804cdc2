"""
Command-line tests for coalesce.
Each test calls main(argv) and reads the JSON run report from stdout.
"""
import json

import pytest

from coalesce import EXIT_DOMAIN, EXIT_FAILED, EXIT_OK, build_logging_config, main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def report_of(capsys, *argv):
    code, out = run(capsys, *argv)
    return code, json.loads(out)


class TestGeneration:
    """Test graph generation and merging."""

    def test_gen_to_stdout(self, capsys):
        code, out = run(capsys, "gen", "--family", "dumbbell", "--params", "6,6,4", "--out", "-")
        assert code == EXIT_OK
        assert out.splitlines()[0] == "14 15"
        assert len(out.splitlines()) == 16

    def test_gen_to_file(self, capsys, test_output_dir):
        path = test_output_dir / "k5.el"
        code, report = report_of(capsys, "gen", "--family", "complete", "--params", "5", "--out", str(path))
        assert code == EXIT_OK
        assert report["result"]["n"] == 5
        assert report["result"]["m"] == 10
        assert path.read_text().startswith("5 10\n")

    def test_gen_wrong_arity(self, capsys):
        code, report = report_of(capsys, "gen", "--family", "cycle", "--params", "4,5")
        assert code == EXIT_DOMAIN
        assert report["error"]["type"] == "ParamOutOfRange"

    def test_coalesce_files(self, capsys, triangle_file, test_output_dir):
        path = test_output_dir / "diamond.el"
        code, report = report_of(
            capsys, "coalesce", "--g1", str(triangle_file), "--q1", "0,1",
            "--g2", str(triangle_file), "--q2", "0,1", "--out", str(path),
        )
        assert code == EXIT_OK
        assert (report["result"]["n"], report["result"]["m"], report["result"]["k"]) == (4, 5, 2)
        assert len(report["inputs"]) == 2

    def test_coalesce_not_a_clique(self, capsys, path_file, triangle_file):
        code, report = report_of(
            capsys, "coalesce", "--g1", str(path_file), "--q1", "0,2",
            "--g2", str(triangle_file), "--q2", "0,1",
        )
        assert code == EXIT_DOMAIN
        assert report["error"]["type"] == "NotAClique"


class TestAnalysis:
    """Test the single-graph commands."""

    def test_indices(self, capsys, molecule_file):
        code, report = report_of(capsys, "indices", "--in", str(molecule_file))
        assert code == EXIT_OK
        assert report["result"] == {"W": 343, "WW": "1032", "F": 150, "M1": 66, "NK": 36864}
        assert report["inputs"][0]["n"] == 14
        assert report["status"]["code"] == 0

    def test_analyze_path(self, capsys, path_file):
        code, report = report_of(capsys, "analyze", "--in", str(path_file))
        assert code == EXIT_OK
        result = report["result"]
        assert result["girth"] == "Infinite"
        assert result["degrees"] == [1, 2, 2, 1]
        assert result["hamiltonian"] is False
        assert result["vertex_connectivity"] == 1

    def test_charpoly(self, capsys, triangle_file):
        code, report = report_of(capsys, "charpoly", "--in", str(triangle_file))
        assert code == EXIT_OK
        assert report["result"]["coefficients"] == ["-2/1", "-3/1", "0/1", "1/1"]
        assert report["result"]["text"] == "x^3 - 3*x - 2"

    def test_spectrum(self, capsys, triangle_file):
        code, report = report_of(capsys, "spectrum", "--in", str(triangle_file), "--alpha", "1/2")
        assert code == EXIT_OK
        assert report["result"]["alpha"] == "1/2"
        assert float(report["result"]["energy"]) == pytest.approx(2.0, abs=1e-9)

    def test_decimal_alpha_rejected(self, capsys, triangle_file):
        code, report = report_of(capsys, "spectrum", "--in", str(triangle_file), "--alpha", "0.5")
        assert code == EXIT_DOMAIN
        assert report["error"]["type"] == "ParamOutOfRange"
        assert report["status"]["code"] == EXIT_DOMAIN

    def test_missing_file(self, capsys, test_output_dir):
        code, report = report_of(capsys, "indices", "--in", str(test_output_dir / "absent.el"))
        assert code == EXIT_DOMAIN
        assert report["error"]["type"] == "FileNotFoundError"

    def test_malformed_file(self, capsys, test_output_dir):
        path = test_output_dir / "bad.el"
        path.write_text("3 2\n0 1\n1 x\n")
        code, report = report_of(capsys, "indices", "--in", str(path))
        assert code == EXIT_DOMAIN
        assert report["error"]["type"] == "ParseError"

    def test_bad_environment_limit(self, capsys, monkeypatch, triangle_file):
        monkeypatch.setenv("COALESCE_LIMIT", "lots")
        code, report = report_of(capsys, "analyze", "--in", str(triangle_file))
        assert code == EXIT_DOMAIN
        assert report["error"]["type"] == "ConfigError"


class TestVerify:
    """Test the verification subcommands on small inputs."""

    def test_single_pair_identity(self, capsys, triangle_file):
        code, report = report_of(
            capsys, "verify", "decomposition", "--g1", str(triangle_file), "--q1", "0",
            "--g2", str(triangle_file), "--q2", "1", "--alpha", "0",
        )
        assert code == EXIT_OK
        assert report["result"]["equal"] is True
        assert [row["status"] for row in report["rows"]] == ["PASS"]

    def test_single_pair_needs_all_flags(self, capsys, triangle_file):
        code, report = report_of(capsys, "verify", "decomposition", "--g1", str(triangle_file))
        assert code == EXIT_DOMAIN

    def test_clique_too_large_for_sweep(self, capsys):
        code, report = report_of(capsys, "verify", "decomposition", "--k", "7", "--samples", "2")
        assert code == EXIT_DOMAIN
        assert report["error"]["type"] == "ParamOutOfRange"
        assert report["error"]["details"] == {"k": 7, "max_order": 10}

    def test_lollipop_sweep(self, capsys):
        code, report = report_of(
            capsys, "verify", "decomposition", "--form", "lollipop",
            "--m", "3..4", "--n", "2..3", "--alpha", "0,1/3",
        )
        assert code == EXIT_OK
        assert len(report["rows"]) == 8
        assert report["status"]["counts"] == {"PASS": 8}

    def test_kite_hyper_wiener_fails(self, capsys):
        code, report = report_of(
            capsys, "verify", "index-forms", "--family", "kite", "--which", "WW", "--grid", "n=4;m=3",
        )
        assert code == EXIT_FAILED
        assert report["result"]["failed_cells"][0]["check"] == "kite.WW"
        assert report["rows"][0]["detail"]["summand"] == 1

    def test_unknown_index_name(self, capsys):
        code, report = report_of(capsys, "verify", "index-forms", "--which", "W,XYZ")
        assert code == EXIT_DOMAIN

    def test_energy_located_mismatch(self, capsys):
        code, report = report_of(
            capsys, "verify", "energy-corollaries", "--variant", "general",
            "--m", "4", "--n", "5", "--alpha", "1/2",
        )
        assert code == EXIT_FAILED
        assert report["result"]["mismatch_locations"] == [1]

    def test_complete_forms_pass(self, capsys):
        code, report = report_of(
            capsys, "verify", "complete-forms", "--grid", "m=2..4;n=3", "--alphas", "0,1/4",
        )
        assert code == EXIT_OK
        assert set(report["status"]["counts"]) == {"PASS"}


class TestDeterminism:
    """Test that repeated runs print identical reports."""

    @pytest.mark.parametrize("argv", [
        ("spectrum", "--alpha", "1/3"),
        ("analyze",),
        ("verify", "decomposition", "--k", "1,2", "--samples", "3", "--seed", "5"),
    ])
    def test_same_stdout_twice(self, capsys, molecule_file, argv):
        if argv[0] != "verify":
            argv = argv[:1] + ("--in", str(molecule_file)) + argv[1:]
        first = run(capsys, *argv)
        second = run(capsys, *argv)
        assert first == second
        assert first[1].endswith("\n")


class TestUsage:
    def test_missing_subcommand(self):
        with pytest.raises(SystemExit) as info:
            main([])
        assert info.value.code == 2

    def test_unknown_family(self):
        with pytest.raises(SystemExit) as info:
            main(["gen", "--family", "wheel", "--params", "5"])
        assert info.value.code == 2

    def test_logging_config(self):
        config = build_logging_config("DEBUG", json_format=True)
        assert config["handlers"]["stderr"]["formatter"] == "json"
        assert config["loggers"]["coalesce"]["level"] == "DEBUG"
