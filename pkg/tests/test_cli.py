"""
Test cases for the newt command-line interface.
"""

import json
from pathlib import Path

import pytest
from click.testing import CliRunner

from newt.analyzer import IdealAnalyzer
from newt.cli import EXIT_FIELD, EXIT_INPUT, EXIT_INTERNAL, main

IDEALS = Path(__file__).resolve().parent.parent / "ideals"


def ideal(name: str) -> str:
    return str(IDEALS / name)


class TestCli:
    """Test cases for the newt commands."""

    @pytest.fixture
    def runner(self):
        return CliRunner()

    @pytest.fixture(autouse=True)
    def clean_env(self, monkeypatch):
        for var in ("NEWT_MAX_DEPTH", "NEWT_STRICT_FIELD", "NEWT_SEED"):
            monkeypatch.delenv(var, raising=False)

    def test_polygon(self, runner):
        """Test the polygon of the first example."""
        result = runner.invoke(main, ["polygon", ideal("example1.ideal")])
        assert result.exit_code == 0
        assert "Newton polygon: (0,5) (1,3) (4,0)" in result.output
        assert "height=5" in result.output
        assert "F(1,X)=X - 3" in result.output

    def test_polygon_json(self, runner):
        """Test the JSON polygon report."""
        result = runner.invoke(main, ["polygon", "--json", ideal("example2.ideal")])
        assert result.exit_code == 0
        report = json.loads(result.output)
        assert [face["d"] for face in report["faces"]] == [3, 1]

    def test_process(self, runner):
        """Test the printed process."""
        result = runner.invoke(main, ["process", ideal("example2.ideal")])
        assert result.exit_code == 0
        assert "{(σ(1,3,GENERIC); 1), (σ(1,1,GENERIC); 3)}" in result.output

    def test_tree_dot(self, runner):
        """Test the DOT output."""
        result = runner.invoke(main, ["tree", "--dot", ideal("example2.ideal")])
        assert result.exit_code == 0
        assert result.output.startswith("graph newton_tree {")
        assert 'label="(4,3)"' in result.output

    def test_tree_json(self, runner):
        """Test the JSON tree."""
        result = runner.invoke(main, ["tree", "--json", ideal("example1.ideal")])
        assert result.exit_code == 0
        report = json.loads(result.output)
        assert len(report["vertices"]) == 4

    def test_invariants(self, runner):
        """Test the invariants of the second example."""
        result = runner.invoke(main, ["invariants", ideal("example2.ideal")])
        assert result.exit_code == 0
        for line in ("depth=1", "nondegenerate=true", "m=4", "e=18", "e_area=18", "j=18"):
            assert line in result.output.splitlines()
        assert "lojasiewicz=6" in result.output
        assert "closure=(x,y)^3(x^3,y)" in result.output

    def test_invariants_json(self, runner):
        """Test the JSON invariants report."""
        result = runner.invoke(main, ["invariants", "--json", ideal("example7.ideal")])
        assert result.exit_code == 0
        report = json.loads(result.output)
        assert report["e"] == 16
        assert report["lojasiewicz"] == {"num": 16, "den": 1}

    def test_invariants_not_finite_codim(self, runner):
        """Test that only the general invariants are printed for a common factor."""
        result = runner.invoke(main, ["invariants", ideal("example4.ideal")])
        assert result.exit_code == 0
        assert "j=24" in result.output
        assert not any(line.startswith("e=") for line in result.output.splitlines())

    def test_valuation(self, runner):
        """Test N_v(x) at every vertex."""
        result = runner.invoke(main, ["valuation", ideal("example2.ideal"), "--poly", "x"])
        assert result.exit_code == 0
        assert "v0: N_v(x)=1" in result.output
        assert "v1: N_v(x)=1" in result.output

    def test_valuation_unknown_vertex(self, runner):
        """Test that a missing vertex is an input error."""
        result = runner.invoke(
            main, ["valuation", ideal("example2.ideal"), "--poly", "x", "--vertex", "9"]
        )
        assert result.exit_code == EXIT_INPUT

    def test_degree(self, runner):
        """Test the degree function."""
        result = runner.invoke(main, ["degree", ideal("example2.ideal"), "--poly", "y"])
        assert result.exit_code == 0
        assert "d_I(y)=6" in result.output

    def test_closure_equal(self, runner):
        """Test two ideals with the same closure."""
        result = runner.invoke(main, ["closure-eq", ideal("ex6a.ideal"), ideal("ex6b.ideal")])
        assert result.exit_code == 0
        assert result.output.strip() == "EQUAL"

    def test_closure_different(self, runner):
        """Test two ideals with isomorphic trees and different closures."""
        result = runner.invoke(main, ["closure-eq", ideal("ex5a.ideal"), ideal("ex5b.ideal")])
        assert result.exit_code == 0
        assert result.output.strip() == "DIFFERENT"

    def test_factor(self, runner):
        """Test the Zariski factorization."""
        result = runner.invoke(main, ["factor", ideal("example2.ideal")])
        assert result.exit_code == 0
        assert result.output.strip() == "(x,y)^3(x^3,y)"

    def test_gencurve(self, runner):
        """Test the generic curve tree of the common-factor example."""
        result = runner.invoke(main, ["gencurve", "--json", ideal("example4.ideal")])
        assert result.exit_code == 0
        report = json.loads(result.output)
        assert len([a for a in report["arrows"] if a["kind"] == "generic"]) == 4

    def test_gencurve_principal(self, runner, tmp_path):
        """Test that a principal ideal is refused."""
        path = tmp_path / "cusp.ideal"
        path.write_text("y^2-x^3\n")
        result = runner.invoke(main, ["gencurve", str(path)])
        assert result.exit_code == EXIT_INPUT

    def test_check(self, runner):
        """Test the self-checks on the second example."""
        result = runner.invoke(main, ["check", "--seed", "3", ideal("example2.ideal")])
        assert result.exit_code == 0
        assert "✅ e oracle: 18 vs 18" in result.output
        assert "❌" not in result.output

    def test_syntax_error(self, runner, tmp_path):
        """Test the exit code for a malformed ideal file."""
        path = tmp_path / "bad.ideal"
        path.write_text("x+*y\n")
        result = runner.invoke(main, ["process", str(path)])
        assert result.exit_code == EXIT_INPUT

    def test_irrational_root(self, runner, tmp_path):
        """Test the exit code when an irrational root is needed."""
        path = tmp_path / "sqrt2.ideal"
        path.write_text("y^2-2*x^2\nx^3\n")
        result = runner.invoke(main, ["process", str(path)])
        assert result.exit_code == EXIT_FIELD

    def test_max_depth_option(self, runner):
        """Test that --max-depth bounds the recursion."""
        result = runner.invoke(main, ["tree", "--max-depth", "2", ideal("example3.ideal")])
        assert result.exit_code == EXIT_INPUT

    def test_config_file(self, runner, tmp_path):
        """Test a JSON configuration file."""
        config = tmp_path / "run.json"
        config.write_text(json.dumps({"max_depth": 2}))
        result = runner.invoke(
            main, ["--config", str(config), "tree", ideal("example3.ideal")]
        )
        assert result.exit_code == EXIT_INPUT

    def test_environment(self, runner, monkeypatch):
        """Test NEWT_* environment variables."""
        monkeypatch.setenv("NEWT_MAX_DEPTH", "2")
        result = runner.invoke(main, ["tree", ideal("example3.ideal")])
        assert result.exit_code == EXIT_INPUT

    def test_save_dir(self, runner, tmp_path):
        """Test that reports are stored with --save-dir."""
        save_dir = tmp_path / "reports"
        result = runner.invoke(
            main, ["--save-dir", str(save_dir), "invariants", ideal("example2.ideal")]
        )
        assert result.exit_code == 0
        stored = json.loads((save_dir / "reports" / "example2-invariants.json").read_text())
        assert stored["e"] == 18
        index = json.loads((save_dir / "index.json").read_text())
        assert index["reports"]["example2-invariants"]["command"] == "invariants"

    def test_degree_of_unit(self, runner):
        """Test that d_I of a unit is an input error."""
        result = runner.invoke(main, ["degree", ideal("example2.ideal"), "--poly", "1+x"])
        assert result.exit_code == EXIT_INPUT

    @pytest.mark.parametrize("error", [ZeroDivisionError("division by zero"), ValueError("bad")])
    def test_arithmetic_failure(self, runner, monkeypatch, error):
        """Test that errors escaping the arithmetic layer exit with the internal code."""

        def fail(self, ideal):
            raise error

        monkeypatch.setattr(IdealAnalyzer, "run", fail)
        result = runner.invoke(main, ["process", ideal("example2.ideal")])
        assert result.exit_code == EXIT_INTERNAL
        assert "Traceback" not in result.output
