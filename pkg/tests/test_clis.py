import json
import tempfile
import unittest
from pathlib import Path
from unittest.mock import patch

from typer.testing import CliRunner

from torus_tqft.cli import EXIT_PRECONDITION, EXIT_USAGE, EXIT_VALIDATION, app

runner = CliRunner()

TRIVIAL = {
    "name": "trivial",
    "field": {"kind": "rational"},
    "n": 1,
    "rho_a": [[1]],
    "rho_b": [[1]],
    "beta": [1],
    "gamma": [1],
}


class TestCLI(unittest.TestCase):

    def test_version(self):
        result = runner.invoke(app, ["version"])
        self.assertEqual(result.exit_code, 0)
        self.assertIn("torus-tqft 0.1.0", result.stdout)

    def test_decompose(self):
        result = runner.invoke(app, ["decompose", "[[7,-8],[1,-1]]"])
        self.assertEqual(result.exit_code, 0)
        self.assertIn("word: a^6 b^-1 a^-2", result.stdout)
        self.assertIn("continued fraction: [7]", result.stdout)
        self.assertIn("residual D_a power: -2", result.stdout)
        self.assertIn("negated: False", result.stdout)

    def test_decompose_json(self):
        result = runner.invoke(app, ["decompose", "Lambda1", "--json"])
        self.assertEqual(result.exit_code, 0)
        payload = json.loads(result.stdout)
        self.assertEqual(payload["word"], "a^6 b^-1 a^-2")
        self.assertEqual(payload["continued_fraction"], [7])

    def test_decompose_rejects_bad_matrix(self):
        result = runner.invoke(app, ["decompose", "[[1,2],[3,4]]"])
        self.assertEqual(result.exit_code, EXIT_USAGE)
        result = runner.invoke(app, ["decompose", "a^2 c"])
        self.assertEqual(result.exit_code, EXIT_USAGE)
        self.assertIn("Parse error", result.output)

    def test_conjugate(self):
        result = runner.invoke(app, ["conjugate", "a", "b", "--brute-force", "--bound", "5"])
        self.assertEqual(result.exit_code, 0)
        self.assertIn("conjugate: yes", result.stdout)
        self.assertIn("witness: [[", result.stdout)

        result = runner.invoke(app, ["conjugate", "a", "a^-1", "--brute-force", "--bound", "4"])
        self.assertEqual(result.exit_code, 0)
        self.assertIn("conjugate: no", result.stdout)
        self.assertIn("witness: none with entries <= 4", result.stdout)

    def test_bundle_eq(self):
        result = runner.invoke(app, ["bundle-eq", "Y21", "[[106,-189],[-189,337]]"])
        self.assertEqual(result.exit_code, 0)
        self.assertIn("homeomorphic: yes", result.stdout)

        result = runner.invoke(app, ["bundle-eq", "StebeG", "StebeH"])
        self.assertEqual(result.exit_code, 0)
        self.assertIn("homeomorphic: no", result.stdout)

    def test_lens(self):
        result = runner.invoke(app, ["lens", "Lambda1", "Lambda2"])
        self.assertEqual(result.exit_code, 0)
        self.assertIn("A: L(7,1)", result.stdout)
        self.assertIn("B: L(7,2)", result.stdout)
        self.assertIn("homeomorphic: no", result.stdout)

        result = runner.invoke(app, ["lens", "Lambda2", "[[7,5],[4,3]]"])
        self.assertIn("homeomorphic: yes", result.stdout)

    def test_validate_builtin(self):
        result = runner.invoke(app, ["validate", "F2"])
        self.assertEqual(result.exit_code, 0)
        self.assertIn("PASS", result.stdout)
        self.assertIn("All validation checks passed!", result.stdout)

    def test_validate_file(self):
        with tempfile.TemporaryDirectory() as tmp:
            good = Path(tmp) / "good.json"
            good.write_text(json.dumps(TRIVIAL), encoding="utf-8")
            result = runner.invoke(app, ["validate", str(good)])
            self.assertEqual(result.exit_code, 0)

            bad = Path(tmp) / "bad.json"
            bad.write_text(json.dumps(dict(TRIVIAL, beta=[2])), encoding="utf-8")
            result = runner.invoke(app, ["validate", str(bad)])
            self.assertEqual(result.exit_code, EXIT_VALIDATION)
            self.assertIn("FAIL", result.output)
            self.assertIn("Validation failed", result.output)

            broken = Path(tmp) / "broken.json"
            broken.write_text("{", encoding="utf-8")
            result = runner.invoke(app, ["validate", str(broken)])
            self.assertEqual(result.exit_code, EXIT_USAGE)

    def test_validate_zero_dimension(self):
        with tempfile.TemporaryDirectory() as tmp:
            empty = Path(tmp) / "empty.json"
            payload = dict(TRIVIAL, n=0, rho_a=[], rho_b=[], beta=[], gamma=[])
            empty.write_text(json.dumps(payload), encoding="utf-8")
            result = runner.invoke(app, ["validate", str(empty)])
            self.assertEqual(result.exit_code, EXIT_VALIDATION)
            self.assertIn("Validation failed", result.output)
            self.assertIn("must be at least 1", result.output)

            mismatched = Path(tmp) / "mismatched.json"
            mismatched.write_text(json.dumps(dict(TRIVIAL, n=0)), encoding="utf-8")
            result = runner.invoke(app, ["validate", str(mismatched)])
            self.assertEqual(result.exit_code, EXIT_VALIDATION)
            self.assertIn("n is 0, expected at least 1", result.output)

    @patch("torus_tqft.cli.validate")
    def test_value_error_is_a_validation_failure(self, mock_validate):
        mock_validate.side_effect = ValueError("degenerate pairing")
        result = runner.invoke(app, ["validate", "F2"])
        self.assertEqual(result.exit_code, EXIT_VALIDATION)
        self.assertIn("degenerate pairing", result.output)

    def test_validate_unknown_source(self):
        result = runner.invoke(app, ["validate", "F9"])
        self.assertEqual(result.exit_code, EXIT_USAGE)
        self.assertIn("Unknown TQFT: F9", result.output)

    def test_invariant(self):
        result = runner.invoke(app, ["invariant", "-t", "F2", "--lens", "Lambda1"])
        self.assertEqual(result.exit_code, 0)
        self.assertEqual(result.stdout.strip(), "-xi")

        result = runner.invoke(app, ["invariant", "-t", "F3", "--bundle", "1"])
        self.assertEqual(result.stdout.strip(), "3")

        for extra in ([], ["--contraction"]):
            result = runner.invoke(app, ["invariant", "-t", "F3", "--bundle", "a", *extra])
            self.assertEqual(result.exit_code, 0)
            self.assertEqual(result.stdout.strip(), "7/2")

    def test_invariant_json(self):
        result = runner.invoke(app, ["invariant", "-t", "F2", "--lens", "Lambda8", "--json"])
        self.assertEqual(result.exit_code, 0)
        payload = json.loads(result.stdout)
        self.assertEqual(payload["value"], "xi")
        self.assertEqual(payload["kind"], "lens")

    def test_invariant_usage_errors(self):
        result = runner.invoke(app, ["invariant", "-t", "F2"])
        self.assertEqual(result.exit_code, EXIT_USAGE)
        result = runner.invoke(app, ["invariant", "-t", "F2", "--bundle", "a", "--lens", "a"])
        self.assertEqual(result.exit_code, EXIT_USAGE)
        result = runner.invoke(app, ["invariant", "-t", "F1", "--lens", "Lambda1"])
        self.assertEqual(result.exit_code, EXIT_USAGE)
        self.assertIn("no eta", result.output)
        result = runner.invoke(app, ["invariant", "-t", "F9", "--bundle", "a"])
        self.assertEqual(result.exit_code, EXIT_USAGE)

    def test_normalize(self):
        result = runner.invoke(app, ["normalize", "(comp beta gamma)"])
        self.assertEqual(result.exit_code, 0)
        self.assertIn("0 -> 0", result.stdout)
        self.assertIn("C4([[1,0],[0,1]])", result.stdout)

        result = runner.invoke(app, ["normalize", "--canonical", "(comp beta (tens cyl(a) id:1))"])
        self.assertEqual(result.exit_code, 0)
        self.assertIn("2 -> 0", result.stdout)

    def test_normalize_errors(self):
        result = runner.invoke(app, ["normalize", "(comp beta"])
        self.assertEqual(result.exit_code, EXIT_USAGE)
        result = runner.invoke(app, ["normalize", "(comp beta id:1)"])
        self.assertEqual(result.exit_code, EXIT_USAGE)
        self.assertIn("Arity error", result.output)

    def test_equal(self):
        result = runner.invoke(app, ["equal", "(comp beta tau:1,1)", "beta", "-t", "F2"])
        self.assertEqual(result.exit_code, 0)
        self.assertEqual(result.stdout.splitlines()[0], "equal")
        self.assertIn("F2: same matrix", result.stdout)

        result = runner.invoke(app, ["equal", "cyl(a)", "cyl(b)", "-t", "F3"])
        self.assertIn("not equal", result.stdout)
        self.assertIn("F3: different matrices", result.stdout)

        result = runner.invoke(app, ["equal", "id:1", "id:2"])
        self.assertEqual(result.exit_code, EXIT_USAGE)

    def test_reproduce(self):
        result = runner.invoke(app, ["reproduce", "lens-f2"])
        self.assertEqual(result.exit_code, 0)
        self.assertIn(
            "lens-f2 | L(7,1) vs L(7,2) | -xi | -xi | equal"
            " | printed -xi / -1 - 3*xi not reproduced",
            result.stdout,
        )

        result = runner.invoke(app, ["reproduce", "lens-f3"])
        self.assertIn(
            "lens-f3 | L(7,1) vs L(7,2) | 145065/8 | 14295/2 | distinguished", result.stdout
        )
        self.assertNotIn("not reproduced", result.stdout)

        result = runner.invoke(app, ["reproduce", "lens-f2", "--pretty"])
        self.assertEqual(result.exit_code, 0)

        result = runner.invoke(app, ["reproduce", "stebe-f3", "--json"])
        rows = json.loads(result.stdout)
        self.assertEqual(rows[0]["extra"]["valuations"], [-16, -44])

        result = runner.invoke(app, ["reproduce", "bogus"])
        self.assertEqual(result.exit_code, EXIT_USAGE)

    def test_funar(self):
        result = runner.invoke(app, ["funar", "1", "5", "4"])
        self.assertEqual(result.exit_code, 0)
        self.assertIn("G: [[1,25],[4,101]]  b^-4 a^25", result.stdout)
        self.assertIn("H: [[1,1],[100,101]]  b^-100 a^1", result.stdout)

        result = runner.invoke(app, ["funar", "--", "-1", "5", "4"])
        self.assertEqual(result.exit_code, 0)
        self.assertIn("G: [[1,-25],[-4,101]]", result.stdout)

    def test_funar_precondition(self):
        result = runner.invoke(app, ["funar", "1", "7", "4"])
        self.assertEqual(result.exit_code, EXIT_PRECONDITION)
        self.assertIn("Precondition failed", result.output)

    def test_listings(self):
        result = runner.invoke(app, ["list-tables"])
        self.assertEqual(result.exit_code, 0)
        self.assertIn("xy-f3", result.stdout)

        result = runner.invoke(app, ["catalog"])
        self.assertEqual(result.exit_code, 0)
        self.assertIn("StebeG", result.stdout)
        self.assertIn("Lambda18", result.stdout)


if __name__ == "__main__":
    unittest.main()
