import os

from unittest import mock

from twostep.tests import CommandTestCase

SOLVE = {"problem": {"kind": "three_block_l1"}, "algorithm": {"family": "2sfppa", "beta": 1.0}}


class SolveCommandTest(CommandTestCase):
    def test_single_iteration_is_not_converged(self):
        out = os.path.join(self.out, "nested", "run")
        result = self.invoke("solve", "-c", self.write_config(SOLVE), "-o", out, "--max-iter", "1")
        self.assertEqual(result.exit_code, 0, result.output)
        self.assertTrue(os.path.isdir(out))

        self.out = out
        summary = self.read_json("summary.json")
        self.assertFalse(summary["converged"])
        self.assertEqual(summary["stop_reason"], "max_iter")
        self.assertEqual(summary["iterations"], 1)
        self.assertIsNone(summary["rate"])
        self.assertTrue(summary["certificate"]["certified"])
        self.assertEqual(len(summary["x"]), 3)

        rows = self.read_csv("trace.csv")
        self.assertEqual(rows[0], ["k", "step_norm_sq", "kkt", "objective", "eps2"])
        self.assertEqual(len(rows), 2)
        self.assertEqual(rows[1][0], "1")

        manifest = self.read_json("manifest.json")
        self.assertEqual(manifest["config"]["stop"]["max_iter"], 1)
        self.assertEqual(sorted(manifest["norms"]), ["A_1", "A_2", "A_3"])

    def test_rate_summary_after_enough_iterations(self):
        data = dict(SOLVE, stop={"max_iter": 120, "kkt_tol": None})
        result = self.invoke("solve", "-c", self.write_config(data), "-o", self.out)
        self.assertEqual(result.exit_code, 0, result.output)
        summary = self.read_json("summary.json")
        self.assertEqual(summary["iterations"], 120)
        self.assertEqual(summary["rate"]["iterations"], 120)
        self.assertIsNone(summary["kkt"])

    def test_uncertified_alphas_still_run(self):
        data = dict(SOLVE, algorithm={"family": "ladmm", "alphas": [0.5, 0.5, 0.5], "beta": 1.0})
        result = self.invoke("solve", "-c", self.write_config(data), "-o", self.out, "--max-iter", "5")
        self.assertEqual(result.exit_code, 0, result.output)
        self.assertFalse(self.read_json("summary.json")["certificate"]["certified"])

    def test_output_directory_defaults_to_config(self):
        data = dict(SOLVE, out=os.path.join(self.tmp.name, "from_config"))
        result = self.invoke("solve", "-c", self.write_config(data), "--max-iter", "2")
        self.assertEqual(result.exit_code, 0, result.output)
        self.assertTrue(os.path.exists(os.path.join(self.tmp.name, "from_config", "trace.csv")))

    def test_unwritable_output_is_an_io_error(self):
        blocker = os.path.join(self.tmp.name, "file")
        with open(blocker, "w") as f:
            f.write("x")
        result = self.invoke("solve", "-c", self.write_config(SOLVE), "-o", os.path.join(blocker, "run"))
        self.assertEqual(result.exit_code, 3)

    def test_linear_block_without_cost_is_a_usage_error(self):
        problem = {"kind": "blocks", "blocks": [{"A": [[1.0]], "function": "linear"}], "b": [1.0]}
        data = dict(SOLVE, problem=problem)
        result = self.invoke("solve", "-c", self.write_config(data), "-o", self.out)
        self.assertEqual(result.exit_code, 2, result.output)
        self.assertIn("PROBLEM.BLOCKS.0.C is a required field", result.output)
        self.assertFalse(os.path.exists(self.out))

    def test_unexpected_failure_exits_four(self):
        with mock.patch("twostep.commands.solve.problem_from_config", side_effect=RuntimeError("boom")):
            result = self.invoke("solve", "-c", self.write_config(SOLVE), "-o", self.out)
        self.assertEqual(result.exit_code, 4)
        self.assertIn("solve failed: RuntimeError('boom')", result.output)
