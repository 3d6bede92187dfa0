import os

from unittest import mock

from twostep.mri import benchmark
from twostep.tests import CommandTestCase

SMALL_MRI = {
    "mri": {"d1": 16, "d2": 16, "n_lines": 4, "max_iter": 20, "fstar_iters": 40},
    "families": ["jladmm", "ladmm", "2sfppa"],
    "eps1_tols": [10.0, 1e-12],
}


class MriCommandTest(CommandTestCase):
    def test_output_inventory(self):
        result = self.invoke("mri", "-c", self.write_config(SMALL_MRI), "-o", self.out)
        self.assertEqual(result.exit_code, 0, result.output)

        expected = {"phantom.pgm", "phantom.csv", "mask.txt", "benchmark_eps1.csv", "benchmark_eps2.csv"}
        for name in ("JLADMM", "LADMM", "2SFPPA"):
            expected |= {"recon_{}.pgm".format(name), "recon_{}.csv".format(name), "trace_{}.csv".format(name)}
        expected.add("manifest.json")
        self.assertEqual(set(os.listdir(self.out)), expected)

        manifest = self.read_json("manifest.json")
        self.assertEqual(sorted(manifest["artifacts"]), sorted(expected))
        self.assertEqual(sorted(manifest["norms"]), ["B", "K", "W"])
        self.assertGreater(manifest["measurements"]["fstar"], 0)
        self.assertGreater(manifest["measurements"]["mask_ratio"], 0)
        alphas = manifest["measurements"]["alphas"]
        self.assertEqual(alphas["LADMM"], alphas["2SFPPA"])
        self.assertEqual(alphas["2SFPPA"][0], 0.125)
        self.assertLess(alphas["JLADMM"][2], alphas["2SFPPA"][2])

        certificates = manifest["certificate"]
        self.assertEqual(sorted(certificates), ["2SFPPA", "JLADMM", "LADMM"])
        self.assertTrue(certificates["JLADMM"]["certified"])
        self.assertEqual(certificates["JLADMM"]["rule"], "theory")
        self.assertLess(certificates["JLADMM"]["aq_norm"], 1.0)
        for name in ("LADMM", "2SFPPA"):
            self.assertEqual(certificates[name]["rule"], "paper_practical")
            self.assertEqual(certificates[name]["label"], "paper-practical, not theory-certified")
            self.assertEqual(certificates[name]["alphas"], alphas[name])
        self.assertEqual(certificates["2SFPPA"]["method"], "analytic")


        table = self.read_csv("benchmark_eps1.csv")
        self.assertEqual(table[0], ["family", "epsilon", "iterations", "psnr_db", "seconds"])
        self.assertEqual(len(table), 1 + 3 * 2)
        unreached = [row for row in table[1:] if float(row[1]) == 1e-12]
        self.assertEqual([row[2:] for row in unreached], [["-", "-", "-"]] * 3)

        trace = self.read_csv("trace_2SFPPA.csv")
        self.assertEqual(trace[0], ["k", "eps1", "eps2", "psnr", "objective", "seconds"])
        self.assertEqual(len(trace), 21)

        with open(os.path.join(self.out, "phantom.pgm"), "rb") as f:
            self.assertTrue(f.read().startswith(b"P5\n16 16\n255\n"))

    def test_single_family_and_rerun_match(self):
        path = self.write_config(dict(SMALL_MRI, fstar=1.0))
        first = self.invoke("mri", "-c", path, "-o", self.out, "-f", "2sfppa", "--max-iter", "5")
        self.assertEqual(first.exit_code, 0, first.output)
        first_table = self.read_csv("benchmark_eps2.csv")
        first_recon = self.read_csv("recon_2SFPPA.csv")

        second = self.invoke("mri", "-c", path, "-o", self.out, "-f", "2sfppa", "--max-iter", "5")
        self.assertEqual(second.exit_code, 0, second.output)
        self.assertEqual(self.read_csv("recon_2SFPPA.csv"), first_recon)
        self.assertEqual([row[:4] for row in self.read_csv("benchmark_eps2.csv")], [row[:4] for row in first_table])
        self.assertFalse(os.path.exists(os.path.join(self.out, "recon_LADMM.csv")))
        self.assertEqual(self.read_json("manifest.json")["measurements"]["fstar"], 1.0)

    def test_explicit_alphas_face_the_theory(self):
        data = dict(SMALL_MRI, fstar=1.0, families=["2sfppa"])
        data["mri"] = dict(SMALL_MRI["mri"], alphas=[0.01, 0.01, 0.01])
        result = self.invoke("mri", "-c", self.write_config(data), "-o", self.out, "--max-iter", "2")
        self.assertEqual(result.exit_code, 0, result.output)
        certificate = self.read_json("manifest.json")["certificate"]["2SFPPA"]
        self.assertEqual(certificate["rule"], "theory")
        self.assertEqual(certificate["alphas"], [0.01, 0.01, 0.01])
        self.assertEqual(len(certificate["per_block_bounds"]), 3)


class MriWorkersTest(CommandTestCase):
    config = {"TWOSTEP_WORKERS": 2}

    def test_worker_count_comes_from_app_config(self):
        data = dict(SMALL_MRI, fstar=1.0, families=["2sfppa"])
        with mock.patch("twostep.commands.mri.benchmark", wraps=benchmark) as patched:
            result = self.invoke("mri", "-c", self.write_config(data), "-o", self.out, "--max-iter", "2")
        self.assertEqual(result.exit_code, 0, result.output)
        self.assertEqual(patched.call_args.kwargs["workers"], 2)
        self.assertEqual(patched.call_args.kwargs["fstar"], 1.0)
