import csv
import json
import os
import tempfile
import unittest

import numpy as np

from twostep.common import get_acceptance
from twostep.factory import get_app


#: marks slow end-to-end checks, run with TWOSTEP_ACCEPTANCE=1
acceptance = unittest.skipUnless(get_acceptance(), "set TWOSTEP_ACCEPTANCE=1 to run acceptance checks")


class TestCase(unittest.TestCase):
    """Builds the flask app so commands and config getters see test settings."""

    config = None

    def setUp(self):
        config = {"TESTING": True, "NORM_ESTIMATE_TOL": 1e-12}
        config.update(self.config or {})
        self.app = get_app(config)
        self.ctx = self.app.app_context()
        self.ctx.push()
        super().setUp()

    def tearDown(self):
        self.ctx.pop()
        super().tearDown()


class NumericTestCase(unittest.TestCase):
    def assertAllClose(self, actual, expected, atol=1e-10, rtol=0.0, msg=None):
        actual = np.asarray(actual, dtype=float)
        expected = np.asarray(expected, dtype=float)
        self.assertEqual(actual.shape, expected.shape, msg)
        if not np.allclose(actual, expected, atol=atol, rtol=rtol):
            worst = np.max(np.abs(actual - expected)) if actual.size else 0.0
            self.fail(msg or "arrays differ, max abs difference {}".format(worst))


class CommandTestCase(TestCase):
    """Runs CLI commands against JSON configs in a scratch directory."""

    def setUp(self):
        super().setUp()
        self.tmp = tempfile.TemporaryDirectory()
        self.out = os.path.join(self.tmp.name, "out")

    def tearDown(self):
        self.tmp.cleanup()
        super().tearDown()

    def write_config(self, data, name="run.json") -> str:
        path = os.path.join(self.tmp.name, name)
        with open(path, "w") as f:
            json.dump(data, f)
        return path

    def invoke(self, *args):
        return self.app.test_cli_runner().invoke(args=list(args))

    def read_json(self, name):
        with open(os.path.join(self.out, name)) as f:
            return json.load(f)

    def read_csv(self, name):
        with open(os.path.join(self.out, name), newline="") as f:
            return list(csv.reader(f))
