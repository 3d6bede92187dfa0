# -*- coding: utf-8; -*-
#
# This file is part of twostep-proximity.
#
# For the full copyright and license information, please see the
# LICENSE file distributed with this source code.

"""Default settings, overridable from ``server/settings.py`` or the app config.

Only the worker count and the acceptance switch of the test suite are read from
the environment.
"""

import os


def env(variable, fallback_value=None):
    env_value = os.environ.get(variable, "")
    if len(env_value) == 0:
        return fallback_value
    else:
        if env_value == "__EMPTY__":
            return ""
        else:
            return env_value


LOG_CONFIG_FILE = "logging_config.yml"

#: default directory for run artifacts when a command is given no ``--out``
TWOSTEP_OUTPUT_DIR = "runs"

#: number of workers used to fan out benchmark families
TWOSTEP_WORKERS = int(env("TWOSTEP_WORKERS", 1))

#: power iteration used for operator norms
NORM_ESTIMATE_TOL = 1e-10
NORM_ESTIMATE_MAX_ITER = 5000

#: margin applied to analytic step-size bounds
STEP_SIZE_SAFETY = 0.999999

#: inner proximal-gradient solver of the implicit families
INNER_MAX_ITER = 500
INNER_TOL = 1e-10

#: dense Condition-M checks are only attempted up to this size of n + m
CONDITION_M_MAX_DIM = 500

#: run the slow acceptance tests
TWOSTEP_ACCEPTANCE = env("TWOSTEP_ACCEPTANCE", "") not in ("", "0", "false", "False")
