#!/usr/bin/env python
# -*- coding: utf-8; -*-
#
# This file is part of twostep-proximity.
#
# For the full copyright and license information, please see the
# LICENSE file distributed with this source code.

"""Deployment settings; anything upper-case here overrides ``twostep.default_settings``."""

import os

ABS_PATH = os.path.abspath(os.path.dirname(__file__))

LOG_CONFIG_FILE = os.path.join(ABS_PATH, "logging_config.yml")

TWOSTEP_OUTPUT_DIR = os.path.join(ABS_PATH, "runs")
