# -*- coding: utf-8; -*-
#
# This file is part of twostep-proximity.
#
# For the full copyright and license information, please see the
# LICENSE file distributed with this source code.

"""Run traces, rate checks and partial gaps."""

from twostep.diagnostics.trace import RunTrace, FIELDS  # noqa: F401
from twostep.diagnostics.rates import RATE_COLUMNS, RateReport, ergodic_average, rate_report, rate_rows  # noqa: F401
from twostep.diagnostics.gap import GapQuery, GapRateReport, partial_gap, gap_rate_check  # noqa: F401
