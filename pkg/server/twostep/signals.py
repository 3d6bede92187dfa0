# -*- coding: utf-8; -*-
#
# This file is part of twostep-proximity.
#
# For the full copyright and license information, please see the
# LICENSE file distributed with this source code.

import blinker

__all__ = [
    "iteration_completed",
    "inner_solver_stalled",
    "norm_estimate_unconverged",
    "run_finished",
]

signals = blinker.Namespace()

iteration_completed = signals.signal("twostep:iteration_completed")
inner_solver_stalled = signals.signal("twostep:inner_solver_stalled")
norm_estimate_unconverged = signals.signal("twostep:norm_estimate_unconverged")
run_finished = signals.signal("twostep:run_finished")
