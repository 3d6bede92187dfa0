# -*- coding: utf-8; -*-
#
# This file is part of twostep-proximity.
#
# For the full copyright and license information, please see the
# LICENSE file distributed with this source code.

"""Two-step fixed-point proximity iterations."""

from twostep.engine.problem import (  # noqa: F401
    Block,
    BlockProblem,
    AlgorithmSpec,
    InnerSolverConfig,
    IterateState,
    StopCriteria,
    make_spec,
    validate_spec,
)
from twostep.engine.steppers import (  # noqa: F401
    Stepper,
    step,
    two_step_implicit,
    two_step_explicit,
    ladmm_direct,
    pd_primal_first,
    pd_dual_first,
)
from twostep.engine.dense import DenseSchedule, generic_two_step_dense, dense_operands  # noqa: F401
from twostep.engine.kkt import kkt_residual, feasibility  # noqa: F401
from twostep.engine.solver import solve, relative_change  # noqa: F401
