# -*- coding: utf-8; -*-
#
# This file is part of twostep-proximity.
#
# For the full copyright and license information, please see the
# LICENSE file distributed with this source code.

from typing import Sequence

import numpy as np

from twostep.engine.problem import BlockProblem, IterateState


def kkt_residual(problem: BlockProblem, state: IterateState, alphas: Sequence[float], beta: float) -> float:
    """sum_i |x_i - prox_{(alpha_i/beta) f_i}(x_i - (alpha_i/beta) A_i^T y)| + beta |sum_i A_i x_i - b|.

    Zero exactly at solution pairs of the constrained problem.
    """
    total = 0.0
    for block, x_i, alpha in zip(problem.blocks, state.x, alphas):
        gamma = alpha / beta
        fixed = block.function.prox(x_i - gamma * block.operator.adjoint_apply(state.y), gamma)
        total += float(np.linalg.norm(x_i - fixed))
    return total + feasibility(problem, state, beta)


def feasibility(problem: BlockProblem, state: IterateState, beta: float) -> float:
    return beta * float(np.linalg.norm(problem.residual(state.x)))
