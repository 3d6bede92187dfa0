# -*- coding: utf-8; -*-
#
# This file is part of twostep-proximity.
#
# For the full copyright and license information, please see the
# LICENSE file distributed with this source code.

"""Inner proximal-gradient solver for implicit block updates."""

from typing import Callable, NamedTuple
import logging

import numpy as np

from twostep import signals
from twostep.engine.problem import InnerSolverConfig
from twostep.proxlib.functions import ProxFunction

logger = logging.getLogger(__name__)


class InnerResult(NamedTuple):
    x: np.ndarray
    converged: bool
    iterations: int
    residual: float


def solve_block(
    function: ProxFunction,
    gamma: float,
    c: np.ndarray,
    coupling: Callable[[np.ndarray], np.ndarray],
    coupling_norm: float,
    x0: np.ndarray,
    config: InnerSolverConfig,
) -> InnerResult:
    """Solve x = prox_{gamma f}(c - Q x) for a symmetric PSD coupling Q.

    The fixed point minimises gamma f(x) + |x - c|^2 / 2 + <Q x, x> / 2, a strongly
    convex problem; proximal gradient with step 1 / (1 + |Q|) converges linearly.
    """
    step = 1.0 / (1.0 + coupling_norm)
    x = np.array(x0, dtype=float)
    residual = np.inf
    for iteration in range(1, config.max_inner + 1):
        gradient = (x - c) + coupling(x)
        candidate = function.prox(x - step * gradient, step * gamma)
        residual = float(np.linalg.norm(candidate - x))
        x = candidate
        if residual <= config.inner_tol:
            return InnerResult(x, True, iteration, residual)
    return InnerResult(x, False, config.max_inner, residual)


def report_stall(block_index: int, result: InnerResult, k: int) -> None:
    logger.warning(
        "Inner solver for block {} stopped at {} iterations (residual {:.3e}) in step {}".format(
            block_index + 1, result.iterations, result.residual, k
        )
    )
    signals.inner_solver_stalled.send(block_index, result=result, k=k)
