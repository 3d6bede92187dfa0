# -*- coding: utf-8; -*-
#
# This file is part of twostep-proximity.
#
# For the full copyright and license information, please see the
# LICENSE file distributed with this source code.

from typing import NamedTuple, Optional
import logging

import numpy as np

from twostep import signals
from twostep.common import get_norm_estimate_max_iter, get_norm_estimate_tol
from twostep.linops.operators import LinearOperator

logger = logging.getLogger(__name__)

START_VECTOR_SEED = 20180117


class NormEstimate(NamedTuple):
    value: float
    converged: bool
    iterations: int


def start_vector(n: int, seed: int = START_VECTOR_SEED) -> np.ndarray:
    """Deterministic, strictly positive-mean start so no eigenvector is orthogonal by accident."""
    rng = np.random.default_rng(seed)
    v = 1.0 + rng.uniform(-0.5, 0.5, size=n)
    return v / np.linalg.norm(v)


def estimate_op_norm_sq(
    op: LinearOperator, tol: Optional[float] = None, max_iter: Optional[int] = None
) -> NormEstimate:
    """Power iteration on A^T A; stops when the Rayleigh quotient settles to ``tol`` relative."""
    tol = get_norm_estimate_tol() if tol is None else tol
    max_iter = get_norm_estimate_max_iter() if max_iter is None else max_iter

    v = start_vector(op.cols)
    previous = None
    value = 0.0
    for iteration in range(1, max_iter + 1):
        image = op.apply(v)
        value = float(np.dot(image, image))
        back = op.adjoint_apply(image)
        size = np.linalg.norm(back)
        if size == 0.0:
            return NormEstimate(0.0, True, iteration)
        if previous is not None and abs(value - previous) <= tol * value:
            return NormEstimate(value, True, iteration)
        previous = value
        v = back / size
    return NormEstimate(value, False, max_iter)


def op_norm_sq_est(op: LinearOperator, tol: Optional[float] = None, max_iter: Optional[int] = None) -> float:
    estimate = estimate_op_norm_sq(op, tol=tol, max_iter=max_iter)
    if not estimate.converged:
        logger.warning(
            "Norm estimate of {} did not converge after {} iterations, using {}".format(
                op.label, estimate.iterations, estimate.value
            )
        )
        signals.norm_estimate_unconverged.send(op, estimate=estimate)
    return estimate.value


def op_norm_est(op: LinearOperator, tol: Optional[float] = None, max_iter: Optional[int] = None) -> float:
    return float(np.sqrt(op_norm_sq_est(op, tol=tol, max_iter=max_iter)))
