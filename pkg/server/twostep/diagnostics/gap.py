# -*- coding: utf-8; -*-
#
# This file is part of twostep-proximity.
#
# For the full copyright and license information, please see the
# LICENSE file distributed with this source code.

"""Partial primal-dual gap and its ergodic decay."""

from typing import List, NamedTuple, Optional, Sequence
import logging
import math

import numpy as np

from twostep.diagnostics.rates import ergodic_average, log_slope
from twostep.engine.problem import BlockProblem, IterateState

logger = logging.getLogger(__name__)

NEGATIVE_GAP_TOL = 1e-8


class GapQuery(NamedTuple):
    """Reference point v' and an optional dual ball of radius ``rho`` around ``center``."""

    reference: IterateState
    rho: float = 0.0
    center: Optional[np.ndarray] = None


def partial_gap(v: IterateState, q: GapQuery, problem: BlockProblem) -> float:
    """G(v, v') = Phi(v) - Phi(v') + <v', S_A v>, Phi(v) = sum_i f_i(x_i) + <b, y>.

    With ``rho > 0`` the dual part <Ax - b, y'> is replaced by its supremum over the
    ball, <Ax - b, center> + rho |Ax - b|.
    """
    if q.rho < 0:
        raise ValueError("dual ball radius must be non-negative")
    reference = q.reference
    primal = problem.objective(v.x)
    if not math.isfinite(primal):
        logger.warning("Gap undefined: an x block lies outside the domain of its function")
        return math.inf

    residual = problem.residual(v.x)
    cross = 0.0
    for block, x_ref in zip(problem.blocks, reference.x):
        cross += float(np.dot(block.operator.apply(x_ref), v.y))

    gap = primal + float(np.dot(problem.b, v.y)) - problem.objective(reference.x) - cross
    if q.rho > 0:
        center = reference.y if q.center is None else np.asarray(q.center, dtype=float)
        return gap + float(np.dot(residual, center)) + q.rho * float(np.linalg.norm(residual))
    return gap + float(np.dot(residual, reference.y))


class GapRateReport(NamedTuple):
    K: List[int]
    gaps: List[float]
    slope: float
    bounded: bool
    negative: bool


def gap_grid(length: int, points: int = 30) -> List[int]:
    """Log-spaced window sizes K in [1, length - 2]."""
    top = length - 2
    if top < 1:
        raise ValueError("gap check needs at least 3 iterates")
    return sorted({int(round(value)) for value in np.geomspace(1, top, num=min(points, top))})


def gap_rate_check(
    history: Sequence[IterateState], q: GapQuery, problem: BlockProblem, Ks: Optional[Sequence[int]] = None
) -> GapRateReport:
    """G(v_K, v') for ergodic averages v_K over a grid of K; K G(v_K, v') should stay bounded."""
    Ks = list(Ks) if Ks is not None else gap_grid(len(history))
    gaps = [partial_gap(ergodic_average(history, K), q, problem) for K in Ks]

    negative = any(gap < -NEGATIVE_GAP_TOL for gap in gaps)
    if negative:
        logger.warning("Negative partial gap {:.3e}: reference is not a saddle point".format(min(gaps)))

    values = np.asarray(gaps, dtype=float)
    K = np.asarray(Ks, dtype=float)
    if np.all(np.abs(values) <= NEGATIVE_GAP_TOL):
        return GapRateReport(Ks, gaps, float("nan"), True, negative)

    start = int(np.searchsorted(K, K[-1] / 10.0))
    start = min(start, len(Ks) - 2) if len(Ks) > 1 else 0
    scaled = K * values
    bounded = bool(np.all(np.isfinite(values)) and scaled[-1] <= 1.5 * max(scaled[start], NEGATIVE_GAP_TOL))
    slope = log_slope(K[start:], values[start:])
    return GapRateReport(Ks, gaps, slope, bounded, negative)

