# -*- coding: utf-8; -*-
#
# This file is part of twostep-proximity.
#
# For the full copyright and license information, please see the
# LICENSE file distributed with this source code.

"""Empirical O(1/k) and o(1/k) rate checks on step-norm sequences."""

from typing import Dict, List, NamedTuple, Optional, Sequence, Union

import numpy as np

from twostep.diagnostics.trace import RunTrace
from twostep.engine.problem import IterateState

MIN_RATE_LENGTH = 100
#: c_K may exceed c_{K/10} by this fraction and still count as bounded
GROWTH_TOL = 0.1


def ergodic_average(history: Sequence, K: int):
    """Mean of v^2, ..., v^{K+1}; ``history[0]`` is v^0.

    Items may be stacked vectors or :class:`IterateState` objects; the result has the same kind.
    """
    if K < 1:
        raise ValueError("ergodic window needs K >= 1")
    if len(history) < K + 2:
        raise ValueError("ergodic average over K={} needs {} iterates, history holds {}".format(K, K + 2, len(history)))
    window = history[2 : K + 2]
    if isinstance(window[0], IterateState):
        x = [np.mean([state.x[i] for state in window], axis=0) for i in range(len(window[0].x))]
        y = np.mean([state.y for state in window], axis=0)
        return IterateState(x, y, k=K)
    return np.mean(np.asarray(window, dtype=float), axis=0)


class RateReport(NamedTuple):
    k: np.ndarray
    a: np.ndarray
    ergodic: np.ndarray
    cumulative: np.ndarray
    runmin_scaled: np.ndarray
    slope: float
    ergodic_bounded: bool
    runmin_vanishing: bool

    def summary(self) -> dict:
        return {
            "iterations": int(self.k[-1]),
            "slope": self.slope,
            "ergodic_bounded": self.ergodic_bounded,
            "runmin_vanishing": self.runmin_vanishing,
            "final_cumulative": float(self.cumulative[-1]),
            "final_runmin_scaled": float(self.runmin_scaled[-1]),
        }


def decade_start(K: int) -> int:
    """0-based index of k = ceil(K / 10)."""
    return max(int(np.ceil(K / 10.0)) - 1, 0)


def log_slope(k: np.ndarray, values: np.ndarray) -> float:
    """Least-squares slope of log(values) against log(k) over positive entries."""
    mask = values > 0
    if np.count_nonzero(mask) < 2:
        return float("nan")
    return float(np.polyfit(np.log(k[mask]), np.log(values[mask]), 1)[0])


def rate_report(source: Union[RunTrace, Sequence[float]]) -> RateReport:
    """Rates of a^k = |v^{k+1} - v^k|^2 over a run.

    ``c_k = sum_{i<=k} a^i`` must stay bounded (ergodic O(1/k)); ``k min_{i<=k} a^i``
    must vanish (running minimum o(1/k)).
    """
    a = source.column("step_norm_sq") if isinstance(source, RunTrace) else np.asarray(source, dtype=float)
    if a.shape[0] < MIN_RATE_LENGTH:
        raise ValueError("rate report needs at least {} iterations, got {}".format(MIN_RATE_LENGTH, a.shape[0]))
    if np.any(a < 0) or np.any(np.isnan(a)):
        raise ValueError("step norms must be non-negative numbers")

    K = a.shape[0]
    k = np.arange(1, K + 1, dtype=float)
    cumulative = np.cumsum(a)
    ergodic = cumulative / k
    runmin_scaled = k * np.minimum.accumulate(a)

    start = decade_start(K)
    ergodic_bounded = bool(cumulative[-1] <= (1.0 + GROWTH_TOL) * cumulative[start])
    runmin_vanishing = bool(runmin_scaled[-1] == 0.0 or runmin_scaled[-1] < runmin_scaled[start])
    slope = log_slope(k[start:], ergodic[start:])
    return RateReport(k, a, ergodic, cumulative, runmin_scaled, slope, ergodic_bounded, runmin_vanishing)


RATE_COLUMNS = ("k", "a_k", "ergodic", "runmin", "gap")


def rate_rows(report: RateReport, gaps: Optional[Dict[int, float]] = None) -> List[List]:
    """CSV rows of a rate report; ``gaps`` maps a window size K to G(v_K, v'), blank elsewhere."""
    gaps = gaps or {}
    rows = []
    for k, a, ergodic, runmin in zip(report.k, report.a, report.ergodic, report.runmin_scaled):
        rows.append([int(k), float(a), float(ergodic), float(runmin), gaps.get(int(k))])
    return rows
