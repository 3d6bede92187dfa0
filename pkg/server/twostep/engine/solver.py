# -*- coding: utf-8; -*-
#
# This file is part of twostep-proximity.
#
# For the full copyright and license information, please see the
# LICENSE file distributed with this source code.

from typing import Callable, Dict, Optional, Sequence, Tuple
import logging
import time

import numpy as np

from twostep import signals
from twostep.diagnostics.trace import RunTrace
from twostep.engine.kkt import feasibility, kkt_residual
from twostep.engine.problem import AlgorithmSpec, BlockProblem, IterateState, StopCriteria, validate_spec
from twostep.engine.steppers import Stepper
from twostep.errors import ConvergenceError

logger = logging.getLogger(__name__)

#: called after every iteration with the new state and its (mutable) trace record
Hook = Callable[[IterateState, Dict], None]


def relative_change(current: np.ndarray, previous: np.ndarray) -> Optional[float]:
    """|current - previous| / |current|; None while |current| is 0."""
    size = float(np.linalg.norm(current))
    if size == 0.0:
        return None
    return float(np.linalg.norm(current - previous)) / size


def stop_reason(stop: StopCriteria, record: Dict) -> Optional[str]:
    if stop.kkt_tol is not None and record.get("kkt") is not None and record["kkt"] <= stop.kkt_tol:
        return "kkt_tol"
    if stop.eps2_tol is not None and record.get("eps2") is not None and record["eps2"] < stop.eps2_tol:
        return "eps2_tol"
    return None


def solve(
    problem: BlockProblem,
    spec: AlgorithmSpec,
    stop: StopCriteria = StopCriteria(),
    hooks: Sequence[Hook] = (),
    initial_state: Optional[IterateState] = None,
    label: Optional[str] = None,
    record_history: bool = False,
    track_kkt: Optional[bool] = None,
) -> Tuple[IterateState, RunTrace]:
    """Iterate ``spec.family`` until a stop criterion fires or ``stop.max_iter`` is reached.

    The initial state defaults to zeros with v^0 = v^1; the trace's ``seconds``
    column counts stepping time only, hooks excluded. A non-finite iterate raises
    :class:`ConvergenceError`.
    """
    validate_spec(spec, problem)
    state = (initial_state or IterateState.zeros(problem)).check(problem)
    stepper = Stepper(problem, spec)
    trace = RunTrace(label or spec.family)
    track_kkt = stop.kkt_tol is not None if track_kkt is None else track_kkt
    if record_history:
        trace.history.append(state.copy())

    elapsed = 0.0
    for _ in range(stop.max_iter):
        started = time.perf_counter()
        new_state = stepper(state)
        elapsed += time.perf_counter() - started
        if not np.all(np.isfinite(new_state.stacked())):
            raise ConvergenceError.divergedError(trace.label, new_state.k)

        change = new_state.stacked() - state.stacked()
        record = {
            "k": new_state.k,
            "step_norm_sq": float(np.dot(change, change)),
            "feasibility": feasibility(problem, new_state, spec.beta),
            "objective": problem.objective(new_state.x),
            "eps2": relative_change(new_state.y, state.y),
            "inner_stalls": new_state.inner_stalls,
        }
        if track_kkt:
            record["kkt"] = kkt_residual(problem, new_state, spec.alphas, spec.beta)
        for hook in hooks:
            hook(new_state, record)
        record["seconds"] = elapsed

        trace.append(record)
        if record_history:
            trace.history.append(new_state.copy())
        signals.iteration_completed.send(trace, state=new_state, record=record)
        state = new_state

        reason = stop_reason(stop, record)
        if reason:
            trace.converged = True
            trace.stop_reason = reason
            break
    else:
        trace.stop_reason = "max_iter"
        logger.info("{} stopped at max_iter={} without meeting a tolerance".format(trace.label, stop.max_iter))

    if trace.inner_stalls:
        logger.warning("{}: {} inner solves stopped early".format(trace.label, trace.inner_stalls))
    signals.run_finished.send(trace, state=state)
    return state, trace
