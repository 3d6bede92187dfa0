# -*- coding: utf-8; -*-
#
# This file is part of twostep-proximity.
#
# For the full copyright and license information, please see the
# LICENSE file distributed with this source code.

"""TV + wavelet sparse MRI as a three-block dual problem.

The primal model is

    min_u  mu |u|_TV + |Lambda W u|_1   subject to  K u = b,

and the solvers work on its dual

    min  i_{S1}(x1) + i_{S2}(x2) + <b, x3>   subject to  B^T x1 + W^T x2 + K^T x3 = 0,

whose multiplier y recovers the image as u = -y.
"""

from typing import Any, Dict, NamedTuple, Optional, Sequence, Tuple
import logging
import time

import numpy as np

from twostep import signals
from twostep.common import FAMILY, resolve_family
from twostep.conditionm.certify import stacked_scaled_norm
from twostep.diagnostics.trace import RunTrace
from twostep.engine.problem import Block, BlockProblem, IterateState, StopCriteria
from twostep.engine.solver import Hook, relative_change
from twostep.errors import ConfigError, SizingError
from twostep.linops.imaging import make_haar_undecimated, make_partial_fourier, make_tv_operator, normalize_mask
from twostep.linops.norms import op_norm_sq_est
from twostep.linops.operators import LinearOperator
from twostep.proxlib import functions
from twostep.proxlib.prox import group_l2_value, project_box, project_group_l2_ball, weighted_l1_value

logger = logging.getLogger(__name__)

#: 1 / |B|^2 for the periodic difference operator
TV_STEP = 1.0 / 8.0
#: LADMM iterations behind the F* estimate
FSTAR_ITERATIONS = 5000
#: margin on the W and K steps
STEP_SAFETY = 0.999999


class MriConfig(NamedTuple):
    d1: int = 64
    d2: int = 64
    n_lines: int = 9
    mu: float = 3.0
    lambda_lowpass: float = 0.0
    lambda_highpass: float = 0.5
    alphas: Optional[Tuple[float, float, float]] = None
    beta: float = 1.0
    tau: float = 1000.0
    #: LADMM iterations used to estimate F*; defaults to FSTAR_ITERATIONS
    fstar_iters: Optional[int] = None
    max_iter: int = 500

    @property
    def d(self) -> int:
        return self.d1 * self.d2

    @property
    def fstar_iterations(self) -> int:
        return self.fstar_iters or FSTAR_ITERATIONS

    def check(self) -> "MriConfig":
        errors = []
        if not self.mu > 0:
            errors.append("MU must be positive")
        if self.lambda_lowpass < 0 or self.lambda_highpass < 0:
            errors.append("LAMBDA_LOWPASS and LAMBDA_HIGHPASS must be non-negative")
        if not self.beta > 0:
            errors.append("BETA must be positive")
        if self.tau < 0:
            errors.append("TAU must be non-negative")
        if self.n_lines < 1:
            errors.append("N_LINES must be at least 1")
        if self.max_iter < 1:
            errors.append("MAX_ITER must be at least 1")
        if self.alphas is not None and (len(self.alphas) != 3 or any(not alpha > 0 for alpha in self.alphas)):
            errors.append("ALPHAS must hold three positive step sizes")
        if errors:
            raise ConfigError.invalidConfigError(errors)
        return self

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "MriConfig":
        values = dict(data)
        if values.get("alphas") is not None:
            values["alphas"] = tuple(float(alpha) for alpha in values["alphas"])
        return cls(**values).check()

    def to_dict(self) -> Dict[str, Any]:
        data = self._asdict()
        if self.alphas is not None:
            data["alphas"] = list(self.alphas)
        return data


class MriOperators(NamedTuple):
    B: LinearOperator
    W: LinearOperator
    K: LinearOperator

    @property
    def d(self) -> int:
        return self.B.cols


def build_operators(cfg: MriConfig, mask) -> MriOperators:
    return MriOperators(
        make_tv_operator(cfg.d1, cfg.d2),
        make_haar_undecimated(cfg.d1, cfg.d2),
        make_partial_fourier(cfg.d1, cfg.d2, mask),
    )


def measure(image: np.ndarray, mask) -> np.ndarray:
    """Noise-free samples b = K u of a 2-D image."""
    image = np.asarray(image, dtype=float)
    if image.ndim != 2:
        raise SizingError(message="measure expects a 2-D image, got shape {}".format(image.shape))
    d1, d2 = image.shape
    return make_partial_fourier(d1, d2, mask).apply(np.ravel(image, order="F"))


def wavelet_weights(cfg: MriConfig) -> np.ndarray:
    """Diagonal of Lambda: the low-pass band first, then the three high-pass bands."""
    d = cfg.d
    return np.concatenate([np.full(d, float(cfg.lambda_lowpass)), np.full(3 * d, float(cfg.lambda_highpass))])


def build_dual_problem(cfg: MriConfig, mask, b, operators: Optional[MriOperators] = None) -> BlockProblem:
    ops = operators or build_operators(cfg, mask)
    if ops.d != cfg.d:
        raise SizingError.dimensionMismatchError("image size", cfg.d, ops.d)
    b = np.asarray(b, dtype=float)
    if b.shape != (ops.K.rows,):
        raise SizingError.dimensionMismatchError("measured data b", ops.K.rows, b.shape)
    blocks = [
        Block(functions.group_ball_indicator(cfg.mu, cfg.d), ops.B.T),
        Block(functions.box_indicator(wavelet_weights(cfg)), ops.W.T),
        Block(functions.linear_function(b), ops.K.T),
    ]
    return BlockProblem(blocks, np.zeros(cfg.d), label="mri_dual")


def primal_objective(cfg: MriConfig, ops: MriOperators, u) -> float:
    """F(u) = mu |u|_TV + |Lambda W u|_1."""
    tv = group_l2_value(ops.B.apply(u), cfg.d)
    return cfg.mu * tv + weighted_l1_value(ops.W.apply(u), wavelet_weights(cfg))


def practical_step_sizes(family: str, ops: MriOperators) -> Tuple[float, float, float]:
    """1/8 for B and 0.999999/|A|^2 for W and K.

    The Jacobi baseline takes the same steps scaled down until |A Q| < 1 for
    the stacked dual operator A = [B^T W^T K^T]: equal steps of 1/8 leave
    |A Q|^2 at 1 + 1/8 or more since W is a tight frame.
    """
    steps = (TV_STEP, STEP_SAFETY / op_norm_sq_est(ops.W), STEP_SAFETY / op_norm_sq_est(ops.K))
    if resolve_family(family) != FAMILY.PD_DUAL_FIRST:
        return steps
    aq = stacked_scaled_norm([ops.B.T, ops.W.T, ops.K.T], steps)
    shrink = STEP_SAFETY / aq ** 2
    return tuple(shrink * alpha for alpha in steps)  # type: ignore


class MriState(IterateState):
    """Dual iterate (x1, x2, x3, y) with two-step memory; the image is -y."""

    @property
    def x1(self) -> np.ndarray:
        return self.x[0]

    @property
    def x2(self) -> np.ndarray:
        return self.x[1]

    @property
    def x3(self) -> np.ndarray:
        return self.x[2]

    @property
    def image(self) -> np.ndarray:
        return -self.y


def algorithm1_initial_state(cfg: MriConfig, ops: MriOperators, b) -> MriState:
    """x1 = Proj_S1(B K^T b) with x2, x3, y and the memory of x2, x3 at zero."""
    x1 = project_group_l2_ball(ops.B.apply(ops.K.adjoint_apply(b)), cfg.mu, cfg.d)
    x2 = np.zeros(ops.W.rows)
    x3 = np.zeros(ops.K.rows)
    return MriState([x1, x2, x3], np.zeros(cfg.d))


def algorithm1_run(
    cfg: MriConfig,
    b,
    mask,
    stop: Optional[StopCriteria] = None,
    hooks: Sequence[Hook] = (),
    initial_state: Optional[IterateState] = None,
    record_history: bool = False,
    operators: Optional[MriOperators] = None,
) -> Tuple[np.ndarray, RunTrace]:
    """2SFPPA written out for the three MRI blocks; returns (u = -y, trace)."""
    ops = operators or build_operators(cfg, normalize_mask(mask, cfg.d))
    B, W, K = ops
    b = np.asarray(b, dtype=float)
    if b.shape != (K.rows,):
        raise SizingError.dimensionMismatchError("measured data b", K.rows, b.shape)
    alpha1, alpha2, alpha3 = cfg.alphas or practical_step_sizes(FAMILY.TWO_STEP_EXPLICIT, ops)
    beta = cfg.beta
    radii = wavelet_weights(cfg)
    stop = stop or StopCriteria(max_iter=cfg.max_iter, kkt_tol=None)

    state = initial_state or algorithm1_initial_state(cfg, ops, b)
    x1, x2, x3 = state.x
    x1p, x2p, x3p = state.prev_x
    y = state.y
    k = state.k

    trace = RunTrace("algorithm1")
    if record_history:
        trace.history.append(state.copy())
    logger.info("Algorithm 1 on {}x{} with alphas {} beta {}".format(cfg.d1, cfg.d2, (alpha1, alpha2, alpha3), beta))

    elapsed = 0.0
    for _ in range(stop.max_iter):
        started = time.perf_counter()
        x2_ext = W.adjoint_apply(2.0 * x2 - x2p)
        x3_ext = K.adjoint_apply(2.0 * x3 - x3p)

        w = B.adjoint_apply(x1) + x2_ext + x3_ext + y / beta
        x1_new = project_group_l2_ball(x1 - alpha1 * B.apply(w), cfg.mu, cfg.d)
        image1 = B.adjoint_apply(x1_new)

        w = image1 + W.adjoint_apply(x2) + x3_ext + y / beta
        x2_new = project_box(x2 - alpha2 * W.apply(w), radii)
        image2 = W.adjoint_apply(x2_new)

        w = image1 + image2 + K.adjoint_apply(x3) + y / beta
        x3_new = (x3 - alpha3 * K.apply(w)) - (alpha3 / beta) * b
        image3 = K.adjoint_apply(x3_new)

        y_new = y + beta * (image1 + image2 + image3)
        elapsed += time.perf_counter() - started

        new_state = MriState([x1_new, x2_new, x3_new], y_new, [x1, x2, x3], y, k=k + 1)
        change = new_state.stacked() - np.concatenate([x1, x2, x3, y])
        record = {
            "k": new_state.k,
            "step_norm_sq": float(np.dot(change, change)),
            "feasibility": beta * float(np.linalg.norm(image1 + image2 + image3)),
            "objective": float(np.dot(b, x3_new)),
            "eps2": relative_change(y_new, y),
            "inner_stalls": 0,
        }
        for hook in hooks:
            hook(new_state, record)
        record["seconds"] = elapsed
        trace.append(record)
        if record_history:
            trace.history.append(new_state.copy())
        signals.iteration_completed.send(trace, state=new_state, record=record)

        x1p, x2p, x3p = x1, x2, x3
        x1, x2, x3, y = x1_new, x2_new, x3_new, y_new
        k += 1
        if stop.eps2_tol is not None and record["eps2"] is not None and record["eps2"] < stop.eps2_tol:
            trace.converged = True
            trace.stop_reason = "eps2_tol"
            break
    else:
        trace.stop_reason = "max_iter"

    signals.run_finished.send(trace, state=new_state if trace.records else state)
    return -y, trace
