# -*- coding: utf-8; -*-
#
# This file is part of twostep-proximity.
#
# For the full copyright and license information, please see the
# LICENSE file distributed with this source code.

"""Reconstruction quality and stopping measures of the MRI benchmark."""

from typing import Dict, Optional
import math

import numpy as np

from twostep.engine.problem import IterateState
from twostep.engine.solver import relative_change
from twostep.errors import SizingError
from twostep.mri.model import MriConfig, MriOperators, primal_objective

#: peak value of the dB scale
PSNR_PEAK = 255.0


def psnr(u, u_star, d: Optional[int] = None) -> float:
    """10 log10(255 sqrt(d) / |u - u_star|); +inf when the images agree exactly."""
    u = np.asarray(u, dtype=float)
    u_star = np.asarray(u_star, dtype=float)
    if u.shape != u_star.shape:
        raise SizingError.dimensionMismatchError("recovered image", u_star.size, u.size)
    d = u.size if d is None else d
    error = float(np.linalg.norm(u - u_star))
    if error == 0.0:
        return math.inf
    return 10.0 * math.log10(PSNR_PEAK * math.sqrt(d) / error)


def penalized_objective(cfg: MriConfig, ops: MriOperators, u, b) -> float:
    """F(u) + tau |K u - b|."""
    return primal_objective(cfg, ops, u) + cfg.tau * float(np.linalg.norm(ops.K.apply(u) - b))


def eps1(u, fstar: float, cfg: MriConfig, ops: MriOperators, b) -> float:
    """(F(u) + tau |K u - b| - F*) / F*."""
    if not fstar > 0:
        raise ValueError("F* must be positive, got {}".format(fstar))
    return (penalized_objective(cfg, ops, u, b) - fstar) / fstar


def eps2(y, y_prev) -> Optional[float]:
    """|y - y_prev| / |y|; None while y is zero."""
    return relative_change(np.asarray(y, dtype=float), np.asarray(y_prev, dtype=float))


class MriMonitor:
    """Solver hook adding the image measures to each trace record.

    ``objective`` is replaced by the primal F(-y) and ``psnr`` is left empty on
    exact recovery; ``eps1`` needs an F* estimate.
    """

    def __init__(self, cfg: MriConfig, ops: MriOperators, b, u_star, fstar: Optional[float] = None):
        self.cfg = cfg
        self.ops = ops
        self.b = np.asarray(b, dtype=float)
        self.u_star = np.asarray(u_star, dtype=float)
        self.fstar = fstar

    def __call__(self, state: IterateState, record: Dict) -> None:
        u = -state.y
        record["objective"] = primal_objective(self.cfg, self.ops, u)
        if self.fstar is not None:
            record["eps1"] = eps1(u, self.fstar, self.cfg, self.ops, self.b)
        value = psnr(u, self.u_star)
        record["psnr"] = None if math.isinf(value) else value
