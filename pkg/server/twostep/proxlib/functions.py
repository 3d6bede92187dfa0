# -*- coding: utf-8; -*-
#
# This file is part of twostep-proximity.
#
# For the full copyright and license information, please see the
# LICENSE file distributed with this source code.

"""Block functions f_j paired with their proximity operators."""

from typing import Callable, Optional
import math

import numpy as np

from twostep.proxlib import prox as ops

#: slack when deciding membership of an indicator's set
MEMBERSHIP_TOL = 1e-9


class ProxFunction:
    """A proper lsc convex function known through its value and its prox.

    ``prox(u, gamma)`` returns argmin_x gamma f(x) + |x - u|^2 / 2.
    """

    def __init__(
        self,
        dim: int,
        prox: Callable[[np.ndarray, float], np.ndarray],
        value: Callable[[np.ndarray], float],
        label: str,
    ):
        self.dim = int(dim)
        self._prox = prox
        self._value = value
        self.label = label

    def prox(self, u, gamma: float) -> np.ndarray:
        return self._prox(np.asarray(u, dtype=float), gamma)

    def value(self, x) -> float:
        return self._value(np.asarray(x, dtype=float))

    def __repr__(self):
        return "<ProxFunction {} dim={}>".format(self.label, self.dim)


def zero_function(dim: int) -> ProxFunction:
    return ProxFunction(dim, lambda u, gamma: u.copy(), lambda x: 0.0, "zero")


def l1_norm(dim: int, weights: ops.Weights = 1.0) -> ProxFunction:
    return ProxFunction(
        dim,
        lambda u, gamma: ops.prox_weighted_l1(u, gamma, weights),
        lambda x: ops.weighted_l1_value(x, weights),
        "l1",
    )


def linear_function(c) -> ProxFunction:
    """f(x) = <c, x>."""
    c = np.asarray(c, dtype=float)
    return ProxFunction(
        c.shape[0], lambda u, gamma: ops.prox_linear_shift(u, gamma, c), lambda x: float(np.dot(c, x)), "linear"
    )


def group_ball_indicator(mu: float, d: int) -> ProxFunction:
    """Indicator of {y in R^{2d}: |(y_i, y_{i+d})| <= mu for every i}."""

    def value(y):
        norms = np.hypot(y[:d], y[d:])
        return 0.0 if np.all(norms <= mu * (1.0 + MEMBERSHIP_TOL)) else math.inf

    return ProxFunction(2 * d, lambda u, gamma: ops.project_group_l2_ball(u, mu, d), value, "group_ball")


def box_indicator(radii) -> ProxFunction:
    """Indicator of the box prod_i [-r_i, r_i]."""
    radii = np.asarray(radii, dtype=float)

    def value(y):
        return 0.0 if np.all(np.abs(y) <= radii * (1.0 + MEMBERSHIP_TOL) + MEMBERSHIP_TOL) else math.inf

    return ProxFunction(radii.shape[0], lambda u, gamma: ops.project_box(u, radii), value, "box")


def point_indicator(point) -> ProxFunction:
    """Indicator of a single point p; its prox is constant."""
    point = np.asarray(point, dtype=float)

    def value(x):
        return 0.0 if np.allclose(x, point, rtol=0.0, atol=MEMBERSHIP_TOL) else math.inf

    return ProxFunction(point.shape[0], lambda u, gamma: point.copy(), value, "point")


def conjugate(fn: ProxFunction, value: Optional[Callable[[np.ndarray], float]] = None) -> ProxFunction:
    """f* through the Moreau identity; its value must be supplied when needed."""

    def missing(_):
        raise NotImplementedError("conjugate value of {} is not available".format(fn.label))

    return ProxFunction(
        fn.dim,
        lambda u, gamma: ops.prox_of_conjugate(fn.prox, u, gamma),
        value or missing,
        "{}*".format(fn.label),
    )
