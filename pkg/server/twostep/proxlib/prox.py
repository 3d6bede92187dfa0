# -*- coding: utf-8; -*-
#
# This file is part of twostep-proximity.
#
# For the full copyright and license information, please see the
# LICENSE file distributed with this source code.

"""Closed-form proximity operators and projections."""

from typing import Callable, Optional, Union

import numpy as np

from twostep.errors import SizingError
from twostep.linops.imaging import make_tv_operator

Weights = Union[float, np.ndarray]


def _check_gamma(gamma: float):
    if not gamma > 0:
        raise ValueError("prox parameter gamma must be positive, got {}".format(gamma))


def _weights(weights: Weights, length: int) -> np.ndarray:
    weights = np.asarray(weights, dtype=float)
    if weights.ndim == 0:
        weights = np.full(length, float(weights))
    if weights.shape != (length,):
        raise SizingError.dimensionMismatchError("weights", length, weights.shape[0])
    if np.any(weights < 0):
        raise ValueError("weights must be non-negative")
    return weights


def prox_weighted_l1(u, gamma: float, weights: Weights = 1.0) -> np.ndarray:
    """Soft thresholding at gamma * w_i; ties |u_i| = gamma * w_i map to 0."""
    _check_gamma(gamma)
    u = np.asarray(u, dtype=float)
    threshold = gamma * _weights(weights, u.shape[0])
    return np.sign(u) * np.maximum(np.abs(u) - threshold, 0.0)


def project_group_l2_ball(y, mu: float, d: Optional[int] = None) -> np.ndarray:
    """Project each pair (y_i, y_{i+d}) onto the disc of radius mu; d defaults to len(y) / 2."""
    if not mu > 0:
        raise ValueError("ball radius must be positive, got {}".format(mu))
    y = np.asarray(y, dtype=float)
    d = y.shape[0] // 2 if d is None else d
    if y.shape[0] != 2 * d:
        raise SizingError.dimensionMismatchError("paired vector", 2 * d, y.shape[0])
    first, second = y[:d], y[d:]
    factor = mu / np.maximum(np.hypot(first, second), mu)
    return np.concatenate([first * factor, second * factor])


def project_box(y, radii: Weights) -> np.ndarray:
    """Componentwise projection onto [-r_i, r_i]; r_i = 0 pins the entry to 0."""
    y = np.asarray(y, dtype=float)
    radii = _weights(radii, y.shape[0])
    return np.clip(y, -radii, radii)


def prox_linear_shift(y, gamma: float, b) -> np.ndarray:
    """prox of gamma <b, .>: a plain shift."""
    _check_gamma(gamma)
    y = np.asarray(y, dtype=float)
    b = np.asarray(b, dtype=float)
    if b.shape != y.shape:
        raise SizingError.dimensionMismatchError("shift vector", y.shape[0], b.shape[0])
    return y - gamma * b


def prox_of_conjugate(prox: Callable[[np.ndarray, float], np.ndarray], y, gamma: float) -> np.ndarray:
    """Moreau: prox_{gamma f*}(y) = y - gamma prox_{f / gamma}(y / gamma)."""
    _check_gamma(gamma)
    y = np.asarray(y, dtype=float)
    return y - gamma * prox(y / gamma, 1.0 / gamma)


def group_l2_value(y, d: Optional[int] = None) -> float:
    """Sum over pairs of |(y_i, y_{i+d})|, the isotropic TV of a gradient field."""
    y = np.asarray(y, dtype=float)
    d = y.shape[0] // 2 if d is None else d
    if y.shape[0] != 2 * d:
        raise SizingError.dimensionMismatchError("paired vector", 2 * d, y.shape[0])
    return float(np.sum(np.hypot(y[:d], y[d:])))


def weighted_l1_value(x, weights: Weights = 1.0) -> float:
    x = np.asarray(x, dtype=float)
    return float(np.dot(_weights(weights, x.shape[0]), np.abs(x)))


def tv_value(u, d1: int, d2: int) -> float:
    """Isotropic total variation |u|_TV = psi(B u) of a column-major image vector."""
    return group_l2_value(make_tv_operator(d1, d2).apply(u), d1 * d2)
