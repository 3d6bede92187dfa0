# -*- coding: utf-8; -*-
#
# This file is part of twostep-proximity.
#
# For the full copyright and license information, please see the
# LICENSE file distributed with this source code.

"""Pseudo-radial k-space sampling on the Cartesian DFT grid."""

import logging
import math

import numpy as np

from twostep.linops.imaging import normalize_mask

logger = logging.getLogger(__name__)


def _centred(d: int) -> np.ndarray:
    return np.arange(-(d // 2), d - d // 2)


def _line(d1: int, d2: int, angle: float):
    """Integer (row, col) offsets from DC of one digital line.

    Angle 0 runs along the frequency row through DC. The dominant axis is
    stepped one sample at a time, the other rounded with floor(t + 1/2).
    """
    c, s = math.cos(angle), math.sin(angle)
    if abs(c) >= abs(s):
        cols = _centred(d2)
        rows = np.floor(cols * (s / c) + 0.5).astype(np.int64)
    else:
        rows = _centred(d1)
        cols = np.floor(rows * (c / s) + 0.5).astype(np.int64)
    keep = (rows >= -(d1 // 2)) & (rows < d1 - d1 // 2) & (cols >= -(d2 // 2)) & (cols < d2 - d2 // 2)
    return rows[keep], cols[keep]


def radial_mask(d1: int, d2: int, n_lines: int) -> np.ndarray:
    """Sorted flat indices k1 + d1 * k2 of ``n_lines`` lines at angles l * pi / n_lines."""
    if n_lines < 1:
        raise ValueError("at least one radial line is required, got {}".format(n_lines))
    indices = []
    for line in range(n_lines):
        rows, cols = _line(d1, d2, line * math.pi / n_lines)
        indices.append(np.mod(rows, d1) + d1 * np.mod(cols, d2))
    mask = normalize_mask(np.concatenate(indices), d1 * d2)
    logger.debug("radial mask {}x{} with {} lines: {} samples".format(d1, d2, n_lines, mask.size))
    return mask


def mask_ratio(mask, d: int) -> float:
    """Fraction of the d frequencies that are sampled."""
    return float(np.unique(np.asarray(mask)).size) / d


def full_mask(d1: int, d2: int) -> np.ndarray:
    return np.arange(d1 * d2, dtype=np.int64)
