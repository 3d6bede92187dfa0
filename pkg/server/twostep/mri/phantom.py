# -*- coding: utf-8; -*-
#
# This file is part of twostep-proximity.
#
# For the full copyright and license information, please see the
# LICENSE file distributed with this source code.

"""Shepp-Logan test image sampled at pixel centres."""

from typing import NamedTuple, Tuple
import math

import numpy as np

from twostep.errors import SizingError
from twostep.linops.imaging import to_vector

MIN_PHANTOM_DIM = 16


class Ellipse(NamedTuple):
    intensity: float
    a: float
    b: float
    x0: float
    y0: float
    #: rotation in degrees, counter-clockwise
    phi: float = 0.0

    def contains(self, x, y):
        angle = math.radians(self.phi)
        dx = x - self.x0
        dy = y - self.y0
        u = dx * math.cos(angle) + dy * math.sin(angle)
        v = -dx * math.sin(angle) + dy * math.cos(angle)
        return (u / self.a) ** 2 + (v / self.b) ** 2 <= 1.0


#: unit-range (modified) intensities on the standard ellipse geometry
SHEPP_LOGAN: Tuple[Ellipse, ...] = (
    Ellipse(1.0, 0.69, 0.92, 0.0, 0.0),
    Ellipse(-0.8, 0.6624, 0.874, 0.0, -0.0184),
    Ellipse(-0.2, 0.11, 0.31, 0.22, 0.0, -18.0),
    Ellipse(-0.2, 0.16, 0.41, -0.22, 0.0, 18.0),
    Ellipse(0.1, 0.21, 0.25, 0.0, 0.35),
    Ellipse(0.1, 0.046, 0.046, 0.0, 0.1),
    Ellipse(0.1, 0.046, 0.046, 0.0, -0.1),
    Ellipse(0.1, 0.046, 0.023, -0.08, -0.605),
    Ellipse(0.1, 0.023, 0.023, 0.0, -0.606),
    Ellipse(0.1, 0.023, 0.046, 0.06, -0.605),
)


def pixel_centres(d1: int, d2: int) -> Tuple[np.ndarray, np.ndarray]:
    """(x, y) coordinates in [-1, 1]^2; row 0 is the top of the image."""
    rows = 1.0 - (2.0 * np.arange(d1) + 1.0) / d1
    cols = -1.0 + (2.0 * np.arange(d2) + 1.0) / d2
    x, y = np.meshgrid(cols, rows)
    return x, y


def shepp_logan_image(d1: int, d2: int) -> np.ndarray:
    if d1 < MIN_PHANTOM_DIM or d2 < MIN_PHANTOM_DIM:
        raise SizingError(
            message="phantom needs at least {0}x{0} pixels, got {1}x{2}".format(MIN_PHANTOM_DIM, d1, d2)
        )
    x, y = pixel_centres(d1, d2)
    image = np.zeros((d1, d2))
    for ellipse in SHEPP_LOGAN:
        image[ellipse.contains(x, y)] += ellipse.intensity
    return image


def shepp_logan(d1: int, d2: int) -> np.ndarray:
    """Column-major vector of :func:`shepp_logan_image`."""
    return to_vector(shepp_logan_image(d1, d2))
