# -*- coding: utf-8; -*-
#
# This file is part of twostep-proximity.
#
# For the full copyright and license information, please see the
# LICENSE file distributed with this source code.

"""Imaging operators on d1 x d2 images vectorised column by column.

All operators use periodic boundaries. An image ``X`` of shape ``(d1, d2)``
maps to the vector ``X.ravel(order="F")`` so entry ``(k1, k2)`` sits at
``k1 + d1 * k2``.
"""

from typing import Iterable

import numpy as np
import scipy.fft

from twostep.errors import SizingError
from twostep.linops.operators import LinearOperator


def to_image(u: np.ndarray, d1: int, d2: int) -> np.ndarray:
    return np.reshape(u, (d1, d2), order="F")


def to_vector(image: np.ndarray) -> np.ndarray:
    return np.ravel(image, order="F")


def _check_dims(d1: int, d2: int, minimum: int = 2):
    if d1 < minimum or d2 < minimum:
        raise SizingError(message="image dimensions must be at least {0}x{0}, got {1}x{2}".format(minimum, d1, d2))


def make_difference_matrix(r: int) -> LinearOperator:
    """Periodic forward difference (D u)_i = u_i - u_{i-1}."""
    if r < 2:
        raise SizingError(message="difference operator needs r >= 2, got {}".format(r))
    return LinearOperator(
        r,
        r,
        lambda u: u - np.roll(u, 1),
        lambda w: w - np.roll(w, -1),
        label="D_{}".format(r),
    )


def make_tv_operator(d1: int, d2: int) -> LinearOperator:
    """B = [I_{d2} (x) D_{d1}; D_{d2} (x) I_{d1}], the periodic discrete gradient."""
    _check_dims(d1, d2)
    d = d1 * d2

    def forward(u):
        image = to_image(u, d1, d2)
        vertical = image - np.roll(image, 1, axis=0)
        horizontal = image - np.roll(image, 1, axis=1)
        return np.concatenate([to_vector(vertical), to_vector(horizontal)])

    def adjoint(w):
        vertical = to_image(w[:d], d1, d2)
        horizontal = to_image(w[d:], d1, d2)
        image = (vertical - np.roll(vertical, -1, axis=0)) + (horizontal - np.roll(horizontal, -1, axis=1))
        return to_vector(image)

    return LinearOperator(2 * d, d, forward, adjoint, label="B")


def _low(x, axis):
    return (x + np.roll(x, -1, axis=axis)) / 2.0


def _high(x, axis):
    return (x - np.roll(x, -1, axis=axis)) / 2.0


def _low_adjoint(x, axis):
    return (x + np.roll(x, 1, axis=axis)) / 2.0


def _high_adjoint(x, axis):
    return (x - np.roll(x, 1, axis=axis)) / 2.0


def make_haar_undecimated(d1: int, d2: int) -> LinearOperator:
    """One-level undecimated Haar frame W: R^d -> R^{4d}.

    Output blocks are ordered LL, LH, HL, HH (first letter along axis 0).
    W^T W = I so the frame is tight and |W|^2 = 1.
    """
    _check_dims(d1, d2)
    if d1 % 2 or d2 % 2:
        raise SizingError(message="Haar frame needs even dimensions, got {}x{}".format(d1, d2))
    d = d1 * d2
    filters = ((_low, _low_adjoint), (_high, _high_adjoint))

    def forward(u):
        image = to_image(u, d1, d2)
        parts = []
        for first, _ in filters:
            rows = first(image, 0)
            for second, _ in filters:
                parts.append(to_vector(second(rows, 1)))
        return np.concatenate(parts)

    def adjoint(w):
        image = np.zeros((d1, d2))
        index = 0
        for _, first_adjoint in filters:
            for _, second_adjoint in filters:
                band = to_image(w[index * d : (index + 1) * d], d1, d2)
                image = image + first_adjoint(second_adjoint(band, 1), 0)
                index += 1
        return to_vector(image)

    return LinearOperator(4 * d, d, forward, adjoint, label="W")


def normalize_mask(mask: Iterable[int], d: int) -> np.ndarray:
    """Sorted unique flat frequency indices; rejects empty or out-of-range masks."""
    indices = np.unique(np.asarray(list(mask), dtype=np.int64))
    if indices.size == 0:
        raise SizingError(message="sampling mask is empty")
    if indices[0] < 0 or indices[-1] >= d:
        raise SizingError(message="sampling mask index out of range [0, {})".format(d))
    return indices


def make_partial_fourier(d1: int, d2: int, mask: Iterable[int]) -> LinearOperator:
    """K = S_mask F: orthonormal 2-D DFT restricted to the mask, split as [real; imag]."""
    _check_dims(d1, d2)
    d = d1 * d2
    indices = normalize_mask(mask, d)
    q = indices.size

    def forward(u):
        spectrum = to_vector(scipy.fft.fft2(to_image(u, d1, d2), norm="ortho"))[indices]
        return np.concatenate([spectrum.real, spectrum.imag])

    def adjoint(w):
        spectrum = np.zeros(d, dtype=complex)
        spectrum[indices] = w[:q] + 1j * w[q:]
        return to_vector(np.real(scipy.fft.ifft2(to_image(spectrum, d1, d2), norm="ortho")))

    operator = LinearOperator(2 * q, d, forward, adjoint, label="K")
    operator.mask = indices
    return operator
