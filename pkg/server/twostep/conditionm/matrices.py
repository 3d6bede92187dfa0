# -*- coding: utf-8; -*-
#
# This file is part of twostep-proximity.
#
# For the full copyright and license information, please see the
# LICENSE file distributed with this source code.

"""Dense M0, M1, M2 for each algorithm family on desk-scale instances."""

from typing import List, NamedTuple, Sequence

import numpy as np

from twostep.common import FAMILY, resolve_family
from twostep.errors import SizingError
from twostep.linops.operators import LinearOperator


class MatrixSet(NamedTuple):
    M0: np.ndarray
    M1: np.ndarray
    M2: np.ndarray


class BlockLayout:
    """Offsets of x_1, ..., x_s, y inside v = (x_1, ..., x_s, y)."""

    def __init__(self, sizes: Sequence[int], m: int):
        self.sizes = [int(size) for size in sizes]
        self.m = int(m)
        self.offsets = np.concatenate([[0], np.cumsum(self.sizes + [self.m])]).astype(int)
        self.n = int(self.offsets[-2])
        self.dim = self.n + self.m

    @property
    def s(self) -> int:
        return len(self.sizes)

    def block(self, i: int) -> slice:
        """Slice of block i; i = s addresses y."""
        return slice(self.offsets[i], self.offsets[i + 1])

    @property
    def x(self) -> slice:
        return slice(0, self.n)

    @property
    def y(self) -> slice:
        return slice(self.n, self.dim)


def dense_blocks(A_blocks) -> List[np.ndarray]:
    dense = [
        block.to_dense() if isinstance(block, LinearOperator) else np.atleast_2d(np.asarray(block, dtype=float))
        for block in A_blocks
    ]
    rows = dense[0].shape[0]
    for block in dense:
        if block.shape[0] != rows:
            raise SizingError.dimensionMismatchError("rows of A block", rows, block.shape[0])
    return dense


def precision_diagonal(layout: BlockLayout, alphas: Sequence[float], beta: float) -> np.ndarray:
    """Diagonal of R = diag(beta/alpha_1 I, ..., beta/alpha_s I, I/beta)."""
    parts = [np.full(size, beta / alpha) for size, alpha in zip(layout.sizes, alphas)]
    parts.append(np.full(layout.m, 1.0 / beta))
    return np.concatenate(parts)


def build_E(A_blocks, alphas: Sequence[float], beta: float) -> np.ndarray:
    """E = [[I, -P^{-1} A^T], [beta A, I]] with P = diag(beta/alpha_j I)."""
    blocks = dense_blocks(A_blocks)
    layout = BlockLayout([block.shape[1] for block in blocks], blocks[0].shape[0])
    A = np.hstack(blocks)
    p_inverse = np.concatenate([np.full(size, alpha / beta) for size, alpha in zip(layout.sizes, alphas)])
    E = np.eye(layout.dim)
    E[layout.x, layout.y] = -p_inverse[:, None] * A.T
    E[layout.y, layout.x] = beta * A
    return E


def build_matrix_set(
    family: str, A_blocks, alphas: Sequence[float], beta: float, theta: float = 0.0, partition=()
) -> MatrixSet:
    """Assemble M0, M1, M2 so that the two-step scheme reproduces ``family``.

    ``partition`` lists the 0-based blocks resolved implicitly by the hybrid family.
    """
    family = resolve_family(family)
    blocks = dense_blocks(A_blocks)
    s = len(blocks)
    if len(alphas) != s:
        raise SizingError.dimensionMismatchError("alphas", s, len(alphas))

    layout = BlockLayout([block.shape[1] for block in blocks], blocks[0].shape[0])
    N = layout.dim
    M0 = np.zeros((N, N))
    M2 = np.zeros((N, N))
    bx, by = layout.block, layout.y

    def gram(i, j):
        return blocks[i].T.dot(blocks[j])

    if family in (FAMILY.PD_PRIMAL_FIRST, FAMILY.PD_DUAL_FIRST):
        sign = -1.0 if family == FAMILY.PD_PRIMAL_FIRST else 1.0
        A = np.hstack(blocks)
        M0[layout.x, layout.x] = np.diag(precision_diagonal(layout, alphas, beta)[layout.x])
        M0[layout.x, by] = sign * A.T
        M0[by, layout.x] = sign * A
        M0[by, by] = np.eye(layout.m) / beta
        return MatrixSet(M0, M0.copy(), M2)

    implicit_blocks = _implicit_blocks(family, s, partition)
    for i in range(s):
        M0[bx(i), bx(i)] = beta / alphas[i] * np.eye(layout.sizes[i])
        if i not in implicit_blocks:
            M0[bx(i), bx(i)] -= beta * gram(i, i)
        for j in range(i + 1, s):
            M0[bx(i), bx(j)] = -beta * gram(i, j)
            M2[bx(i), bx(j)] = beta * gram(i, j)
    M0[by, by] = np.eye(layout.m) / beta

    if family == FAMILY.LADMM_DIRECT:
        return MatrixSet(M0, M0.copy(), np.zeros((N, N)))

    if family == FAMILY.VARIANT_DIAG:
        for i in range(s):
            M2[bx(i), bx(i)] = -theta * beta / alphas[i] * np.eye(layout.sizes[i])
    elif family == FAMILY.VARIANT_DIAG_EXPLICIT:
        for i in range(s):
            M2[bx(i), bx(i)] = beta * gram(i, i)
    elif family in (FAMILY.VARIANT_OFFDIAG, FAMILY.VARIANT_OFFDIAG_EXPLICIT):
        for i in range(s):
            for j in range(i):
                M0[bx(i), bx(j)] = theta * beta * gram(i, j)
        M2 = (theta + 1.0) * M2

    return MatrixSet(M0, M0 - M2, M2)


def _implicit_blocks(family: str, s: int, partition) -> frozenset:
    if family in (FAMILY.TWO_STEP_IMPLICIT, FAMILY.VARIANT_DIAG, FAMILY.VARIANT_OFFDIAG):
        return frozenset(range(s))
    if family == FAMILY.HYBRID:
        chosen = frozenset(int(i) for i in partition)
        if any(i < 0 or i >= s for i in chosen):
            raise SizingError(message="hybrid partition {} outside blocks 0..{}".format(sorted(chosen), s - 1))
        return chosen
    return frozenset()
