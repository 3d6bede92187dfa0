# -*- coding: utf-8; -*-
#
# This file is part of twostep-proximity.
#
# For the full copyright and license information, please see the
# LICENSE file distributed with this source code.

"""Matrix-free linear operators with adjoints."""

from typing import Callable, List, Optional, Sequence
import logging

import numpy as np

from twostep.errors import SizingError

logger = logging.getLogger(__name__)

VectorMap = Callable[[np.ndarray], np.ndarray]


def as_vector(u, length: int, what: str = "vector") -> np.ndarray:
    """Return ``u`` as a 1-D float array of the given length."""
    u = np.asarray(u, dtype=float)
    if u.ndim != 1 or u.shape[0] != length:
        raise SizingError.dimensionMismatchError(what, length, u.shape[0] if u.ndim == 1 else u.shape)
    return u


class LinearOperator:
    """Linear map R^cols -> R^rows given by a forward and an adjoint callable.

    Operators are immutable after construction; ``apply`` never mutates state so
    one instance may be shared by concurrent solves.
    """

    def __init__(self, rows: int, cols: int, forward: VectorMap, adjoint: VectorMap, label: str = "op"):
        if int(rows) <= 0 or int(cols) <= 0:
            raise SizingError(message="operator {} must have positive shape, got {}x{}".format(label, rows, cols))
        self.rows = int(rows)
        self.cols = int(cols)
        self.label = label
        self._forward = forward
        self._adjoint = adjoint

    @property
    def shape(self):
        return self.rows, self.cols

    def apply(self, u) -> np.ndarray:
        return self._forward(as_vector(u, self.cols, "{} forward input".format(self.label)))

    def adjoint_apply(self, w) -> np.ndarray:
        return self._adjoint(as_vector(w, self.rows, "{} adjoint input".format(self.label)))

    __call__ = apply

    @property
    def T(self) -> "LinearOperator":
        return LinearOperator(self.cols, self.rows, self._adjoint, self._forward, label=_transpose_label(self.label))

    def to_dense(self) -> np.ndarray:
        """Materialize the operator column by column (desk-scale only)."""
        dense = np.empty((self.rows, self.cols))
        e = np.zeros(self.cols)
        for j in range(self.cols):
            e[j] = 1.0
            dense[:, j] = self.apply(e)
            e[j] = 0.0
        return dense

    def __repr__(self):
        return "<{} {} {}x{}>".format(type(self).__name__, self.label, self.rows, self.cols)


def _transpose_label(label: str) -> str:
    return label[:-2] if label.endswith("^T") else label + "^T"


class MatrixOperator(LinearOperator):
    """Operator realised by an explicit dense matrix."""

    def __init__(self, matrix, label: str = "M"):
        matrix = np.atleast_2d(np.asarray(matrix, dtype=float))
        self.matrix = matrix
        super().__init__(matrix.shape[0], matrix.shape[1], matrix.dot, matrix.T.dot, label=label)

    def to_dense(self) -> np.ndarray:
        return self.matrix.copy()


class BlockRowOperator(LinearOperator):
    """A = [A_1 ... A_s]: operators sharing their row count, acting on stacked vectors."""

    def __init__(self, blocks: Sequence[LinearOperator], label: str = "A"):
        if not blocks:
            raise SizingError(message="block row operator needs at least one block")
        rows = blocks[0].rows
        for block in blocks:
            if block.rows != rows:
                raise SizingError.dimensionMismatchError("rows of block {}".format(block.label), rows, block.rows)

        self.blocks: List[LinearOperator] = list(blocks)
        self.sizes = [block.cols for block in self.blocks]
        self.offsets = np.concatenate([[0], np.cumsum(self.sizes)]).astype(int)
        super().__init__(rows, int(self.offsets[-1]), self._stacked_forward, self._stacked_adjoint, label=label)

    def split(self, u: np.ndarray) -> List[np.ndarray]:
        return [u[self.offsets[i] : self.offsets[i + 1]] for i in range(len(self.blocks))]

    def _stacked_forward(self, u: np.ndarray) -> np.ndarray:
        out = np.zeros(self.rows)
        for block, part in zip(self.blocks, self.split(u)):
            out = out + block.apply(part)
        return out

    def _stacked_adjoint(self, w: np.ndarray) -> np.ndarray:
        return np.concatenate([block.adjoint_apply(w) for block in self.blocks])


def identity(n: int, label: Optional[str] = None) -> LinearOperator:
    return LinearOperator(n, n, np.array, np.array, label=label or "I_{}".format(n))


def scaled(op: LinearOperator, factor: float) -> LinearOperator:
    factor = float(factor)
    return LinearOperator(
        op.rows,
        op.cols,
        lambda u: factor * op.apply(u),
        lambda w: factor * op.adjoint_apply(w),
        label="{:g}*{}".format(factor, op.label),
    )


def stack_rows(blocks: Sequence[LinearOperator], label: str = "A") -> BlockRowOperator:
    return BlockRowOperator(blocks, label=label)


def skew_operator(A: LinearOperator) -> LinearOperator:
    """S_A = [[0, -A^T], [A, 0]] acting on v = (x, y); S_A^T = -S_A."""
    n, m = A.cols, A.rows

    def forward(v):
        x, y = v[:n], v[n:]
        return np.concatenate([-A.adjoint_apply(y), A.apply(x)])

    def adjoint(v):
        return -forward(v)

    return LinearOperator(n + m, n + m, forward, adjoint, label="S_{}".format(A.label))


def apply(op: LinearOperator, u) -> np.ndarray:
    return op.apply(u)


def adjoint_apply(op: LinearOperator, w) -> np.ndarray:
    return op.adjoint_apply(w)


def check_adjoint(op: LinearOperator, trials: int = 100, seed: int = 0) -> float:
    """Worst value of |<Au, w> - <u, A^T w>| / (1 + |u| |w|) over random pairs."""
    rng = np.random.default_rng(seed)
    worst = 0.0
    for _ in range(trials):
        u = rng.standard_normal(op.cols)
        w = rng.standard_normal(op.rows)
        mismatch = abs(np.dot(op.apply(u), w) - np.dot(u, op.adjoint_apply(w)))
        worst = max(worst, mismatch / (1.0 + np.linalg.norm(u) * np.linalg.norm(w)))
    return worst


def export_dense_csv(op: LinearOperator, path) -> None:
    """Write the dense realisation of a small operator, row-major, one matrix row per line."""
    np.savetxt(path, op.to_dense(), delimiter=",", fmt="%.17g")
    logger.info("Exported {} ({}x{}) to {}".format(op.label, op.rows, op.cols, path))
