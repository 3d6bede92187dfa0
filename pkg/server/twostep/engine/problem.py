# -*- coding: utf-8; -*-
#
# This file is part of twostep-proximity.
#
# For the full copyright and license information, please see the
# LICENSE file distributed with this source code.

"""Problem, algorithm and iterate containers shared by every engine."""

from typing import List, NamedTuple, Optional, Sequence, Tuple

import numpy as np

from twostep.common import FAMILY, THETA_FAMILIES, get_inner_max_iter, get_inner_tol, resolve_family
from twostep.errors import SizingError
from twostep.linops.operators import BlockRowOperator, LinearOperator, as_vector
from twostep.proxlib.functions import ProxFunction


def accumulate(terms, length: int) -> np.ndarray:
    """Left-to-right sum of vectors; zeros when there are none."""
    if not terms:
        return np.zeros(length)
    total = terms[0]
    for term in terms[1:]:
        total = total + term
    return total


class Block(NamedTuple):
    function: ProxFunction
    operator: LinearOperator

    @property
    def size(self) -> int:
        return self.operator.cols


class BlockProblem:
    """min sum_i f_i(x_i) subject to sum_i A_i x_i = b."""

    def __init__(self, blocks: Sequence[Block], b, label: str = "problem"):
        if not blocks:
            raise SizingError(message="a problem needs at least one block")
        self.blocks: List[Block] = [Block(*block) for block in blocks]
        self.m = self.blocks[0].operator.rows
        self.b = as_vector(b, self.m, "right-hand side b")
        self.label = label
        for index, block in enumerate(self.blocks):
            if block.operator.rows != self.m:
                raise SizingError.dimensionMismatchError("rows of A_{}".format(index + 1), self.m, block.operator.rows)
            if block.function.dim != block.operator.cols:
                raise SizingError.dimensionMismatchError(
                    "dimension of f_{}".format(index + 1), block.operator.cols, block.function.dim
                )
        self.A = BlockRowOperator([block.operator for block in self.blocks])

    @property
    def s(self) -> int:
        return len(self.blocks)

    @property
    def sizes(self) -> List[int]:
        return [block.size for block in self.blocks]

    @property
    def n(self) -> int:
        return sum(self.sizes)

    @property
    def operators(self) -> List[LinearOperator]:
        return [block.operator for block in self.blocks]

    def residual(self, x: Sequence[np.ndarray]) -> np.ndarray:
        """sum_i A_i x_i - b, summed left to right."""
        return accumulate([block.operator.apply(part) for block, part in zip(self.blocks, x)], self.m) - self.b

    def objective(self, x: Sequence[np.ndarray]) -> float:
        return float(sum(block.function.value(part) for block, part in zip(self.blocks, x)))

    def dense_blocks(self) -> List[np.ndarray]:
        return [block.operator.to_dense() for block in self.blocks]

    def __repr__(self):
        return "<BlockProblem {} s={} n={} m={}>".format(self.label, self.s, self.n, self.m)


class InnerSolverConfig(NamedTuple):
    max_inner: int = 500
    inner_tol: float = 1e-10

    @classmethod
    def from_config(cls, current_app=None) -> "InnerSolverConfig":
        return cls(get_inner_max_iter(current_app), get_inner_tol(current_app))


class AlgorithmSpec(NamedTuple):
    family: str
    alphas: Tuple[float, ...]
    beta: float
    theta: float = 0.0
    #: 0-based blocks resolved implicitly by the hybrid family
    partition: Tuple[int, ...] = ()
    inner: InnerSolverConfig = InnerSolverConfig()

    def gammas(self) -> List[float]:
        return [alpha / self.beta for alpha in self.alphas]


def make_spec(family: str, alphas, beta: float, theta: float = 0.0, partition=(), inner=None) -> AlgorithmSpec:
    """Build and validate an AlgorithmSpec; aliases such as ``2sfppa`` are accepted."""
    spec = AlgorithmSpec(
        resolve_family(family),
        tuple(float(alpha) for alpha in alphas),
        float(beta),
        float(theta),
        tuple(int(i) for i in partition),
        inner or InnerSolverConfig.from_config(),
    )
    validate_spec(spec)
    return spec


def validate_spec(spec: AlgorithmSpec, problem: Optional[BlockProblem] = None) -> None:
    if not spec.alphas or any(not alpha > 0 for alpha in spec.alphas):
        raise ValueError("alphas must be positive")
    if not spec.beta > 0:
        raise ValueError("beta must be positive")
    if spec.family == FAMILY.VARIANT_DIAG and not 0.0 <= spec.theta < 1.0:
        raise ValueError("theta must lie in [0, 1) for {}".format(spec.family))
    if spec.family in THETA_FAMILIES and spec.theta < 0:
        raise ValueError("theta must be non-negative")
    if spec.inner.max_inner <= 0 or not spec.inner.inner_tol > 0:
        raise ValueError("inner solver settings must be positive")
    if problem is not None:
        if len(spec.alphas) != problem.s:
            raise SizingError.dimensionMismatchError("alphas", problem.s, len(spec.alphas))
        if any(i < 0 or i >= problem.s for i in spec.partition):
            raise SizingError(message="hybrid partition {} outside blocks 0..{}".format(spec.partition, problem.s - 1))


class IterateState:
    """v = (x_1, ..., x_s, y) plus the previous iterate for two-step memory."""

    def __init__(self, x, y, prev_x=None, prev_y=None, k: int = 0):
        self.x: List[np.ndarray] = [np.array(part, dtype=float) for part in x]
        self.y: np.ndarray = np.array(y, dtype=float)
        self.prev_x: List[np.ndarray] = [np.array(part, dtype=float) for part in (self.x if prev_x is None else prev_x)]
        self.prev_y: np.ndarray = np.array(self.y if prev_y is None else prev_y, dtype=float)
        self.k = k
        #: set when an inner solve stopped at max_inner during the step that produced this state
        self.inner_stalls = 0

    @classmethod
    def zeros(cls, problem: BlockProblem) -> "IterateState":
        return cls([np.zeros(size) for size in problem.sizes], np.zeros(problem.m))

    def check(self, problem: BlockProblem) -> "IterateState":
        if len(self.x) != problem.s or len(self.prev_x) != problem.s:
            raise SizingError.dimensionMismatchError("number of x blocks", problem.s, len(self.x))
        for index, (size, part, prev) in enumerate(zip(problem.sizes, self.x, self.prev_x)):
            if part.shape != (size,) or prev.shape != (size,):
                raise SizingError.dimensionMismatchError("x_{}".format(index + 1), size, part.shape)
        if self.y.shape != (problem.m,) or self.prev_y.shape != (problem.m,):
            raise SizingError.dimensionMismatchError("y", problem.m, self.y.shape)
        return self

    def advance(self, x, y) -> "IterateState":
        """New state with (x, y) current and this state's iterate as memory."""
        return IterateState(x, y, prev_x=self.x, prev_y=self.y, k=self.k + 1)

    def stacked(self) -> np.ndarray:
        return np.concatenate(self.x + [self.y])

    def previous_stacked(self) -> np.ndarray:
        return np.concatenate(self.prev_x + [self.prev_y])

    def copy(self) -> "IterateState":
        state = IterateState(self.x, self.y, self.prev_x, self.prev_y, self.k)
        state.inner_stalls = self.inner_stalls
        return state

    def __repr__(self):
        return "<IterateState k={} blocks={}>".format(self.k, len(self.x))


class StopCriteria(NamedTuple):
    max_iter: int = 1000
    eps2_tol: Optional[float] = None
    kkt_tol: Optional[float] = 1e-8
