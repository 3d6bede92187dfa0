# -*- coding: utf-8; -*-
#
# This file is part of twostep-proximity.
#
# For the full copyright and license information, please see the
# LICENSE file distributed with this source code.

"""Dense reference engine for the general two-step scheme.

v^{k+1} = T(G v^{k+1} + R^{-1} M1 v^k + R^{-1} M2 v^{k-1}) with G = E - R^{-1} M0.
The y row of G must not depend on y; y^{k+1} is then affine in x^{k+1} and is
substituted into the x rows, which must leave a block lower-triangular system.
Diagonal blocks of that system are zero (explicit update) or symmetric negative
semidefinite (resolved by inner iterations).
"""

from typing import List, Optional
import logging

import numpy as np

from twostep.conditionm.matrices import BlockLayout, MatrixSet, build_E, precision_diagonal
from twostep.engine.inner import report_stall, solve_block
from twostep.engine.problem import BlockProblem, InnerSolverConfig, IterateState
from twostep.errors import SizingError, StructureError

logger = logging.getLogger(__name__)

STRUCTURE_TOL = 1e-10


class DenseSchedule:
    """Substituted, triangular form of a matrix set; reusable across iterations."""

    def __init__(self, ms: MatrixSet, problem: BlockProblem, R, E):
        self.layout = BlockLayout(problem.sizes, problem.m)
        N = self.layout.dim
        self.R = np.diag(R).copy() if np.ndim(R) == 2 else np.asarray(R, dtype=float)
        E = np.asarray(E, dtype=float)
        for M in (*ms, E):
            if M.shape != (N, N):
                raise SizingError.dimensionMismatchError("matrix side", N, M.shape)
        if self.R.shape != (N,) or np.any(self.R <= 0):
            raise SizingError(message="R must be a positive diagonal of length {}".format(N))

        self.M1 = np.asarray(ms.M1, dtype=float)
        self.M2 = np.asarray(ms.M2, dtype=float)
        G = E - ms.M0 / self.R[:, None]
        tol = STRUCTURE_TOL * max(1.0, float(np.max(np.abs(G))))
        lx, ly = self.layout.x, self.layout.y

        if np.max(np.abs(G[ly, ly])) > tol:
            raise StructureError(message="y-update depends on y^{k+1}; matrix set outside the dense engine")
        self.G_yx = G[ly, lx]
        self.G_xy = G[lx, ly]
        self.G_sub = G[lx, lx] + self.G_xy.dot(self.G_yx)

        self.gammas = [float(1.0 / self.R[self.layout.offsets[j]]) for j in range(problem.s)]
        self.beta = float(1.0 / self.R[self.layout.n]) if problem.m else 1.0
        self.implicit = {}
        for j in range(problem.s):
            bj = self._xblock(j)
            for i in range(j + 1, problem.s):
                if np.max(np.abs(self.G_sub[bj, self._xblock(i)])) > tol:
                    raise StructureError(
                        message="block ({}, {}) above the diagonal is non-zero; system is not lower triangular".format(
                            j + 1, i + 1
                        )
                    )
            D = self.G_sub[bj, bj]
            if np.max(np.abs(D)) <= tol:
                continue
            if np.max(np.abs(D - D.T)) > tol:
                raise StructureError(message="diagonal block {} is not symmetric".format(j + 1))
            eigenvalues = np.linalg.eigvalsh((D + D.T) / 2.0)
            if eigenvalues[-1] > tol:
                raise StructureError(message="diagonal block {} is not negative semidefinite".format(j + 1))
            coupling = -(D + D.T) / 2.0
            self.implicit[j] = (coupling, float(-eigenvalues[0]))

    def _xblock(self, j: int) -> slice:
        offsets = self.layout.offsets
        return slice(offsets[j], offsets[j + 1])


def generic_two_step_dense(
    ms: MatrixSet,
    problem: BlockProblem,
    state: IterateState,
    R,
    E,
    inner: Optional[InnerSolverConfig] = None,
    schedule: Optional[DenseSchedule] = None,
) -> IterateState:
    """One step of the general scheme, resolving x_1, ..., x_s then y."""
    schedule = schedule or DenseSchedule(ms, problem, R, E)
    inner = inner or InnerSolverConfig.from_config()
    layout = schedule.layout
    state.check(problem)

    r = (schedule.M1.dot(state.stacked()) + schedule.M2.dot(state.previous_stacked())) / schedule.R
    r_y = r[layout.y] - schedule.beta * problem.b
    c = r[layout.x] + schedule.G_xy.dot(r_y)

    x_new = np.zeros(layout.n)
    new_blocks: List[np.ndarray] = []
    stalls = 0
    for j, block in enumerate(problem.blocks):
        bj = schedule._xblock(j)
        u = c[bj] + schedule.G_sub[bj, : bj.start].dot(x_new[: bj.start])
        gamma = schedule.gammas[j]
        if j in schedule.implicit:
            coupling, coupling_norm = schedule.implicit[j]
            result = solve_block(block.function, gamma, u, coupling.dot, coupling_norm, state.x[j], inner)
            if not result.converged:
                stalls += 1
                report_stall(j, result, state.k)
            x_j = result.x
        else:
            x_j = block.function.prox(u, gamma)
        x_new[bj] = x_j
        new_blocks.append(x_j)

    y = schedule.G_yx.dot(x_new) + r_y
    new_state = state.advance(new_blocks, y)
    new_state.inner_stalls = stalls
    return new_state


def dense_operands(problem: BlockProblem, alphas, beta: float):
    """(R, E) of the general scheme for ``problem`` and step sizes."""
    layout = BlockLayout(problem.sizes, problem.m)
    return precision_diagonal(layout, alphas, beta), build_E(problem.dense_blocks(), alphas, beta)
