# -*- coding: utf-8; -*-
#
# This file is part of twostep-proximity.
#
# For the full copyright and license information, please see the
# LICENSE file distributed with this source code.

"""Matrix-free steppers for every algorithm family.

Two-step families sweep x_1, ..., x_s in Gauss-Seidel order, each block seeing

    x_j <- prox_{(alpha_j / beta) f_j}(own_j - alpha_j A_j^T w_j),
    w_j = sum_{i<j} A_i lower_i + A_j self_j + sum_{i>j} A_i upper_i - b + y / beta,

and close with y <- y + beta (sum_i A_i x_i - b). The family only decides the
combinations ``own``, ``lower``, ``self`` and ``upper`` of current and previous
iterates; implicit blocks drop ``self`` and solve for x_j with inner iterations.
"""

from typing import Callable, Dict, List, Optional
import logging

import numpy as np

from twostep.common import FAMILY, IMPLICIT_FAMILIES
from twostep.engine.inner import report_stall, solve_block
from twostep.engine.problem import AlgorithmSpec, BlockProblem, IterateState, accumulate, validate_spec
from twostep.linops.norms import op_norm_sq_est

logger = logging.getLogger(__name__)

Combination = Callable[[np.ndarray, np.ndarray], np.ndarray]


def _current(x, _):
    return x


def _extrapolated(x, previous):
    return 2.0 * x - previous


class Stepper:
    """One iteration of ``spec.family`` on ``problem``; reusable across iterations."""

    def __init__(self, problem: BlockProblem, spec: AlgorithmSpec):
        validate_spec(spec, problem)
        self.problem = problem
        self.spec = spec
        family = spec.family
        theta = spec.theta

        if family == FAMILY.HYBRID:
            self.implicit = frozenset(spec.partition)
        elif family in IMPLICIT_FAMILIES:
            self.implicit = frozenset(range(problem.s))
        else:
            self.implicit = frozenset()

        self.own: Combination = _current
        self.lower: Optional[Combination] = None
        self.self_term: Combination = _current
        self.upper: Combination = _extrapolated

        if family == FAMILY.LADMM_DIRECT:
            self.upper = _current
        elif family == FAMILY.VARIANT_DIAG:
            self.own = lambda x, previous: x + theta * (x - previous)
        elif family == FAMILY.VARIANT_DIAG_EXPLICIT:
            self.self_term = _extrapolated
        elif family in (FAMILY.VARIANT_OFFDIAG, FAMILY.VARIANT_OFFDIAG_EXPLICIT):
            self.lower = lambda new, old: (1.0 + theta) * new - theta * old
            self.upper = lambda x, previous: (2.0 + theta) * x - (theta + 1.0) * previous

        self._coupling_norms: Dict[int, float] = {
            j: spec.alphas[j] * op_norm_sq_est(problem.blocks[j].operator) for j in self.implicit
        }

    def __call__(self, state: IterateState) -> IterateState:
        if self.spec.family == FAMILY.PD_PRIMAL_FIRST:
            return self._primal_first(state)
        if self.spec.family == FAMILY.PD_DUAL_FIRST:
            return self._dual_first(state)
        return self._two_step(state)

    def _two_step(self, state: IterateState) -> IterateState:
        problem, spec = self.problem, self.spec
        operators = problem.operators
        s, beta = problem.s, spec.beta
        x, previous = state.x, state.prev_x
        scaled_y = state.y / beta

        upper_images = [None] + [operators[i].apply(self.upper(x[i], previous[i])) for i in range(1, s)]
        new_x: List[np.ndarray] = []
        new_images: List[np.ndarray] = []
        lower_images: List[np.ndarray] = []
        stalls = 0

        for j in range(s):
            A_j = operators[j]
            alpha = spec.alphas[j]
            implicit = j in self.implicit

            terms = lower_images[:j]
            if not implicit:
                terms.append(A_j.apply(self.self_term(x[j], previous[j])))
            terms.extend(upper_images[j + 1 :])
            w = accumulate(terms, problem.m) - problem.b + scaled_y

            u = self.own(x[j], previous[j]) - alpha * A_j.adjoint_apply(w)
            function = problem.blocks[j].function
            if implicit:
                result = solve_block(
                    function,
                    alpha / beta,
                    u,
                    lambda z, A_j=A_j, alpha=alpha: alpha * A_j.adjoint_apply(A_j.apply(z)),
                    self._coupling_norms[j],
                    x[j],
                    spec.inner,
                )
                if not result.converged:
                    stalls += 1
                    report_stall(j, result, state.k)
                x_j = result.x
            else:
                x_j = function.prox(u, alpha / beta)

            new_x.append(x_j)
            new_images.append(A_j.apply(x_j))
            if self.lower is None:
                lower_images.append(new_images[j])
            else:
                lower_images.append(A_j.apply(self.lower(x_j, x[j])))

        y = state.y + beta * (accumulate(new_images, problem.m) - problem.b)

        new_state = state.advance(new_x, y)
        new_state.inner_stalls = stalls
        return new_state

    def _primal_first(self, state: IterateState) -> IterateState:
        problem, spec = self.problem, self.spec
        new_x = []
        images = []
        for j, block in enumerate(problem.blocks):
            gamma = spec.alphas[j] / spec.beta
            x_j = block.function.prox(state.x[j] - gamma * block.operator.adjoint_apply(state.y), gamma)
            new_x.append(x_j)
            images.append(block.operator.apply(2.0 * x_j - state.x[j]))
        y = state.y + spec.beta * (accumulate(images, problem.m) - problem.b)
        return state.advance(new_x, y)

    def _dual_first(self, state: IterateState) -> IterateState:
        problem, spec = self.problem, self.spec
        y = state.y + spec.beta * problem.residual(state.x)
        extrapolated = 2.0 * y - state.y
        new_x = []
        for j, block in enumerate(problem.blocks):
            gamma = spec.alphas[j] / spec.beta
            new_x.append(block.function.prox(state.x[j] - gamma * block.operator.adjoint_apply(extrapolated), gamma))
        return state.advance(new_x, y)


def step(problem: BlockProblem, spec: AlgorithmSpec, state: IterateState) -> IterateState:
    """One iteration; build a :class:`Stepper` once when iterating repeatedly."""
    return Stepper(problem, spec)(state.check(problem))


def two_step_implicit(problem, spec, state):
    return step(problem, spec._replace(family=FAMILY.TWO_STEP_IMPLICIT), state)


def two_step_explicit(problem, spec, state):
    return step(problem, spec._replace(family=FAMILY.TWO_STEP_EXPLICIT), state)


def ladmm_direct(problem, spec, state):
    return step(problem, spec._replace(family=FAMILY.LADMM_DIRECT), state)


def pd_primal_first(problem, spec, state):
    return step(problem, spec._replace(family=FAMILY.PD_PRIMAL_FIRST), state)


def pd_dual_first(problem, spec, state):
    return step(problem, spec._replace(family=FAMILY.PD_DUAL_FIRST), state)
