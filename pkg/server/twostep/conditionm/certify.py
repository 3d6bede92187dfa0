# -*- coding: utf-8; -*-
#
# This file is part of twostep-proximity.
#
# For the full copyright and license information, please see the
# LICENSE file distributed with this source code.

"""Analytic step-size bounds and their certificates."""

from typing import List, NamedTuple, Optional, Sequence, Tuple
import logging
import math

import numpy as np

from twostep.common import (
    FAMILY,
    IMPLICIT_FAMILIES,
    PD_FAMILIES,
    get_condition_m_max_dim,
    get_step_size_safety,
    resolve_family,
)
from twostep.conditionm.condition import check_condition_m
from twostep.conditionm.matrices import build_matrix_set
from twostep.errors import SizingError
from twostep.linops.norms import op_norm_sq_est
from twostep.linops.operators import BlockRowOperator, LinearOperator, scaled

logger = logging.getLogger(__name__)

RULE_THEORY = "theory"
RULE_PAPER_PRACTICAL = "paper_practical"
RULES = (RULE_THEORY, RULE_PAPER_PRACTICAL)
PRACTICAL_LABEL = "paper-practical, not theory-certified"

#: families whose bounds come from the dense Condition-M check
CONDITION_M_FAMILIES = (
    FAMILY.LADMM_DIRECT,
    FAMILY.VARIANT_DIAG,
    FAMILY.VARIANT_DIAG_EXPLICIT,
    FAMILY.VARIANT_OFFDIAG,
    FAMILY.VARIANT_OFFDIAG_EXPLICIT,
)

VARIANT_FAMILIES = CONDITION_M_FAMILIES[1:]


class StepSizeCertificate(NamedTuple):
    family: str
    alphas: Tuple[float, ...]
    beta: float
    mtilde_norm: float
    per_block_bounds: Tuple[float, ...]
    safety_factor: float
    certified: bool
    method: str
    rule: str = RULE_THEORY
    label: str = ""
    violated_blocks: Tuple[int, ...] = ()
    aq_norm: Optional[float] = None
    contraction_norm: Optional[float] = None

    def to_dict(self) -> dict:
        """JSON-ready fields; infinite bounds and NaN norms become None."""

        def plain(value):
            if isinstance(value, float) and not math.isfinite(value):
                return None
            return value

        data = {}
        for key, value in self._asdict().items():
            if isinstance(value, tuple):
                data[key] = [plain(item) for item in value]
            else:
                data[key] = plain(value)
        return data


def mtilde_operator(A_ops: Sequence[LinearOperator]) -> LinearOperator:
    """Block strictly upper operator with block (i, j) = A_i^T A_j for i < j."""
    stacked = BlockRowOperator(A_ops, label="A")
    s = len(A_ops)

    def forward(v):
        parts = stacked.split(v)
        images = [A_ops[j].apply(parts[j]) for j in range(s)]
        out = []
        for i in range(s):
            tail = np.zeros(stacked.rows)
            for j in range(i + 1, s):
                tail = tail + images[j]
            out.append(A_ops[i].adjoint_apply(tail))
        return np.concatenate(out)

    def adjoint(w):
        parts = stacked.split(w)
        images = [A_ops[i].apply(parts[i]) for i in range(s)]
        out = []
        head = np.zeros(stacked.rows)
        for j in range(s):
            out.append(A_ops[j].adjoint_apply(head))
            head = head + images[j]
        return np.concatenate(out)

    return LinearOperator(stacked.cols, stacked.cols, forward, adjoint, label="M2~")


def mtilde_norm(A_ops: Sequence[LinearOperator]) -> float:
    """|M2 / beta|_2, which does not depend on beta; 0 for a single block."""
    if not A_ops:
        raise SizingError(message="at least one block is required")
    if len(A_ops) == 1:
        return 0.0
    return math.sqrt(op_norm_sq_est(mtilde_operator(A_ops)))


def block_norms_sq(A_ops: Sequence[LinearOperator]) -> List[float]:
    return [op_norm_sq_est(op) for op in A_ops]


def _bound(value: float) -> float:
    return 1.0 / value if value > 0 else math.inf


def analytic_bounds(family: str, A_ops: Sequence[LinearOperator], partition=()) -> Tuple[float, List[float]]:
    """(|M2~|, per-block bounds) for the implicit, explicit and hybrid families."""
    mt = mtilde_norm(A_ops)
    implicit = set(range(len(A_ops))) if family in IMPLICIT_FAMILIES else set()
    if family == FAMILY.HYBRID:
        implicit = {int(i) for i in partition}
    norms = block_norms_sq(A_ops)
    bounds = [_bound(2.0 * mt) if i in implicit else _bound(norms[i] + 2.0 * mt) for i in range(len(A_ops))]
    return mt, bounds


def stacked_scaled_norm(A_ops: Sequence[LinearOperator], alphas: Sequence[float]) -> float:
    """|A Q|_2 with Q = diag(sqrt(alpha_i) I)."""
    weighted = BlockRowOperator([scaled(op, math.sqrt(alpha)) for op, alpha in zip(A_ops, alphas)], label="AQ")
    return math.sqrt(op_norm_sq_est(weighted))


def certify_step_sizes(
    family: str,
    A_ops: Sequence[LinearOperator],
    alphas: Sequence[float],
    beta: float,
    theta: float = 0.0,
    partition=(),
    rule: str = RULE_THEORY,
    safety_factor: Optional[float] = None,
) -> StepSizeCertificate:
    """Decide whether ``alphas`` and ``beta`` are covered by the convergence theory of ``family``."""
    family = resolve_family(family)
    if rule not in RULES:
        raise ValueError("Unknown step-size rule: {}".format(rule))
    if len(alphas) != len(A_ops):
        raise SizingError.dimensionMismatchError("alphas", len(A_ops), len(alphas))
    if any(alpha <= 0 for alpha in alphas) or beta <= 0:
        raise ValueError("step sizes must be positive")
    safety_factor = get_step_size_safety() if safety_factor is None else safety_factor
    alphas = tuple(float(alpha) for alpha in alphas)
    s = len(A_ops)

    if family in PD_FAMILIES:
        aq = stacked_scaled_norm(A_ops, alphas)
        certified = aq < 1.0
        certificate = StepSizeCertificate(
            family,
            alphas,
            beta,
            float("nan"),
            (),
            safety_factor,
            certified,
            "aq_norm",
            violated_blocks=() if certified else tuple(range(s)),
            aq_norm=aq,
        )
    elif family in CONDITION_M_FAMILIES:
        certificate = _certify_by_condition_m(family, A_ops, alphas, beta, theta, safety_factor)
    else:
        mt, bounds = analytic_bounds(family, A_ops, partition)
        violated = tuple(i for i in range(s) if not alphas[i] < bounds[i])
        certificate = StepSizeCertificate(
            family, alphas, beta, mt, tuple(bounds), safety_factor, not violated, "analytic", violated_blocks=violated
        )

    if rule == RULE_PAPER_PRACTICAL:
        certificate = certificate._replace(certified=False, rule=rule, label=PRACTICAL_LABEL)
    elif not certificate.label:
        certificate = certificate._replace(label="certified" if certificate.certified else "rejected")

    logger.info(
        "Step sizes {} for {} ({}): {}".format(list(alphas), family, certificate.method, certificate.label)
    )
    return certificate


def _certify_by_condition_m(family, A_ops, alphas, beta, theta, safety_factor) -> StepSizeCertificate:
    dim = sum(op.cols for op in A_ops) + A_ops[0].rows
    if dim > get_condition_m_max_dim():
        logger.warning("Condition-M check skipped for {}: n + m = {} is too large".format(family, dim))
        return StepSizeCertificate(
            family, alphas, beta, math.nan, (), safety_factor, False, "unavailable", label="not certified (too large)"
        )
    mt = mtilde_norm(A_ops)

    report = check_condition_m(build_matrix_set(family, A_ops, alphas, beta, theta=theta))
    return StepSizeCertificate(
        family,
        alphas,
        beta,
        mt,
        (),
        safety_factor,
        report.passed,
        "condition_m",
        violated_blocks=() if report.passed else tuple(range(len(A_ops))),
        contraction_norm=report.contraction_norm,
    )


#: halvings tried before a variant suggestion is returned uncertified
MAX_BACKTRACKS = 20


def theta_shrink(family: str, theta: float) -> float:
    """Factor on the base-family bound of a theta variant.

    The diagonal variant moves theta beta / alpha_i from H into M2, the
    off-diagonal variants scale M2 by 1 + theta.
    """
    if family == FAMILY.VARIANT_DIAG:
        if not 0.0 <= theta < 1.0:
            raise ValueError("theta must lie in [0, 1) for {}".format(family))
        return (1.0 - theta) / (1.0 + theta)
    if family in (FAMILY.VARIANT_OFFDIAG, FAMILY.VARIANT_OFFDIAG_EXPLICIT):
        if theta < 0:
            raise ValueError("theta must be non-negative")
        return 1.0 / (1.0 + theta)
    return 1.0


def suggest_step_sizes(
    family: str,
    A_ops: Sequence[LinearOperator],
    beta: float = 1.0,
    safety: Optional[float] = None,
    partition=(),
    theta: float = 0.0,
) -> List[float]:
    """alpha_i = safety * bound_i.

    The variants start from their base family's bound shrunk by
    :func:`theta_shrink` and halve it until the dense Condition-M check passes,
    when the problem is small enough for that check.
    """
    family = resolve_family(family)
    safety = get_step_size_safety() if safety is None else safety
    if not 0.0 < safety < 1.0:
        raise ValueError("safety factor must lie in (0, 1), got {}".format(safety))

    if family in PD_FAMILIES:
        bound = _bound(op_norm_sq_est(BlockRowOperator(A_ops)))
        bounds = [bound] * len(A_ops)
    elif family == FAMILY.LADMM_DIRECT:
        bounds = [_bound(value) for value in block_norms_sq(A_ops)]
    else:
        base = {FAMILY.VARIANT_DIAG_EXPLICIT: FAMILY.TWO_STEP_EXPLICIT}.get(family, family)
        _, bounds = analytic_bounds(base, A_ops, partition)

    if any(math.isinf(bound) for bound in bounds):
        logger.warning("Unbounded step size suggested for {}: an operator norm vanished".format(family))
    alphas = [safety * theta_shrink(family, theta) * bound for bound in bounds]
    if family in VARIANT_FAMILIES and all(math.isfinite(alpha) for alpha in alphas):
        alphas = _backtrack(family, A_ops, alphas, beta, theta)
    return alphas


def _backtrack(family, A_ops, alphas, beta, theta) -> List[float]:
    if sum(op.cols for op in A_ops) + A_ops[0].rows > get_condition_m_max_dim():
        return alphas
    trial = list(alphas)
    for _ in range(MAX_BACKTRACKS + 1):
        if check_condition_m(build_matrix_set(family, A_ops, trial, beta, theta=theta)).passed:
            return trial
        trial = [0.5 * alpha for alpha in trial]
    logger.warning("No step sizes within {} halvings pass Condition-M for {}".format(MAX_BACKTRACKS, family))
    return alphas
