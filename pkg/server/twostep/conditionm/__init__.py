# -*- coding: utf-8; -*-
#
# This file is part of twostep-proximity.
#
# For the full copyright and license information, please see the
# LICENSE file distributed with this source code.

"""Condition-M certification and step-size bounds."""

from twostep.conditionm.matrices import (  # noqa: F401
    MatrixSet,
    BlockLayout,
    build_matrix_set,
    build_E,
    precision_diagonal,
)
from twostep.conditionm.condition import ConditionMReport, check_condition_m  # noqa: F401
from twostep.conditionm.certify import (  # noqa: F401
    StepSizeCertificate,
    RULE_THEORY,
    RULE_PAPER_PRACTICAL,
    PRACTICAL_LABEL,
    mtilde_norm,
    mtilde_operator,
    certify_step_sizes,
    suggest_step_sizes,
    theta_shrink,
)
