# -*- coding: utf-8; -*-
#
# This file is part of twostep-proximity.
#
# For the full copyright and license information, please see the
# LICENSE file distributed with this source code.

from twostep.proxlib.prox import (  # noqa: F401
    prox_weighted_l1,
    project_group_l2_ball,
    project_box,
    prox_linear_shift,
    prox_of_conjugate,
    group_l2_value,
    weighted_l1_value,
    tv_value,
)
from twostep.proxlib.functions import (  # noqa: F401
    ProxFunction,
    zero_function,
    l1_norm,
    linear_function,
    group_ball_indicator,
    box_indicator,
    point_indicator,
    conjugate,
)
