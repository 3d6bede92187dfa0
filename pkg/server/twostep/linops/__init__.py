# -*- coding: utf-8; -*-
#
# This file is part of twostep-proximity.
#
# For the full copyright and license information, please see the
# LICENSE file distributed with this source code.

"""Linear operators, their adjoints and norm estimates."""

from twostep.linops.operators import (  # noqa: F401
    LinearOperator,
    MatrixOperator,
    BlockRowOperator,
    identity,
    scaled,
    stack_rows,
    skew_operator,
    apply,
    adjoint_apply,
    check_adjoint,
    export_dense_csv,
)
from twostep.linops.imaging import (  # noqa: F401
    make_difference_matrix,
    make_tv_operator,
    make_haar_undecimated,
    make_partial_fourier,
    normalize_mask,
    to_image,
    to_vector,
)
from twostep.linops.norms import NormEstimate, estimate_op_norm_sq, op_norm_sq_est, op_norm_est  # noqa: F401
