# -*- coding: utf-8; -*-
#
# This file is part of twostep-proximity.
#
# For the full copyright and license information, please see the
# LICENSE file distributed with this source code.

"""Sparse MRI reconstruction experiment."""

from twostep.mri.phantom import SHEPP_LOGAN, shepp_logan, shepp_logan_image  # noqa: F401
from twostep.mri.sampling import radial_mask, mask_ratio, full_mask  # noqa: F401
from twostep.mri.model import (  # noqa: F401
    MriConfig,
    MriOperators,
    MriState,
    build_operators,
    build_dual_problem,
    measure,
    wavelet_weights,
    primal_objective,
    practical_step_sizes,
    algorithm1_initial_state,
    algorithm1_run,
)
from twostep.mri.metrics import MriMonitor, psnr, eps1, eps2, penalized_objective  # noqa: F401
from twostep.mri.benchmark import (  # noqa: F401
    BenchmarkResult,
    BenchmarkRow,
    MriExperiment,
    benchmark,
    estimate_fstar,
    prepare,
)
