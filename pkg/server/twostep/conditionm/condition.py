# -*- coding: utf-8; -*-
#
# This file is part of twostep-proximity.
#
# For the full copyright and license information, please see the
# LICENSE file distributed with this source code.

from typing import NamedTuple, Optional
import logging

import numpy as np

from twostep.conditionm.matrices import MatrixSet
from twostep.errors import SizingError

logger = logging.getLogger(__name__)

ADDITIVITY_TOL = 1e-10
SYMMETRY_TOL = 1e-10
#: H counts as positive definite when its smallest eigenvalue exceeds this fraction of |H|
DEFINITENESS_FLOOR = 1e-12


class ConditionMReport(NamedTuple):
    additivity_error: float
    H: np.ndarray
    h_min_eigenvalue: float
    contraction_norm: float
    passed: bool
    diagnostic: Optional[str] = None


def check_condition_m(ms: MatrixSet) -> ConditionMReport:
    """Check M0 = M1 + M2, H = M0 + M2 positive definite and |H^-1/2 M2 H^-1/2| < 1/2."""
    M0, M1, M2 = (np.asarray(M, dtype=float) for M in ms)
    if M0.ndim != 2 or M0.shape[0] != M0.shape[1] or M1.shape != M0.shape or M2.shape != M0.shape:
        raise SizingError(message="matrix set must hold three square matrices of one size")

    additivity_error = float(np.max(np.abs(M0 - M1 - M2))) if M0.size else 0.0
    H = M0 + M2
    asymmetry = float(np.max(np.abs(H - H.T))) if H.size else 0.0
    scale = max(1.0, float(np.max(np.abs(H)))) if H.size else 1.0
    if asymmetry > SYMMETRY_TOL * scale:
        diagnostic = "H = M0 + M2 is not symmetric (max asymmetry {:.3e})".format(asymmetry)
        logger.info(diagnostic)
        return ConditionMReport(additivity_error, H, float("nan"), float("nan"), False, diagnostic)

    eigenvalues, vectors = np.linalg.eigh((H + H.T) / 2.0)
    h_min = float(eigenvalues[0])
    h_norm = float(np.max(np.abs(eigenvalues)))
    if h_min <= DEFINITENESS_FLOOR * h_norm or h_norm == 0.0:
        diagnostic = "H is not positive definite (smallest eigenvalue {:.3e})".format(h_min)
        return ConditionMReport(additivity_error, H, h_min, float("inf"), False, diagnostic)

    inverse_root = (vectors / np.sqrt(eigenvalues)).dot(vectors.T)
    contraction = float(np.linalg.norm(inverse_root.dot(M2).dot(inverse_root), 2))

    diagnostic = None
    if additivity_error > ADDITIVITY_TOL:
        diagnostic = "M0 != M1 + M2 (max error {:.3e})".format(additivity_error)
    elif contraction >= 0.5:
        diagnostic = "contraction norm {:.6f} is not below 1/2".format(contraction)
    return ConditionMReport(additivity_error, H, h_min, contraction, diagnostic is None, diagnostic)
