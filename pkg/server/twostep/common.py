# -*- coding: utf-8; -*-
#
# This file is part of twostep-proximity.
#
# For the full copyright and license information, please see the
# LICENSE file distributed with this source code.

from typing import NamedTuple

from flask import current_app as app, has_app_context

from twostep import default_settings


class Families(NamedTuple):
    PD_PRIMAL_FIRST: str
    PD_DUAL_FIRST: str
    TWO_STEP_IMPLICIT: str
    TWO_STEP_EXPLICIT: str
    LADMM_DIRECT: str
    VARIANT_DIAG: str
    VARIANT_DIAG_EXPLICIT: str
    VARIANT_OFFDIAG: str
    VARIANT_OFFDIAG_EXPLICIT: str
    HYBRID: str


FAMILY: Families = Families(
    "pd_primal_first",
    "pd_dual_first",
    "two_step_implicit",
    "two_step_explicit",
    "ladmm_direct",
    "variant_diag",
    "variant_diag_explicit",
    "variant_offdiag",
    "variant_offdiag_explicit",
    "hybrid",
)

#: names used in the benchmark tables
FAMILY_ALIASES = {
    "jladmm": FAMILY.PD_DUAL_FIRST,
    "ladmm": FAMILY.LADMM_DIRECT,
    "2sfppa": FAMILY.TWO_STEP_EXPLICIT,
    "padmm": FAMILY.TWO_STEP_IMPLICIT,
}

TABLE_NAMES = {
    FAMILY.PD_DUAL_FIRST: "JLADMM",
    FAMILY.LADMM_DIRECT: "LADMM",
    FAMILY.TWO_STEP_EXPLICIT: "2SFPPA",
}

#: families whose own block is resolved by inner iterations
IMPLICIT_FAMILIES = (FAMILY.TWO_STEP_IMPLICIT, FAMILY.VARIANT_DIAG, FAMILY.VARIANT_OFFDIAG)

#: families carrying a theta parameter
THETA_FAMILIES = (FAMILY.VARIANT_DIAG, FAMILY.VARIANT_OFFDIAG, FAMILY.VARIANT_OFFDIAG_EXPLICIT)

PD_FAMILIES = (FAMILY.PD_PRIMAL_FIRST, FAMILY.PD_DUAL_FIRST)


class ExitCodes(NamedTuple):
    SUCCESS: int
    REJECTED: int
    USAGE: int
    IO: int
    FAILURE: int


EXIT_CODE: ExitCodes = ExitCodes(0, 1, 2, 3, 4)


def resolve_family(name: str) -> str:
    """Accept canonical family names and the benchmark aliases."""
    key = name.strip()
    if key in FAMILY:
        return key
    alias = FAMILY_ALIASES.get(key.lower())
    if alias is None:
        raise ValueError("Unknown algorithm family: {}".format(name))
    return alias


def _config(current_app, key, default):
    if current_app:
        return current_app.config.get(key, default)
    if has_app_context():
        return app.config.get(key, default)
    return default


def get_norm_estimate_tol(current_app=None) -> float:
    return float(_config(current_app, "NORM_ESTIMATE_TOL", default_settings.NORM_ESTIMATE_TOL))


def get_norm_estimate_max_iter(current_app=None) -> int:
    return int(_config(current_app, "NORM_ESTIMATE_MAX_ITER", default_settings.NORM_ESTIMATE_MAX_ITER))


def get_step_size_safety(current_app=None) -> float:
    return float(_config(current_app, "STEP_SIZE_SAFETY", default_settings.STEP_SIZE_SAFETY))


def get_inner_max_iter(current_app=None) -> int:
    return int(_config(current_app, "INNER_MAX_ITER", default_settings.INNER_MAX_ITER))


def get_inner_tol(current_app=None) -> float:
    return float(_config(current_app, "INNER_TOL", default_settings.INNER_TOL))


def get_worker_count(current_app=None) -> int:
    return max(1, int(_config(current_app, "TWOSTEP_WORKERS", default_settings.TWOSTEP_WORKERS)))


def get_output_dir(current_app=None) -> str:
    return _config(current_app, "TWOSTEP_OUTPUT_DIR", default_settings.TWOSTEP_OUTPUT_DIR)


def get_condition_m_max_dim(current_app=None) -> int:
    return int(_config(current_app, "CONDITION_M_MAX_DIM", default_settings.CONDITION_M_MAX_DIM))


def get_acceptance(current_app=None) -> bool:
    return bool(_config(current_app, "TWOSTEP_ACCEPTANCE", default_settings.TWOSTEP_ACCEPTANCE))
