# -*- coding: utf-8; -*-
#
# This file is part of twostep-proximity.
#
# For the full copyright and license information, please see the
# LICENSE file distributed with this source code.

from typing import Any, Dict, List, Literal, Optional, TypedDict


FAMILY_NAME = Literal[
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
]

PROBLEM_KIND = Literal["three_block_l1", "random", "blocks"]

STEP_RULE = Literal["theory", "paper_practical"]


class BlockConfig(TypedDict, total=False):
    A: List[List[float]]
    function: Literal["l1", "box", "linear", "zero"]
    weights: Any
    radii: Any
    c: List[float]


class ProblemConfig(TypedDict, total=False):
    kind: PROBLEM_KIND
    seed: int
    m: int
    sizes: List[int]
    blocks: List[BlockConfig]
    b: List[float]
    label: str


class AlgorithmConfig(TypedDict, total=False):
    family: str
    alphas: List[float]
    beta: float
    theta: float
    partition: List[int]
    rule: STEP_RULE
    safety: float
    max_inner: int
    inner_tol: float


class StopConfig(TypedDict, total=False):
    max_iter: int
    kkt_tol: Optional[float]
    eps2_tol: Optional[float]


class RunConfig(TypedDict, total=False):
    problem: ProblemConfig
    algorithm: AlgorithmConfig
    stop: StopConfig
    mri: Dict[str, Any]
    families: List[str]
    out: str


class Manifest(TypedDict):
    command: str
    version: str
    config: RunConfig
    norms: Dict[str, float]
    certificate: Optional[Dict[str, Any]]
    artifacts: List[str]
    #: run facts that are not inputs, e.g. the sampling ratio and F* of an MRI run
    measurements: Dict[str, Any]
