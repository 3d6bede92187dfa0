# -*- coding: utf-8; -*-
#
# This file is part of twostep-proximity.
#
# For the full copyright and license information, please see the
# LICENSE file distributed with this source code.

"""Family comparison on the sparse MRI problem.

For every family and tolerance the benchmark reports the first iteration whose
eps1 (or eps2) falls below the tolerance, with the PSNR and the stepping time
at that iteration. Families that never get there are reported as ``-``.
"""

from concurrent.futures import ThreadPoolExecutor
from typing import Dict, List, NamedTuple, Optional, Sequence, Tuple
import logging

import numpy as np

from twostep.common import FAMILY, PD_FAMILIES, TABLE_NAMES, get_worker_count, resolve_family
from twostep.conditionm.certify import RULE_PAPER_PRACTICAL, RULE_THEORY, StepSizeCertificate, certify_step_sizes
from twostep.diagnostics.trace import RunTrace
from twostep.engine.problem import AlgorithmSpec, BlockProblem, InnerSolverConfig, IterateState, StopCriteria
from twostep.engine.solver import solve
from twostep.linops.imaging import to_vector
from twostep.mri.metrics import MriMonitor, penalized_objective
from twostep.mri.model import (
    MriConfig,
    MriOperators,
    algorithm1_initial_state,
    build_dual_problem,
    build_operators,
    measure,
    practical_step_sizes,
)
from twostep.mri.phantom import shepp_logan_image
from twostep.mri.sampling import mask_ratio, radial_mask

logger = logging.getLogger(__name__)

DEFAULT_FAMILIES = ("jladmm", "ladmm", "2sfppa")
EPS1_TOLERANCES = (1e-4, 1e-5, 1e-6)
EPS2_TOLERANCES = (5e-5, 5e-6, 5e-7)
TABLE_HEADER = ("family", "epsilon", "iterations", "psnr_db", "seconds")
MISSING = "-"


class MriExperiment(NamedTuple):
    """Everything shared read-only by the family runs."""

    cfg: MriConfig
    mask: np.ndarray
    ops: MriOperators
    u_star: np.ndarray
    b: np.ndarray
    problem: BlockProblem
    initial_state: IterateState

    @property
    def ratio(self) -> float:
        return mask_ratio(self.mask, self.cfg.d)


def prepare(cfg: MriConfig, mask: Optional[np.ndarray] = None) -> MriExperiment:
    image = shepp_logan_image(cfg.d1, cfg.d2)
    mask = radial_mask(cfg.d1, cfg.d2, cfg.n_lines) if mask is None else mask
    ops = build_operators(cfg, mask)
    b = measure(image, ops.K.mask)
    problem = build_dual_problem(cfg, ops.K.mask, b, operators=ops)
    initial = algorithm1_initial_state(cfg, ops, b)
    logger.info(
        "MRI experiment {}x{}: {} lines, sampling ratio {:.4f}".format(
            cfg.d1, cfg.d2, cfg.n_lines, mask_ratio(ops.K.mask, cfg.d)
        )
    )
    return MriExperiment(cfg, ops.K.mask, ops, to_vector(image), b, problem, initial)


def family_spec(family: str, experiment: MriExperiment) -> AlgorithmSpec:
    family = resolve_family(family)
    alphas = tuple(float(alpha) for alpha in experiment.cfg.alphas or practical_step_sizes(family, experiment.ops))
    return AlgorithmSpec(family, alphas, float(experiment.cfg.beta), inner=InnerSolverConfig())


def estimate_fstar(experiment: MriExperiment, iterations: Optional[int] = None) -> float:
    """Smallest F(u) + tau |K u - b| seen along an LADMM run."""
    cfg, ops, b = experiment.cfg, experiment.ops, experiment.b
    iterations = iterations or cfg.fstar_iterations
    best = {"value": np.inf}

    def track(state, record):
        best["value"] = min(best["value"], penalized_objective(cfg, ops, -state.y, b))

    solve(
        experiment.problem,
        family_spec(FAMILY.LADMM_DIRECT, experiment),
        StopCriteria(max_iter=iterations, kkt_tol=None),
        hooks=[track],
        initial_state=experiment.initial_state,
        label="fstar",
    )
    logger.info("F* estimate after {} LADMM iterations: {:.10g}".format(iterations, best["value"]))
    return float(best["value"])


def certify_family(family: str, experiment: MriExperiment, alphas: Sequence[float]) -> StepSizeCertificate:
    """Certificate of the steps a family ran with.

    The default steps of the Gauss-Seidel families are the practical ones and are
    labelled as such; the Jacobi baseline and explicit ``alphas`` face the theory.
    """
    family = resolve_family(family)
    practical = experiment.cfg.alphas is None and family not in PD_FAMILIES
    certificate = certify_step_sizes(
        family,
        experiment.problem.operators,
        alphas,
        experiment.cfg.beta,
        rule=RULE_PAPER_PRACTICAL if practical else RULE_THEORY,
    )
    if not certificate.certified:
        logger.warning("{} ran with step sizes {}: {}".format(family, list(alphas), certificate.label))
    return certificate


class FamilyRun(NamedTuple):

    family: str
    name: str
    alphas: Tuple[float, ...]
    trace: RunTrace
    image: np.ndarray


class BenchmarkRow(NamedTuple):
    family: str
    epsilon: float
    iterations: Optional[int] = None
    psnr_db: Optional[float] = None
    seconds: Optional[float] = None

    @property
    def reached(self) -> bool:
        return self.iterations is not None

    def as_csv_row(self) -> List:
        return [MISSING if value is None else value for value in self]


def first_hits(run: FamilyRun, field: str, tolerances: Sequence[float]) -> List[BenchmarkRow]:
    rows = []
    for epsilon in tolerances:
        index = run.trace.first_below(field, epsilon)
        if index is None:
            rows.append(BenchmarkRow(run.name, epsilon))
            continue
        record = run.trace[index]
        rows.append(BenchmarkRow(run.name, epsilon, record["k"], record["psnr"], record["seconds"]))
    return rows


def run_family(family: str, experiment: MriExperiment, fstar: Optional[float]) -> FamilyRun:
    spec = family_spec(family, experiment)
    name = TABLE_NAMES.get(spec.family, spec.family)
    monitor = MriMonitor(experiment.cfg, experiment.ops, experiment.b, experiment.u_star, fstar)
    state, trace = solve(
        experiment.problem,
        spec,
        StopCriteria(max_iter=experiment.cfg.max_iter, kkt_tol=None),
        hooks=[monitor],
        initial_state=experiment.initial_state,
        label=name,
    )
    return FamilyRun(spec.family, name, spec.alphas, trace, -state.y)


class BenchmarkResult(NamedTuple):
    experiment: MriExperiment
    fstar: float
    runs: Dict[str, FamilyRun]
    eps1_rows: List[BenchmarkRow]
    eps2_rows: List[BenchmarkRow]

    def iterations_to(self, name: str, epsilon: float) -> Optional[int]:
        for row in self.eps1_rows:
            if row.family == name and row.epsilon == epsilon:
                return row.iterations
        return None


def benchmark(
    cfg: MriConfig,
    families: Sequence[str] = DEFAULT_FAMILIES,
    eps1_tols: Sequence[float] = EPS1_TOLERANCES,
    eps2_tols: Sequence[float] = EPS2_TOLERANCES,
    workers: Optional[int] = None,
    fstar: Optional[float] = None,
    experiment: Optional[MriExperiment] = None,
) -> BenchmarkResult:
    """Run each family from the same start and tabulate eps1 and eps2 hits."""
    experiment = experiment or prepare(cfg)
    if fstar is None:
        fstar = estimate_fstar(experiment)
    workers = workers or get_worker_count()

    with ThreadPoolExecutor(max_workers=workers) as pool:
        futures = [pool.submit(run_family, family, experiment, fstar) for family in families]
        runs = [future.result() for future in futures]

    eps1_rows: List[BenchmarkRow] = []
    eps2_rows: List[BenchmarkRow] = []
    for run in runs:
        eps1_rows.extend(first_hits(run, "eps1", eps1_tols))
        eps2_rows.extend(first_hits(run, "eps2", eps2_tols))
        logger.info("{}: {}".format(run.name, [row.iterations for row in eps1_rows if row.family == run.name]))
    return BenchmarkResult(experiment, fstar, {run.name: run for run in runs}, eps1_rows, eps2_rows)
