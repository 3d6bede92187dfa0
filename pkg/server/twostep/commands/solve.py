# -*- coding: utf-8; -*-
#
# This file is part of twostep-proximity.
#
# For the full copyright and license information, please see the
# LICENSE file distributed with this source code.

import logging
from typing import Any, Dict, Optional, Tuple

from twostep.commands.base import Command, config_option, family_option, max_iter_option, out_option
from twostep.commands.check import measured_norms
from twostep.common import EXIT_CODE, get_inner_max_iter, get_inner_tol, resolve_family
from twostep.conditionm import StepSizeCertificate, certify_step_sizes, suggest_step_sizes
from twostep.diagnostics import RunTrace, rate_report
from twostep.diagnostics.rates import MIN_RATE_LENGTH
from twostep.engine import BlockProblem, InnerSolverConfig, IterateState, StopCriteria, make_spec, solve
from twostep.instances import problem_from_config
from twostep.output import RunDirectory, build_manifest, write_manifest

logger = logging.getLogger(__name__)

TRACE_COLUMNS = ("k", "step_norm_sq", "kkt", "objective", "eps2")


def run_solver(
    document: Dict[str, Any], record_history: bool = False
) -> Tuple[BlockProblem, StepSizeCertificate, IterateState, RunTrace]:
    """Solve the configured problem; step sizes default to the family's suggested ones."""
    problem = problem_from_config(document["problem"])
    algorithm = document["algorithm"]
    family = resolve_family(algorithm["family"])
    beta = algorithm["beta"]
    alphas = algorithm.get("alphas") or suggest_step_sizes(
        family, problem.operators, beta, algorithm.get("safety"), algorithm["partition"], theta=algorithm["theta"]
    )

    certificate = certify_step_sizes(
        family,
        problem.operators,
        alphas,
        beta,
        theta=algorithm["theta"],
        partition=algorithm["partition"],
        rule=algorithm["rule"],
        safety_factor=algorithm.get("safety"),
    )
    if not certificate.certified:
        logger.warning("{} runs with step sizes {} outside its theory: {}".format(family, alphas, certificate.label))

    inner = InnerSolverConfig(
        algorithm.get("max_inner", get_inner_max_iter()), algorithm.get("inner_tol", get_inner_tol())
    )
    spec = make_spec(family, alphas, beta, algorithm["theta"], algorithm["partition"], inner)
    stop = StopCriteria(**document["stop"])
    state, trace = solve(problem, spec, stop, record_history=record_history, label=problem.label)
    return problem, certificate, state, trace


def summarize(trace: RunTrace, state: IterateState, certificate: StepSizeCertificate) -> Dict[str, Any]:
    last = trace.last or {}
    summary = {
        "converged": trace.converged,
        "stop_reason": trace.stop_reason,
        "iterations": len(trace),
        "kkt": last.get("kkt"),
        "feasibility": last.get("feasibility"),
        "objective": last.get("objective"),
        "eps2": last.get("eps2"),
        "inner_stalls": trace.inner_stalls,
        "x": [part.tolist() for part in state.x],
        "y": state.y.tolist(),
        "certificate": certificate.to_dict(),
        "rate": None,
    }
    if len(trace) >= MIN_RATE_LENGTH:
        summary["rate"] = rate_report(trace).summary()
    return summary


def write_run(
    command: str,
    run_dir: RunDirectory,
    document: Dict[str, Any],
    problem: BlockProblem,
    certificate: StepSizeCertificate,
) -> None:
    manifest = build_manifest(command, document, measured_norms(problem.operators), certificate.to_dict())
    write_manifest(run_dir, manifest)


class SolveCommand(Command):
    """
    Run an algorithm family on a block problem.

    Writes trace.csv (k, step_norm_sq, kkt, objective, eps2), summary.json and manifest.json.
    A run that stops at max_iter is flagged in the summary and still exits 0.

    --config, -c: JSON run configuration
    --out, -o: output directory
    --max-iter: override stop.max_iter
    --family, -f: override the algorithm family

    Example:
    ::

        $ python manage.py solve -c solve.json
        $ python manage.py solve -c solve.json -f pd_primal_first --max-iter 200 -o runs/pd

    """

    name = "solve"
    option_list = [config_option(), out_option(), max_iter_option(), family_option()]

    def run(self, config: str, out: str = None, max_iter: Optional[int] = None, family: str = None) -> int:
        document = self.load(config, {"algorithm": {"family": family}, "stop": {"max_iter": max_iter}})
        run_dir = self.run_directory(out, document)

        problem, certificate, state, trace = run_solver(document)
        run_dir.write_csv("trace.csv", TRACE_COLUMNS, trace.rows(TRACE_COLUMNS))
        run_dir.write_json("summary.json", summarize(trace, state, certificate))
        write_run(self.name, run_dir, document, problem, certificate)

        logger.info(
            "solve: {} after {} iterations ({})".format(
                "converged" if trace.converged else "not converged", len(trace), trace.stop_reason
            )
        )
        return EXIT_CODE.SUCCESS
