# -*- coding: utf-8; -*-
#
# This file is part of twostep-proximity.
#
# For the full copyright and license information, please see the
# LICENSE file distributed with this source code.

import logging
from typing import Optional

from twostep.commands.base import Command, config_option, family_option, max_iter_option, out_option
from twostep.commands.solve import run_solver, write_run
from twostep.common import EXIT_CODE
from twostep.diagnostics import RATE_COLUMNS, GapQuery, gap_rate_check, rate_report, rate_rows
from twostep.instances import three_block_saddle

logger = logging.getLogger(__name__)


class RateCommand(Command):
    """
    Check the O(1/k) ergodic and o(1/k) running-minimum rates of a run, and the decay of its partial gap.

    The gap reference is the known saddle point of the builtin three-block instance, otherwise the
    final iterate. Writes rate.json, rate.csv (k, a_k, ergodic, runmin, gap) and manifest.json.

    --config, -c: JSON run configuration, optionally with ``rho`` (dual ball radius)
    --out, -o: output directory
    --max-iter: override stop.max_iter
    --family, -f: override the algorithm family

    Example:
    ::

        $ python manage.py rate -c solve.json --max-iter 2000

    """

    name = "rate"
    option_list = [config_option(), out_option(), max_iter_option(), family_option()]

    def run(self, config: str, out: str = None, max_iter: Optional[int] = None, family: str = None) -> int:
        document = self.load(config, {"algorithm": {"family": family}, "stop": {"max_iter": max_iter}})
        run_dir = self.run_directory(out, document)

        problem, certificate, state, trace = run_solver(document, record_history=True)
        report = rate_report(trace)

        builtin = document["problem"]["kind"] == "three_block_l1"
        reference = three_block_saddle() if builtin else state
        gap = gap_rate_check(trace.history, GapQuery(reference, rho=document["rho"]), problem)

        run_dir.write_json(
            "rate.json",
            {
                "rate": report.summary(),
                "gap": {
                    "reference": "known_solution" if builtin else "final_iterate",
                    "rho": document["rho"],
                    "K": gap.K,
                    "gaps": gap.gaps,
                    "slope": gap.slope,
                    "bounded": gap.bounded,
                    "negative": gap.negative,
                },
                "converged": trace.converged,
                "iterations": len(trace),
            },
        )
        run_dir.write_csv("rate.csv", RATE_COLUMNS, rate_rows(report, dict(zip(gap.K, gap.gaps))))
        write_run(self.name, run_dir, document, problem, certificate)

        logger.info(
            "rate: slope {:.3f}, ergodic bounded {}, running minimum vanishing {}".format(
                report.slope, report.ergodic_bounded, report.runmin_vanishing
            )
        )
        return EXIT_CODE.SUCCESS
