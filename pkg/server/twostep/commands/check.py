# -*- coding: utf-8; -*-
#
# This file is part of twostep-proximity.
#
# For the full copyright and license information, please see the
# LICENSE file distributed with this source code.

import logging
from typing import Any, Dict, List

from twostep.commands.base import Command, config_option, family_option, out_option
from twostep.common import EXIT_CODE
from twostep.conditionm import certify_step_sizes
from twostep.errors import CertificationError
from twostep.instances import problem_from_config
from twostep.linops import LinearOperator, op_norm_sq_est
from twostep.mri import MriConfig, build_operators, radial_mask
from twostep.output import build_manifest, write_manifest

logger = logging.getLogger(__name__)


def problem_operators(document: Dict[str, Any]) -> List[LinearOperator]:
    """A_i of the configured problem; an ``mri`` section gives the dual blocks B^T, W^T, K^T."""
    if "mri" in document:
        cfg = MriConfig.from_dict(document["mri"])
        mask = radial_mask(cfg.d1, cfg.d2, cfg.n_lines)
        ops = build_operators(cfg, mask)
        return [ops.B.T, ops.W.T, ops.K.T]
    return problem_from_config(document.get("problem") or {}).operators


def measured_norms(operators: List[LinearOperator]) -> Dict[str, float]:
    return {operator.label: op_norm_sq_est(operator) for operator in operators}


class CheckCommand(Command):
    """
    Certify step sizes against the convergence theory of an algorithm family.

    Writes certificate.json and manifest.json; exits 0 when certified, 1 when rejected.

    --config, -c: JSON run configuration with an ``algorithm`` section and a ``problem`` or ``mri`` section
    --out, -o: output directory
    --family, -f: override the algorithm family

    Example:
    ::

        $ python manage.py check -c check.json -o runs/check
        $ python manage.py check -c check.json -f ladmm

    """

    name = "check"
    option_list = [config_option(), out_option(), family_option()]

    def run(self, config: str, out: str = None, family: str = None) -> int:
        document = self.load(config, {"algorithm": {"family": family}})
        algorithm = document["algorithm"]
        operators = problem_operators(document)

        certificate = certify_step_sizes(
            algorithm["family"],
            operators,
            algorithm["alphas"],
            algorithm["beta"],
            theta=algorithm["theta"],
            partition=algorithm["partition"],
            rule=algorithm["rule"],
            safety_factor=algorithm.get("safety"),
        )
        norms = measured_norms(operators)

        run_dir = self.run_directory(out, document)
        run_dir.write_json("certificate.json", certificate.to_dict())
        write_manifest(run_dir, build_manifest(self.name, document, norms, certificate.to_dict()))

        logger.info("check: {} ({})".format(certificate.label, certificate.method))
        if not certificate.certified:
            raise CertificationError.rejectedError(certificate)
        return EXIT_CODE.SUCCESS

