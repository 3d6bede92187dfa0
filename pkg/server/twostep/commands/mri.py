# -*- coding: utf-8; -*-
#
# This file is part of twostep-proximity.
#
# For the full copyright and license information, please see the
# LICENSE file distributed with this source code.

import logging
from typing import Optional

from twostep.commands.base import Command, config_option, family_option, max_iter_option, out_option
from twostep.commands.check import measured_norms
from twostep.common import EXIT_CODE, get_worker_count
from twostep.linops import to_image
from twostep.mri import MriConfig, benchmark, prepare
from twostep.mri.benchmark import DEFAULT_FAMILIES, EPS1_TOLERANCES, EPS2_TOLERANCES, TABLE_HEADER, certify_family
from twostep.output import build_manifest, write_manifest

logger = logging.getLogger(__name__)

MRI_TRACE_COLUMNS = ("k", "eps1", "eps2", "psnr", "objective", "seconds")


class MriCommand(Command):
    """
    Reconstruct the Shepp-Logan phantom from pseudo-radial samples with each family and tabulate
    the first iterations reaching the eps1 and eps2 tolerances.

    Writes phantom.pgm/.csv, mask.txt, recon_<FAMILY>.pgm/.csv, trace_<FAMILY>.csv,
    benchmark_eps1.csv, benchmark_eps2.csv and manifest.json, which holds the step-size certificate of
    every family. Unreached tolerances are written as "-".

    --config, -c: JSON run configuration with an ``mri`` section
    --out, -o: output directory
    --max-iter: override mri.max_iter
    --family, -f: run a single family instead of JLADMM, LADMM and 2SFPPA

    Example:
    ::

        $ python manage.py mri -c mri64.json -o runs/mri64
        $ TWOSTEP_WORKERS=3 python manage.py mri -c mri256.json

    """

    name = "mri"
    option_list = [config_option(), out_option(), max_iter_option(), family_option()]

    def run(self, config: str, out: str = None, max_iter: Optional[int] = None, family: str = None) -> int:
        document = self.load(config, {"mri": {"max_iter": max_iter}})
        if family:
            document["families"] = [family]
        cfg = MriConfig.from_dict(document["mri"])
        run_dir = self.run_directory(out, document)

        experiment = prepare(cfg)
        result = benchmark(
            cfg,
            document.get("families") or DEFAULT_FAMILIES,
            document.get("eps1_tols") or EPS1_TOLERANCES,
            document.get("eps2_tols") or EPS2_TOLERANCES,
            workers=get_worker_count(),
            fstar=document.get("fstar"),
            experiment=experiment,
        )

        phantom = to_image(experiment.u_star, cfg.d1, cfg.d2)
        run_dir.write_pgm("phantom.pgm", phantom)
        run_dir.write_array_csv("phantom.csv", phantom)
        run_dir.write_mask("mask.txt", experiment.mask)

        for name, run in result.runs.items():
            image = to_image(run.image, cfg.d1, cfg.d2)
            run_dir.write_pgm("recon_{}.pgm".format(name), image)
            run_dir.write_array_csv("recon_{}.csv".format(name), image)
            run_dir.write_csv("trace_{}.csv".format(name), MRI_TRACE_COLUMNS, run.trace.rows(MRI_TRACE_COLUMNS))

        run_dir.write_csv("benchmark_eps1.csv", TABLE_HEADER, [row.as_csv_row() for row in result.eps1_rows])
        run_dir.write_csv("benchmark_eps2.csv", TABLE_HEADER, [row.as_csv_row() for row in result.eps2_rows])

        norms = measured_norms(list(experiment.ops))
        certificates = {
            name: certify_family(run.family, experiment, run.alphas).to_dict() for name, run in result.runs.items()
        }
        measurements = {
            "mask_ratio": experiment.ratio,
            "fstar": result.fstar,
            "alphas": {name: list(run.alphas) for name, run in result.runs.items()},
        }
        manifest = build_manifest(self.name, document, norms, certificates, measurements=measurements)
        write_manifest(run_dir, manifest)

        logger.info("mri: {} families, sampling ratio {:.4f}".format(len(result.runs), experiment.ratio))
        return EXIT_CODE.SUCCESS
