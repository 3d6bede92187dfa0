# -*- coding: utf-8; -*-
#
# This file is part of twostep-proximity.
#
# For the full copyright and license information, please see the
# LICENSE file distributed with this source code.

"""JSON, CSV, PGM and mask artifacts of command runs."""

from twostep.output.artifacts import (  # noqa: F401
    RunDirectory,
    json_serialize_numpy,
    pgm_bytes,
    plain,
    read_mask,
    to_json,
)
from twostep.output.manifest import MANIFEST_FILE, build_manifest, compare_manifests, write_manifest  # noqa: F401
