# -*- coding: utf-8; -*-
#
# This file is part of twostep-proximity.
#
# For the full copyright and license information, please see the
# LICENSE file distributed with this source code.

"""``manifest.json``: what a run needs to be repeated exactly."""

from typing import Any, Dict, Optional, Sequence

from deepdiff import DeepDiff

import twostep
from twostep.output.artifacts import RunDirectory, plain
from twostep.types import Manifest

MANIFEST_FILE = "manifest.json"

#: paths that legitimately change between identical runs
VOLATILE_PATHS = (r"\['seconds'\]", r"\['elapsed'\]")


def build_manifest(
    command: str,
    config: Dict[str, Any],
    norms: Optional[Dict[str, float]] = None,
    certificate: Optional[Dict[str, Any]] = None,
    artifacts: Sequence[str] = (),
    measurements: Optional[Dict[str, Any]] = None,
) -> Manifest:
    return {
        "command": command,
        "version": twostep.__version__,
        "config": plain(config),
        "norms": plain(dict(norms or {})),
        "certificate": plain(certificate) if certificate is not None else None,
        "artifacts": sorted(artifacts),
        "measurements": plain(dict(measurements or {})),
    }


def write_manifest(run_dir: RunDirectory, manifest: Manifest) -> str:
    manifest = dict(manifest, artifacts=sorted(set(manifest["artifacts"]) | set(run_dir.artifacts) | {MANIFEST_FILE}))
    return run_dir.write_json(MANIFEST_FILE, manifest)


def compare_manifests(left: Dict[str, Any], right: Dict[str, Any]) -> Dict[str, Any]:
    """Differences between two manifests, ignoring timings; empty when the runs match."""
    return dict(DeepDiff(left, right, exclude_regex_paths=list(VOLATILE_PATHS), significant_digits=12))
