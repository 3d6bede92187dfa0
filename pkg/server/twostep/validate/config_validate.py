# -*- coding: utf-8; -*-
#
# This file is part of twostep-proximity.
#
# For the full copyright and license information, please see the
# LICENSE file distributed with this source code.

"""Run-configuration schemas and their line diagnostics."""

from typing import Any, Dict, List, Optional
import json

from cerberus import Validator

from twostep.common import resolve_family
from twostep.errors import ConfigError, OutputError

REQUIRED_ERROR = "{} is a required field"

STEP_RULES = ["theory", "paper_practical"]

NUMBERS = {"type": "list", "schema": {"type": "number"}}

BLOCK_SCHEMA = {
    "A": {"type": "list", "required": True, "empty": False},
    "function": {"type": "string", "allowed": ["l1", "box", "linear", "zero"], "default": "l1"},
    "weights": {"type": ["number", "list"]},
    "radii": {"type": ["number", "list"]},
    "c": dict(NUMBERS, dependencies={"function": ["linear"]}),
}

PROBLEM_SCHEMA = {
    "kind": {"type": "string", "allowed": ["three_block_l1", "random", "blocks"], "default": "three_block_l1"},
    "seed": {"type": "integer", "min": 0},
    "m": {"type": "integer", "min": 1},
    "sizes": {"type": "list", "empty": False, "schema": {"type": "integer", "min": 1}},
    "blocks": {"type": "list", "empty": False, "schema": {"type": "dict", "schema": BLOCK_SCHEMA}},
    "b": NUMBERS,
    "label": {"type": "string"},
}


def algorithm_schema(alphas_required: bool) -> Dict[str, Any]:
    return {
        "family": {"type": "string", "required": True, "family": True},
        "alphas": {
            "type": "list",
            "required": alphas_required,
            "empty": False,
            "schema": {"type": "number", "positive": True},
        },
        "beta": {"type": "number", "required": True, "positive": True},
        "theta": {"type": "number", "min": 0, "default": 0.0},
        "partition": {"type": "list", "schema": {"type": "integer", "min": 0}, "default": []},
        "rule": {"type": "string", "allowed": STEP_RULES, "default": "theory"},
        "safety": {"type": "number", "positive": True, "max": 1},
        "max_inner": {"type": "integer", "min": 1},
        "inner_tol": {"type": "number", "positive": True},
    }


STOP_SCHEMA = {
    "max_iter": {"type": "integer", "min": 1, "default": 5000},
    "kkt_tol": {"type": "number", "positive": True, "nullable": True, "default": 1e-8},
    "eps2_tol": {"type": "number", "positive": True, "nullable": True, "default": None},
}

MRI_SCHEMA = {
    "d1": {"type": "integer", "min": 16},
    "d2": {"type": "integer", "min": 16},
    "n_lines": {"type": "integer", "min": 1},
    "mu": {"type": "number", "positive": True},
    "lambda_lowpass": {"type": "number", "min": 0},
    "lambda_highpass": {"type": "number", "min": 0},
    "alphas": {
        "type": "list",
        "nullable": True,
        "minlength": 3,
        "maxlength": 3,
        "schema": {"type": "number", "positive": True},
    },
    "beta": {"type": "number", "positive": True},
    "tau": {"type": "number", "min": 0},
    "fstar_iters": {"type": "integer", "min": 1, "nullable": True},
    "max_iter": {"type": "integer", "min": 1},
}

OUT = {"type": "string", "empty": False}

SCHEMAS = {
    "check": {
        "problem": {"type": "dict", "schema": PROBLEM_SCHEMA, "excludes": "mri"},
        "mri": {"type": "dict", "schema": MRI_SCHEMA, "excludes": "problem"},
        "algorithm": {"type": "dict", "required": True, "schema": algorithm_schema(True)},
        "out": OUT,
    },
    "solve": {
        "problem": {"type": "dict", "schema": PROBLEM_SCHEMA, "default": {}},
        "algorithm": {"type": "dict", "required": True, "schema": algorithm_schema(False)},
        "stop": {"type": "dict", "schema": STOP_SCHEMA, "default": {}},
        "out": OUT,
    },
    "mri": {
        "mri": {"type": "dict", "schema": MRI_SCHEMA, "default": {}},
        "families": {"type": "list", "empty": False, "schema": {"type": "string", "family": True}},
        "eps1_tols": {"type": "list", "empty": False, "schema": {"type": "number", "positive": True}},
        "eps2_tols": {"type": "list", "empty": False, "schema": {"type": "number", "positive": True}},
        "fstar": {"type": "number", "positive": True, "nullable": True},
        "out": OUT,
    },
}
SCHEMAS["rate"] = dict(SCHEMAS["solve"], rho={"type": "number", "min": 0, "default": 0.0})


class ConfigValidator(Validator):
    def _validate_family(self, family, field, value):
        """
        {'type': 'boolean'}
        """
        if family and isinstance(value, str):
            try:
                resolve_family(value)
            except ValueError:
                self._error(field, "is not a known algorithm family")

    def _validate_positive(self, positive, field, value):
        """
        {'type': 'boolean'}
        """
        if positive and isinstance(value, (int, float)) and not value > 0:
            self._error(field, "must be positive")


def error_lines(errors: Dict[Any, Any], prefix: str = "") -> List[str]:
    """Flatten cerberus errors to ``FIELD reason`` lines, nested fields dotted."""
    lines = []
    for field in sorted(errors, key=str):
        name = "{}{}".format(prefix, field).upper()
        for error in errors[field]:
            if isinstance(error, dict):
                lines.extend(error_lines(error, name + "."))
            elif error in ("required field", "empty values not allowed"):
                lines.append(REQUIRED_ERROR.format(name))
            else:
                lines.append("{} {}".format(name, error))
    return lines


def validate_config(command: str, data: Any, path: Optional[str] = None) -> Dict[str, Any]:
    """Normalized run configuration of ``command``; raises :class:`ConfigError` listing every problem."""
    if not isinstance(data, dict):
        raise ConfigError.invalidConfigError(["CONFIG must be a JSON object"], path)

    validator = ConfigValidator(SCHEMAS[command])
    validator.allow_unknown = False
    if not validator.validate(data):
        raise ConfigError.invalidConfigError(error_lines(validator.errors), path)

    document = validator.document
    problem = document.get("problem") or {}
    if problem.get("kind") == "blocks":
        lines = []
        if not problem.get("blocks"):
            lines.append(REQUIRED_ERROR.format("PROBLEM.BLOCKS"))
        if "b" not in problem:
            lines.append(REQUIRED_ERROR.format("PROBLEM.B"))
        for index, block in enumerate(problem.get("blocks") or ()):
            if block.get("function") == "linear" and "c" not in block:
                lines.append(REQUIRED_ERROR.format("PROBLEM.BLOCKS.{}.C".format(index)))

        if lines:
            raise ConfigError.invalidConfigError(lines, path)
    return document


def load_config(path: str) -> Dict[str, Any]:
    """Read a JSON run configuration; syntax errors become line diagnostics."""
    try:
        with open(path, "r", encoding="utf-8") as f:
            text = f.read()
    except OSError as error:
        raise OutputError.ioError(path, error)
    try:
        return json.loads(text)
    except json.JSONDecodeError as error:
        raise ConfigError.invalidConfigError(["CONFIG line {}: {}".format(error.lineno, error.msg)], path)
