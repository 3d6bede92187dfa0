# -*- coding: utf-8; -*-
#
# This file is part of twostep-proximity.
#
# For the full copyright and license information, please see the
# LICENSE file distributed with this source code.

"""Command and Option classes turned into click commands on the app's CLI group."""

from typing import Any, Dict, List, Optional
import inspect
import logging
import os

import click
from flask.cli import with_appcontext

from twostep.common import EXIT_CODE, get_output_dir
from twostep.errors import CommandError, TwoStepError
from twostep.output import RunDirectory
from twostep.validate import load_config, validate_config

logger = logging.getLogger(__name__)


class Option:
    """Deferred :class:`click.Option`; same arguments."""

    def __init__(self, *param_decls, **attrs):
        self.param_decls = param_decls
        self.attrs = attrs

    def to_click(self) -> click.Option:
        return click.Option(self.param_decls, **self.attrs)


def config_option() -> Option:
    return Option(
        "--config", "-c", required=True, type=click.Path(exists=True, dir_okay=False), help="JSON run configuration"
    )


def out_option() -> Option:
    return Option("--out", "-o", default=None, help="output directory, created if absent")


def max_iter_option() -> Option:
    return Option("--max-iter", "max_iter", type=click.IntRange(min=1), default=None, help="override stop.max_iter")


def family_option() -> Option:
    return Option("--family", "-f", default=None, help="override the algorithm family")


class Command:
    """A named CLI command; :meth:`run` returns the process exit code."""

    name = ""
    option_list: List[Option] = []

    def run(self, **kwargs) -> int:
        raise NotImplementedError()

    def __call__(self, **kwargs) -> int:
        try:
            return self.run(**kwargs) or EXIT_CODE.SUCCESS
        except TwoStepError as error:
            click.echo(error.message, err=True)
            return error.exit_code
        except ValueError as error:
            logger.error("{} rejected: {}".format(self.name, error))
            click.echo(str(error), err=True)
            return EXIT_CODE.USAGE
        except Exception as error:
            failure = CommandError.unexpectedError(self.name, error)
            click.echo(failure.message, err=True)
            return failure.exit_code


    def as_click(self) -> click.Command:
        @with_appcontext
        def callback(**kwargs):
            click.get_current_context().exit(self(**kwargs))

        return click.Command(
            self.name,
            callback=callback,
            params=[option.to_click() for option in self.option_list],
            help=inspect.cleandoc(self.__doc__ or ""),
        )

    def load(self, path: str, overrides: Optional[Dict[str, Any]] = None) -> Dict[str, Any]:
        """Read and validate the run configuration; ``overrides`` patch sections before validation."""
        data = load_config(path)
        if isinstance(data, dict):
            for section, values in (overrides or {}).items():
                values = {key: value for key, value in values.items() if value is not None}
                if values and isinstance(data.get(section, {}), dict):
                    data[section] = dict(data.get(section) or {}, **values)
        return validate_config(self.name, data, path)

    def run_directory(self, out: Optional[str], document: Dict[str, Any]) -> RunDirectory:
        path = out or document.get("out") or os.path.join(get_output_dir(), self.name)
        logger.info("{}: writing artifacts to {}".format(self.name, path))
        return RunDirectory(path)
