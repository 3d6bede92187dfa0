# -*- coding: utf-8; -*-
#
# This file is part of twostep-proximity.
#
# For the full copyright and license information, please see the
# LICENSE file distributed with this source code.

from .base import Command, Option  # noqa
from .check import CheckCommand  # noqa
from .solve import SolveCommand  # noqa
from .mri import MriCommand  # noqa
from .rate import RateCommand  # noqa

COMMANDS = (CheckCommand, SolveCommand, MriCommand, RateCommand)


def register_commands(app):
    for command in COMMANDS:
        app.cli.add_command(command().as_click())
