# -*- coding: utf-8; -*-
#
# This file is part of twostep-proximity.
#
# For the full copyright and license information, please see the
# LICENSE file distributed with this source code.

"""Two-step fixed-point proximity algorithms for multi-block separable convex problems."""

import logging

__version__ = "1.0.0"

logger = logging.getLogger(__name__)


def init_app(app):
    """Register the command line interface on the app.

    :param app: flask app built by :func:`twostep.factory.get_app`
    """
    from twostep.commands import register_commands

    register_commands(app)
