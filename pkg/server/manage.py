#!/usr/bin/env python
# -*- coding: utf-8; -*-
#
# This file is part of twostep-proximity.
#
# For the full copyright and license information, please see the
# LICENSE file distributed with this source code.

"""twostep command line: check, solve, mri and rate."""

from flask.cli import FlaskGroup

from twostep.factory import get_app


def create_app():
    import settings

    return get_app(settings_module=settings)


cli = FlaskGroup(create_app=create_app, add_default_commands=False)

if __name__ == "__main__":
    cli()
