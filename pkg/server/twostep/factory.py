# -*- coding: utf-8; -*-
#
# This file is part of twostep-proximity.
#
# For the full copyright and license information, please see the
# LICENSE file distributed with this source code.

import logging

from flask import Flask

from twostep.logging import configure_logging

logger = logging.getLogger(__name__)


def get_app(config=None, settings_module=None):
    """App factory.

    :param config: configuration that can override config from the settings modules
    :param settings_module: optional deployment settings module (``server/settings.py``)
    :return: a new Flask app carrying the twostep config and commands
    """
    import twostep

    app = Flask("twostep")
    app.config.from_object("twostep.default_settings")

    if settings_module:
        app.config.from_object(settings_module)

    app.config.update(config or {})

    configure_logging(app.config["LOG_CONFIG_FILE"])
    twostep.init_app(app)
    return app
