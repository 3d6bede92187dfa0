# -*- coding: utf-8; -*-
#
# This file is part of twostep-proximity.
#
# For the full copyright and license information, please see the
# LICENSE file distributed with this source code.

import logging
import logging.config
import os

import yaml

logger = logging.getLogger("twostep")


def configure_logging(file_path):
    """Configure logging from a YAML ``dictConfig`` file.

    Falls back to ``basicConfig`` when the file does not exist.
    """
    if not file_path or not os.path.exists(file_path):
        logging.basicConfig(level=logging.INFO)
        return

    with open(file_path, "r") as f:
        logging_dict = yaml.safe_load(f)

    logging.config.dictConfig(logging_dict)
