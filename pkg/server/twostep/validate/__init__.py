# -*- coding: utf-8; -*-
#
# This file is part of twostep-proximity.
#
# For the full copyright and license information, please see the
# LICENSE file distributed with this source code.

from twostep.validate.config_validate import (  # noqa: F401
    REQUIRED_ERROR,
    SCHEMAS,
    ConfigValidator,
    error_lines,
    load_config,
    validate_config,
)
