# -*- coding: utf-8; -*-
#
# This file is part of twostep-proximity.
#
# For the full copyright and license information, please see the
# LICENSE file distributed with this source code.

import logging

logger = logging.getLogger(__name__)


class TwoStepError(Exception):
    """Base class for twostep errors."""

    #: process exit code used by the command line
    exit_code = 4

    def __init__(self, message=None, exit_code=None, payload=None, exception=None):
        Exception.__init__(self, message)

        #: a human readable error description
        self.message = message
        self.payload = payload or {}

        if exit_code is not None:
            self.exit_code = exit_code

        if exception:
            logger.exception(message or exception)
        elif message:
            logger.error("{} has been raised: {}".format(type(self).__name__, message))

    def __str__(self):
        return "{}: {}".format(repr(self.exit_code), self.message)


class SizingError(TwoStepError, ValueError):
    """Vector or operator dimensions do not agree."""

    exit_code = 2

    @classmethod
    def dimensionMismatchError(cls, what, expected, got):
        return cls(
            message="{}: expected length {}, got {}".format(what, expected, got),
            payload={"expected": expected, "got": got},
        )


class StructureError(TwoStepError, ValueError):
    """A matrix set does not fit the dense reference engine."""

    exit_code = 2


class ConvergenceError(TwoStepError):
    """An iteration left the finite numbers."""

    exit_code = 4

    @classmethod
    def divergedError(cls, label, k):
        return cls(message="{} diverged: non-finite iterate at k={}".format(label, k), payload={"k": k})



class ConfigError(TwoStepError):
    """Malformed run configuration (usage error)."""

    exit_code = 2

    @classmethod
    def invalidConfigError(cls, errors, path=None):
        lines = "\n".join(errors)
        where = " in {}".format(path) if path else ""
        return cls(message="invalid configuration{}:\n{}".format(where, lines), payload={"errors": errors})


class CertificationError(TwoStepError):
    """Step sizes fall outside the convergence theory of their family."""

    exit_code = 1

    @classmethod
    def rejectedError(cls, certificate):
        return cls(
            message="step sizes {} rejected for {}: {} (violated blocks {})".format(
                list(certificate.alphas), certificate.family, certificate.label, list(certificate.violated_blocks)
            ),
            payload=certificate.to_dict(),
        )


class OutputError(TwoStepError):
    """Reading or writing run artifacts failed."""

    exit_code = 3

    @classmethod
    def ioError(cls, path, exception=None):
        return cls(message="I/O failure on {}".format(path), payload={"path": str(path)}, exception=exception)


class CommandError(TwoStepError):
    """A command failed on something other than its input."""

    exit_code = 4

    @classmethod
    def unexpectedError(cls, command, exception):
        return cls(message="{} failed: {!r}".format(command, exception), exception=exception)

