# -*- coding: utf-8; -*-
#
# This file is part of twostep-proximity.
#
# For the full copyright and license information, please see the
# LICENSE file distributed with this source code.

"""Run directories and the files written into them."""

from typing import Any, Iterable, List, Optional, Sequence
import csv
import json
import logging
import math
import os

import numpy as np

from twostep.errors import OutputError

logger = logging.getLogger(__name__)


def json_serialize_numpy(value: Any) -> Any:
    """``default`` hook for :func:`json.dumps`."""
    if isinstance(value, np.integer):
        return int(value)
    if isinstance(value, np.floating):
        return plain(float(value))
    if isinstance(value, np.ndarray):
        return plain(value.tolist())
    if isinstance(value, np.bool_):
        return bool(value)
    raise TypeError("Object of type {} is not JSON serializable".format(type(value).__name__))


def plain(value: Any) -> Any:
    """Copy of ``value`` with tuples as lists and non-finite floats as None."""
    if isinstance(value, dict):
        return {key: plain(item) for key, item in value.items()}
    if isinstance(value, (list, tuple)):
        return [plain(item) for item in value]
    if isinstance(value, np.ndarray):
        return plain(value.tolist())
    if isinstance(value, (float, np.floating)) and not math.isfinite(value):
        return None
    return value


def to_json(data: Any) -> str:
    return json.dumps(plain(data), default=json_serialize_numpy, indent=2, sort_keys=True)


def pgm_bytes(image: np.ndarray) -> bytes:
    """8-bit binary PGM of a 2-D image; [0, 1] maps to [0, 255] with clipping."""
    image = np.asarray(image, dtype=float)
    if image.ndim != 2:
        raise ValueError("PGM export needs a 2-D image, got shape {}".format(image.shape))
    height, width = image.shape
    pixels = np.rint(np.clip(image, 0.0, 1.0) * 255.0).astype(np.uint8)
    header = "P5\n{} {}\n255\n".format(width, height).encode("ascii")
    return header + pixels.tobytes(order="C")


def csv_value(value: Any) -> Any:
    return "" if value is None else value


class RunDirectory:
    """Output directory of one command run; remembers what it wrote."""

    def __init__(self, path: str):
        self.path = path
        self.artifacts: List[str] = []
        try:
            os.makedirs(path, exist_ok=True)
        except OSError as error:
            raise OutputError.ioError(path, error)

    def file(self, name: str) -> str:
        return os.path.join(self.path, name)

    def _write(self, name: str, mode: str, writer, **kwargs) -> str:
        path = self.file(name)
        try:
            with open(path, mode, **kwargs) as f:
                writer(f)
        except OSError as error:
            raise OutputError.ioError(path, error)
        if name not in self.artifacts:
            self.artifacts.append(name)
        logger.debug("wrote {}".format(path))
        return path

    def write_json(self, name: str, data: Any) -> str:
        text = to_json(data)
        return self._write(name, "w", lambda f: f.write(text + "\n"), encoding="utf-8")

    def write_csv(self, name: str, header: Sequence[str], rows: Iterable[Sequence[Any]]) -> str:
        def write(f):
            out = csv.writer(f, lineterminator="\n")
            out.writerow(header)
            for row in rows:
                out.writerow([csv_value(value) for value in row])

        return self._write(name, "w", write, newline="", encoding="utf-8")

    def write_pgm(self, name: str, image: np.ndarray) -> str:
        data = pgm_bytes(image)
        return self._write(name, "wb", lambda f: f.write(data))

    def write_array_csv(self, name: str, array: np.ndarray) -> str:
        array = np.atleast_2d(np.asarray(array, dtype=float))
        return self._write(name, "w", lambda f: np.savetxt(f, array, delimiter=",", fmt="%.17g"), encoding="utf-8")

    def write_mask(self, name: str, mask: Iterable[int]) -> str:
        indices = sorted(int(index) for index in mask)
        return self._write(name, "w", lambda f: f.write("".join("{}\n".format(i) for i in indices)), encoding="utf-8")

    def read_json(self, name: str) -> Optional[Any]:
        path = self.file(name)
        try:
            with open(path, "r", encoding="utf-8") as f:
                return json.load(f)
        except FileNotFoundError:
            return None
        except OSError as error:
            raise OutputError.ioError(path, error)


def read_mask(path: str) -> np.ndarray:
    try:
        with open(path, "r", encoding="utf-8") as f:
            return np.array([int(line) for line in f if line.strip()], dtype=np.int64)
    except OSError as error:
        raise OutputError.ioError(path, error)
