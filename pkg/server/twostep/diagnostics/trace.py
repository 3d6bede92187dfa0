# -*- coding: utf-8; -*-
#
# This file is part of twostep-proximity.
#
# For the full copyright and license information, please see the
# LICENSE file distributed with this source code.

"""Per-iteration run records."""

from typing import Any, Dict, Iterator, List, Optional

import numpy as np

FIELDS = (
    "k",
    "step_norm_sq",
    "kkt",
    "feasibility",
    "objective",
    "eps1",
    "eps2",
    "psnr",
    "seconds",
    "inner_stalls",
)


class RunTrace:
    """Ordered iteration records of one run; a record is a dict keyed by :data:`FIELDS`.

    Missing values are stored as ``None``: eps2 is undefined while y is zero and
    PSNR is infinite on exact recovery.
    """

    def __init__(self, label: str = ""):
        self.label = label
        self.records: List[Dict[str, Any]] = []
        self.converged = False
        self.stop_reason: Optional[str] = None
        self.inner_stalls = 0
        self.history: List[Any] = []

    def append(self, record: Dict[str, Any]) -> None:
        unknown = set(record) - set(FIELDS)
        if unknown:
            raise KeyError("unknown trace fields: {}".format(sorted(unknown)))
        self.records.append({field: record.get(field) for field in FIELDS})
        self.inner_stalls += int(record.get("inner_stalls") or 0)

    def __len__(self) -> int:
        return len(self.records)

    def __iter__(self) -> Iterator[Dict[str, Any]]:
        return iter(self.records)

    def __getitem__(self, index) -> Dict[str, Any]:
        return self.records[index]

    @property
    def last(self) -> Optional[Dict[str, Any]]:
        return self.records[-1] if self.records else None

    def column(self, field: str) -> np.ndarray:
        """Values of ``field`` as floats, NaN where missing."""
        return np.array([np.nan if record[field] is None else float(record[field]) for record in self.records])

    def first_below(self, field: str, threshold: float) -> Optional[int]:
        """Index of the first record whose ``field`` is below ``threshold``."""
        for index, record in enumerate(self.records):
            value = record[field]
            if value is not None and value < threshold:
                return index
        return None

    def rows(self, fields=FIELDS) -> List[List[Any]]:
        return [[record[field] for field in fields] for record in self.records]

    def __repr__(self):
        return "<RunTrace {} records={} converged={}>".format(self.label, len(self.records), self.converged)
