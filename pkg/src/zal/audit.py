"""Uniform result record for the empirical audits."""
from __future__ import annotations

import json
import math
from dataclasses import asdict, dataclass, field

import numpy as np

VERDICTS = ("pass", "fail", "inconclusive")


def _plain(v):
    if isinstance(v, dict):
        return {str(k): _plain(x) for k, x in v.items()}
    if isinstance(v, (list, tuple)):
        return [_plain(x) for x in v]
    if isinstance(v, np.ndarray):
        return [_plain(x) for x in v.tolist()]
    if isinstance(v, (np.integer,)):
        return int(v)
    if isinstance(v, (np.floating, float)):
        v = float(v)
        return v if math.isfinite(v) else repr(v)
    if isinstance(v, np.bool_):
        return bool(v)
    return v


@dataclass
class AuditReport:
    name: str
    verdict: str
    params: dict = field(default_factory=dict)
    statistics: dict = field(default_factory=dict)
    seed: int | None = None

    def __post_init__(self):
        if self.verdict not in VERDICTS:
            raise ValueError(f"verdict must be one of {VERDICTS}")

    @property
    def passed(self):
        return self.verdict == "pass"

    def to_dict(self):
        return _plain(asdict(self))

    def to_json(self):
        return json.dumps(self.to_dict(), sort_keys=True, indent=2)
