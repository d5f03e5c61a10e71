"""Size limits for the exhaustive scans, overridable from the environment."""

from __future__ import annotations

import os
from dataclasses import dataclass

ENV_MOORE_MAX_N = "ORTHOQUANTALE_MOORE_MAX_N"
ENV_CENTER_MAX_SUBSETS = "ORTHOQUANTALE_CENTER_MAX_SUBSETS"
ENV_MAX_ELEMENTS = "ORTHOQUANTALE_MAX_ELEMENTS"


@dataclass(frozen=True)
class SizeLimits:
    moore_scan_max_n: int = 20
    center_scan_max_subsets: int = 1 << 20
    # catalog constructors hold n x n tables; 2**10 elements is ~8 MB per table
    max_elements: int = 1 << 10

    def __post_init__(self):
        for name in ("moore_scan_max_n", "center_scan_max_subsets", "max_elements"):
            if getattr(self, name) <= 0:
                raise ValueError(f"{name} must be positive")

    @classmethod
    def from_env(cls, environ=None) -> SizeLimits:
        environ = os.environ if environ is None else environ
        kwargs = {}
        for key, name in (
            (ENV_MOORE_MAX_N, "moore_scan_max_n"),
            (ENV_CENTER_MAX_SUBSETS, "center_scan_max_subsets"),
            (ENV_MAX_ELEMENTS, "max_elements"),
        ):
            if environ.get(key):
                kwargs[name] = int(environ[key])
        return cls(**kwargs)


DEFAULT_LIMITS = SizeLimits()
