"""Enumeration caps.

The RENNER_BUDGET environment variable, when set to a positive integer,
overrides both the Weyl enumeration cap and the monoid search node budget.
"""

from __future__ import annotations

import os

DEFAULT_WEYL_CAP = 10**6
DEFAULT_SEARCH_NODES = 10**6
DEFAULT_DUAL_DIM = 12
DEFAULT_HILBERT_DIM = 8
DEFAULT_ENUM_DIM = 12


def _env_override() -> int | None:
    raw = os.environ.get("RENNER_BUDGET")
    if not raw:
        return None
    value = int(raw)
    if value <= 0:
        raise ValueError("RENNER_BUDGET must be a positive integer")
    return value


def weyl_cap(explicit: int | None = None) -> int:
    if explicit is not None:
        return explicit
    return _env_override() or DEFAULT_WEYL_CAP


def search_nodes(explicit: int | None = None) -> int:
    if explicit is not None:
        return explicit
    return _env_override() or DEFAULT_SEARCH_NODES
