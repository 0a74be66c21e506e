"""Desk-scale caps shared by every module.

``FRACDIM_MAX_N`` overrides the graph-size cap at import time; CLI flags
override it again through :func:`configure`.
"""
import os
from dataclasses import dataclass, fields


@dataclass
class Limits:
    max_n: int = 4096  # generated graphs and distance tables
    metric_dim_n: int = 64  # exact metric dimension
    lemma_subset_n: int = 12  # exhaustive subset lemma
    vt_n: int = 128  # automorphism search
    lp_rows: int = 200_000  # reduced LP rows
    sweep_n: int = 6  # exhaustive labeled-graph enumeration


def _from_env() -> Limits:
    lim = Limits()
    raw = os.environ.get("FRACDIM_MAX_N")
    if raw:
        lim.max_n = int(raw)
    return lim


limits = _from_env()


def configure(**overrides) -> Limits:
    """Set caps in place, ignoring ``None`` values. Returns the live object."""
    names = {f.name for f in fields(Limits)}
    for key, value in overrides.items():
        if key not in names:
            raise TypeError(f"unknown limit {key!r}")
        if value is not None:
            setattr(limits, key, int(value))
    return limits
