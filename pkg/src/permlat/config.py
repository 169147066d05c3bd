"""Runtime bounds, overridable from a JSON file named by PERMLAT_CONFIG."""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, fields

from .errors import ParseError


@dataclass
class Config:
    brute_force_order_bound: int = 2000
    coset_index_cap: int = 100_000
    partition_n_cap: int = 7
    search_limit: int = 10
    iso_order_bound: int = 720


def load_config(path: str | None = None) -> Config:
    """Config from an explicit path, else $PERMLAT_CONFIG, else defaults."""
    if path is None:
        path = os.environ.get("PERMLAT_CONFIG")
    cfg = Config()
    if not path:
        return cfg
    with open(path, encoding="utf-8") as fh:
        try:
            obj = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ParseError(f"{path}: {exc}") from None
    names = {f.name for f in fields(Config)}
    for key, value in obj.items():
        if key not in names:
            raise ParseError(f"{path}: unknown config key {key!r}")
        if not isinstance(value, int) or value < 1:
            raise ParseError(f"{path}: {key} must be a positive integer")
        setattr(cfg, key, value)
    return cfg
