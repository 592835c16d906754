"""Run configuration: defaults < config file < ZAL_ environment < flags.

The config file is flat ``key = value`` text; ``#`` starts a comment and lists
are comma-separated. Keys use underscores (``t_max``), matching flag names
with dashes replaced.
"""
from __future__ import annotations

import os

from .errors import ParseError

ENV_PREFIX = "ZAL_"


def read_config_file(path):
    out = {}
    with open(path) as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ParseError(f"expected 'key = value', got {raw.strip()!r}", line=lineno)
            key, value = (s.strip() for s in line.split("=", 1))
            if not key:
                raise ParseError("empty key", line=lineno)
            out[key.replace("-", "_")] = value
    return out


def read_env(keys, environ=None):
    env = os.environ if environ is None else environ
    out = {}
    for key in keys:
        name = ENV_PREFIX + key.upper()
        if name in env:
            out[key] = env[name]
    return out


def coerce(value, like):
    """Convert a string from a file or the environment to the type of ``like``."""
    if not isinstance(value, str):
        return value
    if isinstance(like, bool):
        return value.strip().lower() in ("1", "true", "yes", "on")
    if isinstance(like, int):
        return int(float(value)) if "e" in value.lower() else int(value)
    if isinstance(like, float):
        return float(value)
    if isinstance(like, list):
        items = [s.strip() for s in value.split(",") if s.strip()]
        proto = like[0] if like else ""
        return [coerce(s, proto) for s in items]
    return value


def resolve(defaults, flags, config_path=None, environ=None):
    """Merge the four layers; ``flags`` holds only options given on the command line."""
    merged = dict(defaults)
    layers = []
    if config_path:
        layers.append(read_config_file(config_path))
    layers.append(read_env(defaults.keys(), environ))
    for layer in layers:
        for key, value in layer.items():
            if key in defaults:
                merged[key] = coerce(value, defaults[key])
    for key, value in flags.items():
        if key in defaults:
            merged[key] = coerce(value, defaults[key])
    return merged
