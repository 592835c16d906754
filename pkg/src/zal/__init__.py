"""Empirical laboratory for the argument of zeta on the critical line."""
from importlib.metadata import PackageNotFoundError, version

try:
    __version__ = version("zal")
except PackageNotFoundError:  # pragma: no cover
    __version__ = "0.1.0"
