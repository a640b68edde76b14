"""Spectral and combinatorial tests for [a,b]-factors of graphs."""

from ._factorspec import *  # noqa: F401,F403
from ._factorspec import __doc__  # noqa: F401

__version__ = "0.1.0"
