"""Exactly solvable deformed Jaynes-Cummings simulator (C++ core)."""

from ._core import *  # noqa: F401,F403
from ._core import __version__  # noqa: F401
