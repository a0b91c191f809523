"""Associative fuzzy control processor simulator."""

from pamusim._core import *  # noqa: F401,F403
from pamusim._core import __version__  # noqa: F401
