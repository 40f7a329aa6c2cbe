"""Explicit finite-difference heat conduction simulator for bathtub water."""

from bathsim._core import *  # noqa: F401,F403
from bathsim._core import __version__  # noqa: F401
