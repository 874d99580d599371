"""Exact two-mode fragmented-condensate states, cat-state observables and
density-density correlation grids."""

from ._core import *  # noqa: F401,F403
from ._core import __version__  # noqa: F401
