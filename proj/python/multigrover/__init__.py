"""Multiobject quantum search: full-space simulation, the reduced
two-dimensional model, and cross-validation between the two."""

from ._core import *  # noqa: F401,F403
from ._core import __version__  # noqa: F401
