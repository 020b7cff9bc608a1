"""Divisor ranks, harmonic morphisms and gonality on weighted multigraphs."""

from gonal._core import *  # noqa: F401,F403
from gonal._core import __doc__  # noqa: F401
