"""Entropy conserving and entropy stable finite volume fluxes for ideal MHD."""

from ._mhd_esfv import *  # noqa: F401,F403
from ._mhd_esfv import __doc__  # noqa: F401
