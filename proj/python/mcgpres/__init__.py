"""Presentations of mapping class groups of nonorientable surfaces."""

from ._core import *  # noqa: F401,F403
from ._core import __doc__  # noqa: F401
