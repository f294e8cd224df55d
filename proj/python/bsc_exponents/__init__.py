"""Reliability-function bounds for the binary symmetric channel.

Thin wrapper around the C++ core; see the functions exported from
``bsc_exponents._core``.
"""

from bsc_exponents._core import *  # noqa: F401,F403
from bsc_exponents._core import __version__  # noqa: F401
