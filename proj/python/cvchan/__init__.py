"""Phase-insensitive Gaussian channels, coherence, and entropy production.

Thin wrapper around the C++ extension; see the project README for the
covariance-matrix conventions (vacuum covariance = identity, natural logs).
"""

from ._core import *  # noqa: F401,F403
from ._core import __version__  # noqa: F401
