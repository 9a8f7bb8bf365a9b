"""Point counts, trace identities and maximality scans for curves over finite fields."""

from ._core import *  # noqa: F401,F403
from ._core import Error, __doc__  # noqa: F401
