"""Weak associative laws in symmetric implication zroupoids.

Thin Python layer over the C++ core: terms and identities, finite
algebras, model search and the classification of the 155 weak
associative identities.
"""

from ._zlab import *  # noqa: F401,F403
from ._zlab import (  # noqa: F401
    DataError,
    Error,
    EvalError,
    RangeError,
    TermSyntaxError,
    UnknownNameError,
)

__version__ = "0.1.0"
