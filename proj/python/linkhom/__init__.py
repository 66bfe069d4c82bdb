"""Exact chamber, Morse and intersection-ring invariants of linkage moduli spaces."""

try:
    from ._linkhom import *  # noqa: F401,F403
    from ._linkhom import NonGenericError  # noqa: F401
except ImportError:  # in-tree builds put the extension on sys.path directly
    from _linkhom import *  # noqa: F401,F403
    from _linkhom import NonGenericError  # noqa: F401

__version__ = "0.1.0"
