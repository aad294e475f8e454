"""Exact calculators for homotopy groups of commuting-matrix spaces.

The heavy lifting lives in the compiled extension; this package re-exports
its public surface.
"""

from ._commat import *  # noqa: F401,F403
from ._commat import __doc__ as _ext_doc

__all__ = [name for name in dir() if not name.startswith("_")]
__doc__ = _ext_doc or __doc__
