"""Belief-state planning toolkit for (k,m) multichannel opportunistic access.

Thin re-export of the compiled extension.  When installed as a wheel the
extension lives inside this package; in a plain CMake build it sits on
PYTHONPATH as a top-level module.
"""

try:
    from ._osa import *  # noqa: F401,F403
    from ._osa import __doc__  # noqa: F401
except ImportError:  # pragma: no cover - plain CMake build layout
    from _osa import *  # noqa: F401,F403
    from _osa import __doc__  # noqa: F401
