"""Signed graph colouring toolkit."""

try:
    from ._sgcol import *  # noqa: F401,F403
    from ._sgcol import __doc__  # noqa: F401
except ImportError:  # built in-tree rather than installed
    from _sgcol import *  # noqa: F401,F403
