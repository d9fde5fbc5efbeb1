"""Intersecting families of words: bounds, partition devices, exhaustive
search, and machine-checkable certificates."""

try:
    from ekrwords._ekrwords import *  # wheel layout
    from ekrwords import _ekrwords as _impl
except ImportError:  # in-tree build: module sits next to the package on the path
    from _ekrwords import *
    import _ekrwords as _impl

__all__ = [name for name in dir(_impl) if not name.startswith("_")]
__version__ = "0.1.0"
