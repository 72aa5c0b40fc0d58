"""p-Frobenius numbers, p-Apery sets and denumerants (C++ core)."""

from ._core import *  # noqa: F401,F403
from ._core import PfrobError

__all__ = [name for name in dir() if not name.startswith("_")]
