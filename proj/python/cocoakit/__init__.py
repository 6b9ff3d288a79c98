"""Omega-automata with transition-based acceptance and chains of co-Büchi
automata: generators, boolean operations, determinization, containment and
lower-bound certificates."""

from ._cocoakit import *  # noqa: F401,F403
from ._cocoakit import __doc__ as _doc

__doc__ = _doc
__version__ = "0.1.0"
