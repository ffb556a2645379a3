"""Signed planar graph list coloring: switching and balance, combinatorial
embeddings, boundary-extension solvers, and an exhaustive oracle."""

from ._core import *  # noqa: F401,F403
from ._core import __version__  # noqa: F401
