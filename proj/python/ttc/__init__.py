"""Exact linear tree codes and triangular totally nonsingular matrices.

Thin wrapper over the C++ core.  Scalars cross the boundary as strings in
each field's text form (residues, "a/b" rationals, comma-joined extension
coefficients); matrices as lists of string lists.
"""

from ._core import *  # noqa: F401,F403
from ._core import Field, Matrix, TreeCode, TtcError  # noqa: F401

__version__ = "0.1.0"
