"""Supersymmetric partners of the Poschl-Teller and delta wells."""

from ._susypt import *  # noqa: F401,F403
from ._susypt import ConvergenceError, DegenerateError, PTParams, SingularityError

__all__ = [name for name in dir() if not name.startswith("_")]
