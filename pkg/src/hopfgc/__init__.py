"""Exact structure-constant toolkit for Hopf group-coalgebras, graded algebras over discrete
Doi-Hopf data, and the Drinfeld double."""

from .report import TOOL_VERSION as __version__

__all__ = ["__version__"]
