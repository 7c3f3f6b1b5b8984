"""Tropical crystal machinery on cellular crystals with an exact matrix oracle."""

__version__ = "0.1.0"
