"""Euler continuants, periodic SODs and higher twists in exact arithmetic."""

__version__ = "0.1.0"
