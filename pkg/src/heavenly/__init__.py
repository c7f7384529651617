"""Exact jet calculus for SDiff(2) extensions and the Plebanski heavenly equations."""

__version__ = "0.1.0"
