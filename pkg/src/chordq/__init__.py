"""Signless Laplacian spectra and chorded cycles of small graphs."""

__version__ = "0.1.0"
