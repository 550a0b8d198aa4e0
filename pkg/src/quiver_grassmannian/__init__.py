"""Auslander-Reiten theory, quiver Grassmannians and cluster variables for Dynkin quivers."""

__version__ = "0.1.0"
