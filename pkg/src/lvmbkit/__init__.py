"""Exact toolkit for regular LVMB manifolds and their torus bundles over toric bases."""

__version__ = "0.1.0"
