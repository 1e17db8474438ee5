"""Free distributive lattices, cube categories and cubical sets on finite data."""

__version__ = "1.0.0"
