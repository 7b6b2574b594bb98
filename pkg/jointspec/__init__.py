"""Joint spectral measures of symmetric matrices, star-graph limits and hikes."""

__version__ = "1.0.0"
