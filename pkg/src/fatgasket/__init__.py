"""Unique-coding structure of the fat Sierpinski gasket: word combinatorics,
base arithmetic, lexicographic admissibility, exact planar geometry, and
growth/dimension estimates, with a command line front end."""

__version__ = "0.1.0"

from . import admissibility, analysis, bases, geometry, words  # noqa: F401
