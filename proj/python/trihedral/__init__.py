"""Crepant resolutions of trihedral quotient singularities.

Builds the symmetric unimodular triangulation of the junior simplex for a
trihedral group given by its diagonal generators, computes the Euler number
of the crepant resolution of C^3 / G, and verifies it against independent
conjugacy class counts.
"""

from ._core import (
    analyze,
    report_text,
    sweep,
    triangulate,
    triangulation_svg,
    verify,
)

__all__ = [
    "analyze",
    "report_text",
    "sweep",
    "triangulate",
    "triangulation_svg",
    "verify",
]
