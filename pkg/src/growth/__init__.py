"""Exact combinatorics of cylindrical growth diagrams, dual equivalence,
wall-crossing monodromy over the real moduli of marked stable curves, and
rational verification of the four-point conic.

Partitions are plain tuples of weakly decreasing positive integers (no
trailing zeros); the ambient d x (n-d) box is carried separately as a
:class:`growth.partitions.Frame`.
"""

from growth.partitions import Frame

__all__ = ["Frame"]
__version__ = "0.1.0"
