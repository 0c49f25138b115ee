"""SerreLab package initialization.

This package mechanizes the combinatorics of the weight part of Serre-type
conjectures for mod p Galois representations.
"""

__version__ = '0.2.0'
