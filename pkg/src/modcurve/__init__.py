"""Exact-arithmetic verification toolkit for divisor-class computations
on the modular curves X0(35) and X(b5,ns7).

Everything on a verdict path is computed in exact arithmetic: arbitrary
precision integers and rationals, prime fields and their extensions.
No floating point is used anywhere in this package.
"""

__version__ = "0.1.0"
