"""Exact-arithmetic simulation laboratory for subgroup dynamics of countable groups.

Four group families (wreath products, permutational wreath products, the
piecewise dyadically affine model of Thompson's group F, and Baumslag-Solitar
groups), record statistics of i.i.d. integer sequences, a record-time measure
builder, Chabauty window traces, and Bass-Serre tree computations.
"""

__version__ = "0.1.0"
