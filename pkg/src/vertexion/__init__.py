"""Exact-arithmetic engine for six-vertex wavefunctions with triangular
boundary: brute-force lattice contraction, closed-form symmetric-function
evaluation, and exact verification of every property relating them."""

__version__ = "0.1.0"
