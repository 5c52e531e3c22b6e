# Computational kernels for the mw toolkit
"""
This package contains the pure computational kernels of the toolkit.

Modules:
- field: exact Q(sqrt5) arithmetic, parameter parsing and 15-digit rendering
- polynomial: bivariate polynomials with exact rational coefficients
- graphs: bipartite graphs, multigraphs, named families and JSON codecs
- matroids: rank-oracle matroids, bases/circuits, local basis exchange graphs
- tutte: Tutte polynomials by deletion-contraction, corank-nullity and activities
- permtutte: permutation Tutte polynomials, Monte Carlo, bounds, transfer identity
- certify: exact inequality certificates and the circuit-length criterion
- asymptotics: growth constants and the counterexample probe
- errors: exception hierarchy
- utils: environment helpers
"""

__version__ = "1.0.0"
