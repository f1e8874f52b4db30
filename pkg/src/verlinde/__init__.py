"""Exact kernels for symmetric tensor categories in characteristic p.

Backends: finite-dimensional F_p vector spaces (vec), the Verlinde category
Ver_p as the semisimplification of Rep C_p (verp), and k[x]/x^2-modules in
characteristic 2 with the twisted braiding (ver4plus).  On top of them:
degree-truncated graded commutative algebras, Frobenius twists, nil ideals,
and the affine-quotient verification for additive group schemes.
"""

__version__ = "0.1.0"
