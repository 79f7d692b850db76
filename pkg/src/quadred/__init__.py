"""Exact computational toolkit for quadric bundles over small projective bases.

Three layers:

* :mod:`quadred.poly` — sparse multivariate polynomials over the rationals and
  prime fields, determinants, Groebner bases, zero-dimensional counting.
* :mod:`quadred.chow` — intersection-theory scenes (projective spaces, flag
  bundle towers, zero loci), bundle calculus, Riemann-Roch, degeneracy classes.
* :mod:`quadred.quadbundle` — graded symmetric matrices as quadric bundles,
  hyperbolic reduction/extension, discriminants, node counting.

:mod:`quadred.cli` exposes the whole pipeline as a command-line tool.
"""

__version__ = "0.1.0"
