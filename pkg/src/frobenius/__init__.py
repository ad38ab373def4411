"""Exact computations with Frobenius Lie subalgebras of sl_n.

Seaweed and maximal parabolic subalgebras, the ``M_{n,p} x| gl_n`` family,
indices and Frobenius functionals, principal elements and the integer
spectra of their adjoint action, spanning-tree functionals, and classical
r-matrices.  Arithmetic is exact throughout.
"""

__version__ = "0.1.0"
