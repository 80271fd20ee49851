"""xlat: exponent lattices of polynomial roots.

Decides whether the permutation action attached to an irreducible rational
polynomial admits only the two obvious rational invariant subspaces, computes
exponent-lattice bases for the generic polynomial class where that decision
yields a certificate, and cross-checks everything against a high-precision
numeric relation oracle and brute-force root-permutation groups.
"""

__version__ = "0.1.0"
