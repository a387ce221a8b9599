"""Exact combinatorics of residue words on Young diagrams, two models of
the modulus-2 vacuum representation, and 2-adic divisibility verifiers.

The modules are layered: ``arith`` and ``partitions`` are foundations,
``tableaux`` holds the brute-force oracles, ``fock`` and ``polyrep`` are
the two operator models, ``delta`` the lattice verifiers, and
``experiments`` / ``cli`` the reproducible tables and entry points.
"""

__version__ = "0.1.0"
