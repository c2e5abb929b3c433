"""Exact-arithmetic finite models of cyclic star-autonomous categories.

Thin models come from finite quantales, linear models from rational matrix
categories (including the module category of the double of Z2); a shared
axiom engine checks the thirteen coherence conditions for cyclicity data,
the braiding/twist correspondences, enriched-profunctor models, and the
strictification by integer-indexed strings of adjoints.
"""

__version__ = "0.1.0"
